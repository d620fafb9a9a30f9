#pragma once

#include <map>
#include <string>
#include <vector>

#include "sio/solver.hpp"

namespace sio {

/// One step of the Taylor method of order p: advances by the degree-p Taylor
/// polynomial of the solution at (t_i, w_i), i.e. sum_{k<=p} c_k h^k with
/// coefficients from ode_taylor_coefficients.
double taylor_step(const IvpProblem& problem, double t_i, double w_i, double h, int order);

/// Repeated taylor_step over uniformly spaced nodes. Returns the same
/// Trajectory shape as solve(); every StepResult is a trivially converged
/// explicit step.
Trajectory taylor_solve(const IvpProblem& problem, double h, int order, int n_steps);

/// A benchmark problem plus, when f composed with a polynomial integrates in
/// closed form, the exact step integral used to bypass quadrature.
struct RegistryEntry {
  IvpProblem problem;
  StepIntegral closed_form_integral;  // empty when only quadrature applies
};

/// Built-in benchmark problems "example1", "example2", "example3", each with
/// an analytic solution.
const std::map<std::string, RegistryEntry>& problem_registry();

/// Lookup by name; throws UnknownProblem for anything not registered.
const RegistryEntry& find_problem(const std::string& name);

std::vector<std::string> problem_names();

}  // namespace sio
