#pragma once

#include <functional>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "sio/errors.hpp"
#include "sio/problem.hpp"
#include "sio/spline.hpp"

namespace sio {

/// Exact value of the step integral of f over the segment's graph,
/// bypassing quadrature. Available when f composed with a polynomial is
/// itself integrable in closed form.
using StepIntegral = std::function<double(const SplineSegment&)>;

struct SioConfig {
  int degree = 3;      // spline degree m; the method has order m+1
  double step = 0.1;   // h, nonzero; negative steps integrate backward
  double fp_tol = 1e-14;
  int max_fp_iters = 50;
  int quad_nodes = 3;  // Gauss-Legendre nodes for the step integral
  StepIntegral closed_form_integral;
  bool continue_on_stall = false;  // accept the last iterate instead of aborting
};

/// One fixed-point solve. converged implies residual <= fp_tol.
struct StepResult {
  double w_next = 0.0;
  int fp_iterations = 0;
  double residual = 0.0;  // |w^[l] - w^[l-1]| at exit
  bool converged = false;
  std::optional<double> contraction_estimate;  // last ratio of successive residuals
};

/// Numerical solution over uniformly spaced nodes; values[0] = y0 and
/// steps.size() == times.size() - 1.
struct Trajectory {
  Eigen::VectorXd times;
  Eigen::VectorXd values;
  std::vector<StepResult> steps;
  SioConfig config;
};

/// Raised when solve() stops early; carries everything computed so far.
class SolveAborted : public Error {
 public:
  SolveAborted(const std::string& what, Trajectory partial)
      : Error(what), partial_(std::move(partial)) {}
  const Trajectory& partial() const { return partial_; }

 private:
  Trajectory partial_;
};

/// One application of the step operator: taylor_coeffs[0] plus the integral
/// of f over the graph of the segment built from (taylor_coeffs, t_i, h, w).
/// Uses config.closed_form_integral when set, Gauss-Legendre quadrature
/// otherwise. The coefficients must have been computed at (t_i, w_i).
double apply_operator(const IvpProblem& problem, const Eigen::VectorXd& taylor_coeffs, double t_i,
                      double h, double w, const SioConfig& config);

/// Iterates w^[l] = G(w^[l-1]) from w^[0] = w_i until the residual drops to
/// fp_tol or max_fp_iters is reached. Never throws on a mere stall (the
/// caller inspects converged); throws Divergence when an iterate leaves the
/// finite range.
StepResult fixed_point_step(const IvpProblem& problem, double t_i, double w_i,
                            const SioConfig& config);

/// Advances n_steps nodes from (t0, y0), recomputing the Taylor coefficients
/// at each node from the current value. Aborts with SolveAborted on step
/// failure, or on a non-converged step unless config.continue_on_stall.
Trajectory solve(const IvpProblem& problem, const SioConfig& config, int n_steps);

/// K|h|/(m+1), the sufficient contraction bound. Values >= 1 mean the
/// sufficient condition fails; callers emit a warning, never an error.
double contraction_diagnostic(double lipschitz_estimate, double h, int m);

}  // namespace sio
