#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "sio/reference.hpp"
#include "sio/stability.hpp"

namespace sio {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitNumerical = 3;

/// Which step-integral route the solver commands use. kAuto picks the
/// registry's closed form when the entry ships one, quadrature otherwise.
enum class IntegralRoute { kAuto, kClosedForm, kQuadrature };

StepIntegral resolve_integral(const RegistryEntry& entry, IntegralRoute route);

/// Per-node absolute errors of T_2, T_4 and SIO(m+1) against the analytic
/// solution; rows cover the nodes after t0.
struct ErrorTable {
  std::vector<double> times;
  std::vector<double> analytic;
  std::vector<double> err_t2;
  std::vector<double> err_t4;
  std::vector<double> err_sio;
};

ErrorTable build_error_table(const RegistryEntry& entry, int degree, double h, int n_steps,
                             IntegralRoute route, int quad_nodes);

/// End-point errors of an h-halving study; level j uses h0 / 2^j with
/// base_steps * 2^j steps, so every level lands on the same end time.
struct OrderStudy {
  std::vector<double> h_values;
  std::vector<double> err_sio;
  std::vector<double> err_t2;
  std::vector<double> err_t4;
};

OrderStudy run_order_study(const IvpProblem& problem, const StepIntegral& closed_form, int degree,
                           double h0, int base_steps, int levels, int quad_nodes);

/// log2(e_coarse / e_fine) for one halving; empty when either error is zero
/// (the halving is exact).
std::optional<double> pairwise_slope(double e_coarse, double e_fine);

/// Least-squares slope of log2(error) against log2(h) over all levels;
/// empty when any error is zero.
std::optional<double> fitted_slope(const std::vector<double>& h_values,
                                   const std::vector<double>& errors);

// CSV and SVG emitters. Output is deterministic: identical inputs produce
// byte-identical bytes.
void write_solve_csv(std::ostream& out, const Trajectory& traj, const IvpProblem& problem);
void write_table_csv(std::ostream& out, const ErrorTable& table);
void write_order_csv(std::ostream& out, const OrderStudy& study);
void write_grid_csv(std::ostream& out, const StabilityGrid& grid);
void write_grid_svg(std::ostream& out, const StabilityGrid& grid);

/// Command-line entry point (subcommands: solve, table, order, stability).
/// Returns 0 on success, 2 on usage errors, 3 on numerical failure.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sio
