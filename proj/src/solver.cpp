#include "sio/solver.hpp"

#include <cmath>
#include <string>

#include "sio/quadrature.hpp"
#include "sio/series.hpp"

namespace sio {

namespace {

// Iterates past this magnitude are treated as blow-up, not roundoff.
constexpr double kBlowUpGuard = 1e12;

void validate(const SioConfig& config) {
  if (config.degree < 1) {
    throw Error("spline degree must be >= 1, got " + std::to_string(config.degree));
  }
  if (config.step == 0.0) {
    throw InvalidStep("step must be nonzero");
  }
  if (!(config.fp_tol > 0.0)) {
    throw Error("fixed-point tolerance must be positive");
  }
  if (config.max_fp_iters < 1) {
    throw Error("max_fp_iters must be >= 1");
  }
}

}  // namespace

double apply_operator(const IvpProblem& problem, const Eigen::VectorXd& taylor_coeffs, double t_i,
                      double h, double w, const SioConfig& config) {
  const SplineSegment seg = build_segment(taylor_coeffs, t_i, h, w);
  double integral = 0.0;
  if (config.closed_form_integral) {
    integral = config.closed_form_integral(seg);
  } else {
    try {
      const QuadratureRule rule = gauss_legendre(config.quad_nodes);
      integral = integrate([&](double t) { return problem.f(t, eval_segment(seg, t)); }, t_i,
                           t_i + h, rule);
    } catch (const IntegrandFailure& e) {
      throw StepFailure("step at t_i = " + std::to_string(t_i) + ", w = " + std::to_string(w) +
                        " failed: " + e.what());
    }
  }
  return taylor_coeffs[0] + integral;
}

StepResult fixed_point_step(const IvpProblem& problem, double t_i, double w_i,
                            const SioConfig& config) {
  validate(config);
  const Eigen::VectorXd coeffs = ode_taylor_coefficients(problem.f, t_i, w_i, config.degree);

  StepResult result;
  double w_prev = w_i;
  double prev_residual = -1.0;
  for (int iter = 1; iter <= config.max_fp_iters; ++iter) {
    const double w_new = apply_operator(problem, coeffs, t_i, config.step, w_prev, config);
    if (!std::isfinite(w_new) || std::abs(w_new) > kBlowUpGuard) {
      throw Divergence("fixed-point iterate diverged at t_i = " + std::to_string(t_i) +
                       " (iterate " + std::to_string(iter) + ": " + std::to_string(w_new) + ")");
    }
    const double residual = std::abs(w_new - w_prev);
    result.w_next = w_new;
    result.fp_iterations = iter;
    result.residual = residual;
    if (prev_residual > 0.0) {
      result.contraction_estimate = residual / prev_residual;
    }
    if (residual <= config.fp_tol) {
      result.converged = true;
      break;
    }
    prev_residual = residual;
    w_prev = w_new;
  }
  return result;
}

Trajectory solve(const IvpProblem& problem, const SioConfig& config, int n_steps) {
  validate(config);
  if (n_steps < 1) {
    throw Error("n_steps must be >= 1, got " + std::to_string(n_steps));
  }

  Trajectory traj;
  traj.config = config;
  traj.times.resize(n_steps + 1);
  traj.values.resize(n_steps + 1);
  traj.steps.reserve(n_steps);
  traj.times[0] = problem.t0;
  traj.values[0] = problem.y0;

  auto truncated = [&](int completed) {
    Trajectory partial = traj;
    partial.times.conservativeResize(completed + 1);
    partial.values.conservativeResize(completed + 1);
    return partial;
  };

  for (int i = 0; i < n_steps; ++i) {
    const double t_i = problem.t0 + i * config.step;
    traj.times[i] = t_i;
    StepResult step;
    try {
      step = fixed_point_step(problem, t_i, traj.values[i], config);
    } catch (const Error& e) {
      throw SolveAborted("step " + std::to_string(i + 1) + " failed: " + e.what(), truncated(i));
    }
    if (!step.converged && !config.continue_on_stall) {
      throw SolveAborted("step " + std::to_string(i + 1) + " did not converge within " +
                             std::to_string(config.max_fp_iters) + " iterations (residual " +
                             std::to_string(step.residual) + ")",
                         truncated(i));
    }
    traj.steps.push_back(step);
    traj.times[i + 1] = problem.t0 + (i + 1) * config.step;
    traj.values[i + 1] = step.w_next;
  }
  return traj;
}

double contraction_diagnostic(double lipschitz_estimate, double h, int m) {
  if (lipschitz_estimate < 0.0) {
    throw Error("Lipschitz estimate must be non-negative");
  }
  if (m < 1) {
    throw Error("spline degree must be >= 1");
  }
  return lipschitz_estimate * std::abs(h) / static_cast<double>(m + 1);
}

}  // namespace sio
