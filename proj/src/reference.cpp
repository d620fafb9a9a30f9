#include "sio/reference.hpp"

#include <cmath>
#include <utility>

#include "sio/series.hpp"

namespace sio {

double taylor_step(const IvpProblem& problem, double t_i, double w_i, double h, int order) {
  if (order < 1) {
    throw Error("Taylor method order must be >= 1, got " + std::to_string(order));
  }
  const Eigen::VectorXd c = ode_taylor_coefficients(problem.f, t_i, w_i, order + 1);
  double v = 0.0;
  for (int k = order; k >= 0; --k) {
    v = v * h + c[k];
  }
  return v;
}

Trajectory taylor_solve(const IvpProblem& problem, double h, int order, int n_steps) {
  if (h == 0.0) {
    throw InvalidStep("step must be nonzero");
  }
  if (n_steps < 1) {
    throw Error("n_steps must be >= 1, got " + std::to_string(n_steps));
  }
  Trajectory traj;
  traj.config.degree = order;
  traj.config.step = h;
  traj.times.resize(n_steps + 1);
  traj.values.resize(n_steps + 1);
  traj.steps.reserve(n_steps);
  traj.times[0] = problem.t0;
  traj.values[0] = problem.y0;
  for (int i = 0; i < n_steps; ++i) {
    const double w = taylor_step(problem, problem.t0 + i * h, traj.values[i], h, order);
    traj.times[i + 1] = problem.t0 + (i + 1) * h;
    traj.values[i + 1] = w;
    traj.steps.push_back(StepResult{w, 0, 0.0, true, std::nullopt});
  }
  return traj;
}

namespace {

// f(t, y) = t - y + 2 has the polynomial integrand t + 2 - S(t), so the step
// integral reduces to the segment integral plus an affine part.
double linear_field_step_integral(const SplineSegment& seg) {
  const double h = seg.step;
  const double affine = seg.t_left * h + 0.5 * h * h + 2.0 * h;
  return affine - integrate_segment(seg);
}

// f(t, y) = y^2: square the segment polynomial by coefficient convolution and
// integrate term by term.
double squared_field_step_integral(const SplineSegment& seg) {
  const Eigen::VectorXd p = segment_coefficients(seg);
  const int n = static_cast<int>(p.size());
  Eigen::VectorXd q = Eigen::VectorXd::Zero(2 * n - 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      q[i + j] += p[i] * p[j];
    }
  }
  return polynomial_step_integral(q, seg.step);
}

std::map<std::string, RegistryEntry> make_registry() {
  std::map<std::string, RegistryEntry> registry;

  registry.emplace(
      "example1",
      RegistryEntry{
          IvpProblem{"example1",
                     ScalarField([](const auto& t, const auto& y) { return t - y + 2.0; }),
                     0.0, 2.0, [](double t) { return (t + 1.0) + std::exp(-t); }},
          linear_field_step_integral});

  registry.emplace(
      "example2",
      RegistryEntry{IvpProblem{"example2",
                               ScalarField([](const auto& t, const auto& y) { return y * y; }),
                               0.0, 1.0, [](double t) { return 1.0 / (1.0 - t); }},
                    squared_field_step_integral});

  registry.emplace(
      "example3",
      RegistryEntry{
          IvpProblem{"example3",
                     ScalarField([](const auto& t, const auto& y) { return 1.0 / (3.0 * y * y); }),
                     0.0, 1.0, [](double t) { return std::cbrt(t + 1.0); }},
          StepIntegral{}});

  return registry;
}

}  // namespace

const std::map<std::string, RegistryEntry>& problem_registry() {
  static const std::map<std::string, RegistryEntry> registry = make_registry();
  return registry;
}

const RegistryEntry& find_problem(const std::string& name) {
  const auto& registry = problem_registry();
  const auto it = registry.find(name);
  if (it == registry.end()) {
    throw UnknownProblem("no problem named '" + name + "' in the registry");
  }
  return it->second;
}

std::vector<std::string> problem_names() {
  std::vector<std::string> names;
  for (const auto& [name, entry] : problem_registry()) {
    names.push_back(name);
  }
  return names;
}

}  // namespace sio
