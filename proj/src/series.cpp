#include "sio/series.hpp"

#include <string>

namespace sio {

Eigen::VectorXd ode_taylor_coefficients(const ScalarField& f, double t0, double y0, int m) {
  if (m < 1) {
    throw Error("coefficient count m must be >= 1, got " + std::to_string(m));
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(m);
  c[0] = y0;
  if (m == 1) {
    return c;
  }
  const int order = m - 1;
  const Jet t_jet = Jet::variable(t0, order);
  for (int k = 0; k + 1 < m; ++k) {
    // Coefficient k of f(T, Y) depends only on c_0..c_k, all already in place.
    const Jet derivative = f(t_jet, Jet(c));
    c[k + 1] = derivative.coeff(k) / static_cast<double>(k + 1);
  }
  return c;
}

Eigen::VectorXd ode_taylor_coefficients(
    const std::vector<std::function<double(double, double)>>& derivatives, double t0, double y0,
    int m) {
  if (m < 1) {
    throw Error("coefficient count m must be >= 1, got " + std::to_string(m));
  }
  if (static_cast<int>(derivatives.size()) < m - 1) {
    throw Error("need at least " + std::to_string(m - 1) + " derivative closures, got " +
                std::to_string(derivatives.size()));
  }
  Eigen::VectorXd c(m);
  c[0] = y0;
  double factorial = 1.0;
  for (int k = 1; k < m; ++k) {
    factorial *= static_cast<double>(k);
    c[k] = derivatives[k - 1](t0, y0) / factorial;
  }
  return c;
}

}  // namespace sio
