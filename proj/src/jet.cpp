#include "sio/jet.hpp"

#include <string>

namespace sio {

namespace {

void require_same_order(const Jet& a, const Jet& b) {
  if (a.order() != b.order()) {
    throw JetOrderMismatch("jet operands have orders " + std::to_string(a.order()) + " and " +
                           std::to_string(b.order()));
  }
}

}  // namespace

Jet::Jet(Eigen::VectorXd coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() == 0) {
    throw Error("jet requires at least one coefficient");
  }
}

Jet Jet::constant(double value, int order) {
  if (order < 0) {
    throw Error("jet order must be non-negative");
  }
  Eigen::VectorXd c = Eigen::VectorXd::Zero(order + 1);
  c[0] = value;
  return Jet(std::move(c));
}

Jet Jet::variable(double value, int order) {
  Jet j = constant(value, order);
  if (order >= 1) {
    j.coeffs_[1] = 1.0;
  }
  return j;
}

Jet operator+(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  return Jet(a.coeffs() + b.coeffs());
}

Jet operator-(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  return Jet(a.coeffs() - b.coeffs());
}

Jet operator*(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  const int n = a.order() + 1;
  Eigen::VectorXd c(n);
  for (int k = 0; k < n; ++k) {
    c[k] = a.coeffs().head(k + 1).dot(b.coeffs().head(k + 1).reverse());
  }
  return Jet(std::move(c));
}

Jet operator+(const Jet& a, double s) {
  Eigen::VectorXd c = a.coeffs();
  c[0] += s;
  return Jet(std::move(c));
}

Jet operator+(double s, const Jet& a) { return a + s; }

Jet operator-(const Jet& a, double s) { return a + (-s); }

Jet operator-(double s, const Jet& a) { return (-a) + s; }

Jet operator*(const Jet& a, double s) { return Jet(a.coeffs() * s); }

Jet operator*(double s, const Jet& a) { return a * s; }

Jet reciprocal(const Jet& a) {
  if (a.value() == 0.0) {
    throw JetDivisionByZero("reciprocal of a jet with zero leading coefficient");
  }
  const int n = a.order() + 1;
  Eigen::VectorXd r(n);
  r[0] = 1.0 / a.value();
  for (int k = 1; k < n; ++k) {
    r[k] = -a.coeffs().segment(1, k).dot(r.head(k).reverse()) / a.value();
  }
  return Jet(std::move(r));
}

Jet operator/(const Jet& a, const Jet& b) {
  require_same_order(a, b);
  return a * reciprocal(b);
}

Jet operator/(const Jet& a, double s) { return Jet(a.coeffs() / s); }

Jet operator/(double s, const Jet& a) { return reciprocal(a) * s; }

}  // namespace sio
