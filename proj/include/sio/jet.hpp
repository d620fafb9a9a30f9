#pragma once

#include <Eigen/Dense>

#include "sio/errors.hpp"

namespace sio {

/// Truncated power series of a scalar quantity.
///
/// coeff(k) is the k-th Taylor coefficient, i.e. the k-th derivative divided
/// by k!. Arithmetic truncates exactly at the stored order: no coefficient
/// beyond index order() is ever read or written. Values are immutable after
/// construction, so jets may be shared freely across threads.
class Jet {
 public:
  explicit Jet(Eigen::VectorXd coeffs);

  /// Jet of a constant: [value, 0, ..., 0].
  static Jet constant(double value, int order);

  /// Jet of the independent variable at `value`: [value, 1, 0, ..., 0].
  static Jet variable(double value, int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  double value() const { return coeffs_[0]; }
  double coeff(int k) const { return coeffs_[k]; }
  const Eigen::VectorXd& coeffs() const { return coeffs_; }

  Jet operator-() const { return Jet(-coeffs_); }

 private:
  Eigen::VectorXd coeffs_;
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);  // Cauchy product truncated at order()

Jet operator+(const Jet& a, double s);
Jet operator+(double s, const Jet& a);
Jet operator-(const Jet& a, double s);
Jet operator-(double s, const Jet& a);
Jet operator*(const Jet& a, double s);
Jet operator*(double s, const Jet& a);

/// Multiplicative inverse; requires value() != 0.
Jet reciprocal(const Jet& a);

Jet operator/(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, double s);
Jet operator/(double s, const Jet& a);

}  // namespace sio
