#pragma once

#include <complex>
#include <concepts>
#include <functional>
#include <limits>

#include "sio/jet.hpp"

namespace sio {

/// Right-hand side f(t, y) of a scalar ODE, evaluable with t and y drawn from
/// any one scalar system: real, Jet, or complex. Constructed from a callable
/// that is generic in its two arguments, e.g.
///
///   ScalarField f([](const auto& t, const auto& y) { return t - y + 2.0; });
///
/// smoothness_order is the declared number of continuous partial derivatives
/// at the initial point. It is carried as metadata only and never enforced.
class ScalarField {
 public:
  static constexpr int kSmoothEverywhere = std::numeric_limits<int>::max();

  template <class F>
    requires(!std::same_as<std::remove_cvref_t<F>, ScalarField>)
  ScalarField(F f, int smoothness_order = kSmoothEverywhere)  // NOLINT(google-explicit-constructor)
      : real_(f), jet_(f), complex_(std::move(f)), smoothness_order_(smoothness_order) {}

  double operator()(double t, double y) const { return real_(t, y); }
  Jet operator()(const Jet& t, const Jet& y) const { return jet_(t, y); }
  std::complex<double> operator()(const std::complex<double>& t,
                                  const std::complex<double>& y) const {
    return complex_(t, y);
  }

  int smoothness_order() const { return smoothness_order_; }

 private:
  std::function<double(double, double)> real_;
  std::function<Jet(const Jet&, const Jet&)> jet_;
  std::function<std::complex<double>(const std::complex<double>&, const std::complex<double>&)>
      complex_;
  int smoothness_order_;
};

}  // namespace sio
