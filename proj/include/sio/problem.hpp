#pragma once

#include <functional>
#include <string>

#include "sio/scalar_field.hpp"

namespace sio {

/// Scalar initial value problem y'(t) = f(t, y(t)), y(t0) = y0.
/// analytic_solution may be empty; when present it must pass through
/// (t0, y0).
struct IvpProblem {
  std::string name;
  ScalarField f;
  double t0 = 0.0;
  double y0 = 0.0;
  std::function<double(double)> analytic_solution;
};

}  // namespace sio
