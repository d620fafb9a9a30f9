#pragma once

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "sio/scalar_field.hpp"

namespace sio {

/// First m Taylor coefficients c_k = y^(k)(t0) / k!, k = 0..m-1, of the
/// solution of y' = f(t, y) through (t0, y0).
///
/// Coefficients are extracted by evaluating f on jets and reading off one new
/// coefficient per pass: c_{k+1} = [f(T, Y)]_k / (k+1), where T is the jet of
/// t at t0 and Y carries the coefficients found so far. Requires f to be
/// evaluable on jets of order m-1 (m >= 2); m = 1 never evaluates f.
Eigen::VectorXd ode_taylor_coefficients(const ScalarField& f, double t0, double y0, int m);

/// Same contract fed by caller-supplied derivative closures instead of jet
/// evaluation: derivatives[k](t, y) must return d^{k+1} y / dt^{k+1} expressed
/// through f and its total derivatives. Needs at least m-1 closures.
Eigen::VectorXd ode_taylor_coefficients(
    const std::vector<std::function<double(double, double)>>& derivatives, double t0, double y0,
    int m);

}  // namespace sio
