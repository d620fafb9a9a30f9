#pragma once

#include <Eigen/Dense>

#include "sio/errors.hpp"

namespace sio {

/// The method's interpolant on one step: a single degree-m polynomial in
/// (t - t_left) whose coefficients below the leading term are the solution's
/// Taylor coefficients at t_left and whose value at t_left + step is the free
/// parameter end_value. Immutable; freely shareable across threads.
struct SplineSegment {
  double t_left = 0.0;            // left node t_i
  double step = 0.0;              // h, nonzero; negative steps are allowed
  Eigen::VectorXd taylor_coeffs;  // c_0..c_{m-1}
  double leading_coeff = 0.0;     // coefficient of (t - t_left)^m
  double end_value = 0.0;         // w = S(t_left + step)

  int degree() const { return static_cast<int>(taylor_coeffs.size()); }
};

/// Solves the single interpolation condition S(t_i + h) = w for the leading
/// coefficient: s_m = (w - sum_k c_k h^k) / h^m.
SplineSegment build_segment(const Eigen::VectorXd& taylor_coeffs, double t_i, double h, double w);

/// Horner evaluation in (t - t_left). Defined for all t; the solver only
/// samples |t - t_left| <= |step|.
double eval_segment(const SplineSegment& seg, double t);

/// All m+1 polynomial coefficients [c_0, .., c_{m-1}, s_m].
Eigen::VectorXd segment_coefficients(const SplineSegment& seg);

/// Exact integral of a polynomial sum_k c_k (t - t_i)^k over one step of
/// width h from t_i.
double polynomial_step_integral(const Eigen::VectorXd& coeffs, double h);

/// Exact integral of the segment over [t_left, t_left + step].
double integrate_segment(const SplineSegment& seg);

}  // namespace sio
