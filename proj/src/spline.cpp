#include "sio/spline.hpp"

#include <cmath>

namespace sio {

namespace {

double horner(const Eigen::VectorXd& coeffs, double x) {
  double v = 0.0;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    v = v * x + coeffs[k];
  }
  return v;
}

}  // namespace

SplineSegment build_segment(const Eigen::VectorXd& taylor_coeffs, double t_i, double h, double w) {
  if (taylor_coeffs.size() == 0) {
    throw Error("spline segment requires at least one Taylor coefficient");
  }
  if (h == 0.0) {
    throw InvalidStep("spline segment step must be nonzero");
  }
  const double taylor_at_end = horner(taylor_coeffs, h);
  SplineSegment seg;
  seg.t_left = t_i;
  seg.step = h;
  seg.taylor_coeffs = taylor_coeffs;
  seg.leading_coeff = (w - taylor_at_end) / std::pow(h, taylor_coeffs.size());
  seg.end_value = w;
  return seg;
}

double eval_segment(const SplineSegment& seg, double t) {
  const double d = t - seg.t_left;
  double v = seg.leading_coeff;
  for (int k = seg.degree() - 1; k >= 0; --k) {
    v = v * d + seg.taylor_coeffs[k];
  }
  return v;
}

Eigen::VectorXd segment_coefficients(const SplineSegment& seg) {
  Eigen::VectorXd c(seg.degree() + 1);
  c.head(seg.degree()) = seg.taylor_coeffs;
  c[seg.degree()] = seg.leading_coeff;
  return c;
}

double polynomial_step_integral(const Eigen::VectorXd& coeffs, double h) {
  // Antiderivative term by term: sum_k c_k h^{k+1} / (k+1), via Horner in h.
  double v = 0.0;
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= 0; --k) {
    v = v * h + coeffs[k] / static_cast<double>(k + 1);
  }
  return v * h;
}

double integrate_segment(const SplineSegment& seg) {
  return polynomial_step_integral(segment_coefficients(seg), seg.step);
}

}  // namespace sio
