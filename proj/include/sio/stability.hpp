#pragma once

#include <complex>
#include <functional>
#include <string>

#include <Eigen/Dense>

#include "sio/errors.hpp"

namespace sio {

/// Per-step amplification magnitude of SIO(m+1) on y' = lambda*y at
/// z = lambda*h:
///
///   |m+1 + sum_{k<m} (m-k) z^{k+1} / (k+1)!|  /  |m+1 - z|
///
/// The method is absolutely stable at z iff the value is < 1. The pole
/// z = m+1 returns +inf, which classifies as unstable.
double sio_amplification(std::complex<double> z, int m);

/// Amplification of the Taylor method of order p: |sum_{k<=p} z^k / k!|.
double taylor_amplification(std::complex<double> z, int p);

struct StabilityWindow {
  double re_min = -8.0;
  double re_max = 4.0;
  double im_min = -6.0;
  double im_max = 6.0;
};

/// Amplification sampled at the centers of an nx-by-ny cell grid over a
/// complex-plane window. Entries are >= 0, with +inf marking poles.
struct StabilityGrid {
  StabilityWindow window;
  int nx = 0;
  int ny = 0;
  Eigen::MatrixXd values;  // (nx, ny)
  std::string method_tag;

  double re_at(int i) const {
    return window.re_min + (i + 0.5) * (window.re_max - window.re_min) / nx;
  }
  double im_at(int j) const {
    return window.im_min + (j + 0.5) * (window.im_max - window.im_min) / ny;
  }
  /// Strict boundary convention: amplification exactly 1 is not stable.
  bool stable_at(int i, int j) const {
    const double v = values(i, j);
    return std::isfinite(v) && v < 1.0;
  }
};

using AmplificationFn = std::function<double(std::complex<double>)>;

/// Evaluates an amplification function at every cell center. Deterministic
/// for fixed inputs; requires nx, ny >= 2.
StabilityGrid scan_grid(const std::string& method_tag, const AmplificationFn& amplification,
                        const StabilityWindow& window, int nx, int ny);

StabilityGrid scan_sio_grid(int m, const StabilityWindow& window, int nx, int ny);
StabilityGrid scan_taylor_grid(int p, const StabilityWindow& window, int nx, int ny);

/// Fraction of inner's stable cells that are also stable in outer; 1 when
/// inner has no stable cell. Grids must share window and resolution.
double containment_fraction(const StabilityGrid& inner, const StabilityGrid& outer);

}  // namespace sio
