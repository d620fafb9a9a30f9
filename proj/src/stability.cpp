#include "sio/stability.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace sio {

double sio_amplification(std::complex<double> z, int m) {
  if (m < 1) {
    throw Error("spline degree must be >= 1, got " + std::to_string(m));
  }
  const double order = static_cast<double>(m + 1);
  std::complex<double> numerator(order, 0.0);
  std::complex<double> z_pow = z;  // z^{k+1}
  double factorial = 1.0;          // (k+1)!
  for (int k = 0; k < m; ++k) {
    factorial *= static_cast<double>(k + 1);
    numerator += static_cast<double>(m - k) * z_pow / factorial;
    z_pow *= z;
  }
  const double denominator = std::abs(std::complex<double>(order, 0.0) - z);
  if (denominator == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return std::abs(numerator) / denominator;
}

double taylor_amplification(std::complex<double> z, int p) {
  if (p < 1) {
    throw Error("Taylor order must be >= 1, got " + std::to_string(p));
  }
  std::complex<double> sum(1.0, 0.0);
  std::complex<double> z_pow(1.0, 0.0);
  double factorial = 1.0;
  for (int k = 1; k <= p; ++k) {
    z_pow *= z;
    factorial *= static_cast<double>(k);
    sum += z_pow / factorial;
  }
  return std::abs(sum);
}

StabilityGrid scan_grid(const std::string& method_tag, const AmplificationFn& amplification,
                        const StabilityWindow& window, int nx, int ny) {
  if (nx < 2 || ny < 2) {
    throw Error("grid resolution must be >= 2 per axis");
  }
  if (!(window.re_min < window.re_max) || !(window.im_min < window.im_max)) {
    throw Error("stability window must have min < max on both axes");
  }
  StabilityGrid grid;
  grid.window = window;
  grid.nx = nx;
  grid.ny = ny;
  grid.method_tag = method_tag;
  grid.values.resize(nx, ny);
  for (int i = 0; i < nx; ++i) {
    for (int j = 0; j < ny; ++j) {
      grid.values(i, j) = amplification({grid.re_at(i), grid.im_at(j)});
    }
  }
  return grid;
}

StabilityGrid scan_sio_grid(int m, const StabilityWindow& window, int nx, int ny) {
  return scan_grid("sio_m" + std::to_string(m),
                   [m](std::complex<double> z) { return sio_amplification(z, m); }, window, nx,
                   ny);
}

StabilityGrid scan_taylor_grid(int p, const StabilityWindow& window, int nx, int ny) {
  return scan_grid("taylor_p" + std::to_string(p),
                   [p](std::complex<double> z) { return taylor_amplification(z, p); }, window, nx,
                   ny);
}

double containment_fraction(const StabilityGrid& inner, const StabilityGrid& outer) {
  if (inner.nx != outer.nx || inner.ny != outer.ny ||
      inner.window.re_min != outer.window.re_min || inner.window.re_max != outer.window.re_max ||
      inner.window.im_min != outer.window.im_min || inner.window.im_max != outer.window.im_max) {
    throw Error("containment_fraction requires grids with identical window and resolution");
  }
  long stable = 0;
  long covered = 0;
  for (int i = 0; i < inner.nx; ++i) {
    for (int j = 0; j < inner.ny; ++j) {
      if (inner.stable_at(i, j)) {
        ++stable;
        if (outer.stable_at(i, j)) {
          ++covered;
        }
      }
    }
  }
  if (stable == 0) {
    return 1.0;
  }
  return static_cast<double>(covered) / static_cast<double>(stable);
}

}  // namespace sio
