#pragma once

#include <functional>

#include <Eigen/Dense>

#include "sio/errors.hpp"

namespace sio {

/// Gauss-Legendre rule on [-1, 1]. Nodes are ascending and symmetric about 0,
/// weights are positive and sum to 2; exact for polynomials of degree
/// <= exactness_degree = 2n - 1. Immutable.
struct QuadratureRule {
  Eigen::VectorXd nodes;
  Eigen::VectorXd weights;
  int exactness_degree = 0;

  int size() const { return static_cast<int>(nodes.size()); }
};

/// Rule with n nodes, 1 <= n <= 8, from tables stored to 20 significant
/// digits. No runtime root-finding.
QuadratureRule gauss_legendre(int n);

/// Integral of g over [a, b] by affine transport of the rule; b < a flips the
/// sign. Throws IntegrandFailure when g is non-finite at a node.
double integrate(const std::function<double(double)>& g, double a, double b,
                 const QuadratureRule& rule);

}  // namespace sio
