#include "sio/quadrature.hpp"

#include <cmath>
#include <string>

namespace sio {

namespace {

// Nodes and weights on [-1, 1] to 20 significant digits; only the
// non-negative half is stored, the negative half mirrors it.
struct HalfRule {
  const double* nodes;
  const double* weights;
  int count;        // entries in the half tables
  bool has_center;  // first entry is the node at 0
};

constexpr double kNodes1[] = {0.0};
constexpr double kWeights1[] = {2.0};

constexpr double kNodes2[] = {0.57735026918962576451};
constexpr double kWeights2[] = {1.0};

constexpr double kNodes3[] = {0.0, 0.77459666924148337704};
constexpr double kWeights3[] = {0.88888888888888888889, 0.55555555555555555556};

constexpr double kNodes4[] = {0.33998104358485626480, 0.86113631159405257522};
constexpr double kWeights4[] = {0.65214515486254614263, 0.34785484513745385737};

constexpr double kNodes5[] = {0.0, 0.53846931010568309104, 0.90617984593866399280};
constexpr double kWeights5[] = {0.56888888888888888889, 0.47862867049936646804,
                                0.23692688505618908751};

constexpr double kNodes6[] = {0.23861918608319690863, 0.66120938646626451366,
                              0.93246951420315202781};
constexpr double kWeights6[] = {0.46791393457269104739, 0.36076157304813860757,
                                0.17132449237917034504};

constexpr double kNodes7[] = {0.0, 0.40584515137739716691, 0.74153118559939443986,
                              0.94910791234275852453};
constexpr double kWeights7[] = {0.41795918367346938776, 0.38183005050511894495,
                                0.27970539148927666790, 0.12948496616886969327};

constexpr double kNodes8[] = {0.18343464249564980494, 0.52553240991632898582,
                              0.79666647741362673959, 0.96028985649753623168};
constexpr double kWeights8[] = {0.36268378337836198297, 0.31370664587788728734,
                                0.22238103445337447054, 0.10122853629037625915};

constexpr HalfRule kHalfRules[] = {
    {kNodes1, kWeights1, 1, true},  {kNodes2, kWeights2, 1, false},
    {kNodes3, kWeights3, 2, true},  {kNodes4, kWeights4, 2, false},
    {kNodes5, kWeights5, 3, true},  {kNodes6, kWeights6, 3, false},
    {kNodes7, kWeights7, 4, true},  {kNodes8, kWeights8, 4, false},
};

}  // namespace

QuadratureRule gauss_legendre(int n) {
  if (n < 1 || n > 8) {
    throw UnsupportedRule("Gauss-Legendre rules are tabulated for 1..8 nodes, got " +
                          std::to_string(n));
  }
  const HalfRule& half = kHalfRules[n - 1];
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  rule.exactness_degree = 2 * n - 1;
  int lo = (n - 1) / 2;      // descending fill for the negative half
  int hi = half.has_center ? lo : lo + 1;  // ascending fill from the center outward
  for (int i = 0; i < half.count; ++i) {
    if (i == 0 && half.has_center) {
      rule.nodes[lo] = 0.0;
      rule.weights[lo] = half.weights[0];
      --lo;
      ++hi;
      continue;
    }
    rule.nodes[lo] = -half.nodes[i];
    rule.weights[lo] = half.weights[i];
    rule.nodes[hi] = half.nodes[i];
    rule.weights[hi] = half.weights[i];
    --lo;
    ++hi;
  }
  return rule;
}

double integrate(const std::function<double(double)>& g, double a, double b,
                 const QuadratureRule& rule) {
  const double mid = 0.5 * (a + b);
  const double half_width = 0.5 * (b - a);
  double acc = 0.0;
  for (int i = 0; i < rule.size(); ++i) {
    const double x = mid + half_width * rule.nodes[i];
    const double gx = g(x);
    if (!std::isfinite(gx)) {
      throw IntegrandFailure("integrand is not finite at t = " + std::to_string(x), x);
    }
    acc += rule.weights[i] * gx;
  }
  return half_width * acc;
}

}  // namespace sio
