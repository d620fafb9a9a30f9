#pragma once

#include <stdexcept>
#include <string>

namespace sio {

/// Base class of every error raised by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Jet arithmetic on operands of different truncation orders.
class JetOrderMismatch : public Error {
 public:
  using Error::Error;
};

/// Reciprocal of a jet whose leading coefficient is zero.
class JetDivisionByZero : public Error {
 public:
  using Error::Error;
};

/// Spline construction with a zero step.
class InvalidStep : public Error {
 public:
  using Error::Error;
};

/// Gauss-Legendre node count outside the tabulated range.
class UnsupportedRule : public Error {
 public:
  using Error::Error;
};

/// Integrand returned a non-finite value; carries the offending node.
class IntegrandFailure : public Error {
 public:
  IntegrandFailure(const std::string& what, double node) : Error(what), node_(node) {}
  double node() const { return node_; }

 private:
  double node_;
};

/// A solver step could not be evaluated; message carries t_i and w.
class StepFailure : public Error {
 public:
  using Error::Error;
};

/// Fixed-point iterate became non-finite or exceeded the blow-up guard.
class Divergence : public Error {
 public:
  using Error::Error;
};

/// Registry lookup for a name that is not registered.
class UnknownProblem : public Error {
 public:
  using Error::Error;
};

}  // namespace sio
