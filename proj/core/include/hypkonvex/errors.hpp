#pragma once

#include <stdexcept>
#include <string>

namespace hypkonvex {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of a function (k >= 1, t <= 0, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A shape or function violates its invariants (non-convex polygon, det != 1, ...).
class InvalidShape : public Error {
 public:
  using Error::Error;
};

/// Two functions sampled on different grids were combined.
class GridMismatch : public Error {
 public:
  GridMismatch(std::size_t a, std::size_t b)
      : Error("grid mismatch: " + std::to_string(a) + " vs " + std::to_string(b)) {}
};

/// The vector is isotropic or space-like for the Lorentzian form, so it has no
/// hyperboloid representative (zero-area bodies such as segments).
class NotTimelike : public Error {
 public:
  using Error::Error;
};

/// The reversed Cauchy-Schwarz inequality failed beyond round-off.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

/// A ShapeDoc could not be parsed.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// An iterative method failed to converge.
class ConvergenceError : public Error {
 public:
  using Error::Error;
};

}  // namespace hypkonvex
