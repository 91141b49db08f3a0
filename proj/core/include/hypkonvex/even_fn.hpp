#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <span>
#include <variant>
#include <vector>

#include "hypkonvex/fourier.hpp"
#include "hypkonvex/plane.hpp"
#include "hypkonvex/shapes.hpp"

namespace hypkonvex {

/// Minkowski sum of ellipses and one polygonal part, produced when a combination
/// mixes shape kinds. `ring` is empty, a segment {v, -v}, or polygon vertices (ccw).
struct ShapeSum {
  std::vector<EllipseShape> ellipses;
  std::vector<Vec2> ring;
};

/// Exact descriptor carried alongside samples when a function is known to be
/// the support function of a specific shape.
using ShapeTag = std::variant<std::monostate, EllipseShape, Segment, Polygon, ShapeSum>;

/// The ellipse, segment and polygon summands of a tag (the tag itself when it is basic).
std::vector<ShapeTag> tag_parts(const ShapeTag& tag);

/// Even (pi-periodic) function on the circle, sampled at theta_j = 2 pi j / M.
///
/// Samples are canonical. Fourier coefficients are computed on first use and
/// shared between copies; a value is immutable once constructed, so the
/// cache is the only lazily written state and is guarded by std::call_once.
class EvenFn {
 public:
  /// Throws InvalidShape if M is not a positive multiple of 4, a sample is not
  /// finite, or samples[j] and samples[j + M/2] differ by more than 1e-12 (1 + max|h|).
  explicit EvenFn(std::vector<double> samples, ShapeTag tag = {});

  /// Constant function; a positive value is tagged as the disc of that radius.
  static EvenFn constant(std::size_t M, double value);
  /// Samples f on the grid, mirroring the first half so evenness is exact.
  static EvenFn from_function(std::size_t M, const std::function<double(double)>& f);

  std::size_t grid() const { return samples_.size(); }
  std::span<const double> samples() const { return samples_; }
  double operator[](std::size_t j) const { return samples_[j]; }
  const ShapeTag& tag() const { return tag_; }
  bool tagged() const { return !std::holds_alternative<std::monostate>(tag_); }
  double max_abs() const;

  double angle(std::size_t j) const { return kTwoPi * static_cast<double>(j) / static_cast<double>(grid()); }

  const FourierCoeffs& fourier() const;

  /// Exact closed form when tagged, trigonometric interpolation otherwise.
  double eval_at(double theta) const;
  /// Derivative in theta: closed form when tagged (one-sided at polygon kinks), spectral otherwise.
  double derivative_at(double theta) const;

  /// Same samples with the shape tag removed.
  EvenFn untagged() const;

 private:
  struct Cache;
  std::vector<double> samples_;
  ShapeTag tag_;
  std::shared_ptr<Cache> cache_;
};

/// Closed-form support function of a tag at angle theta (tag must not be empty).
double tag_value(const ShapeTag& tag, double theta);
double tag_derivative(const ShapeTag& tag, double theta);

}  // namespace hypkonvex
