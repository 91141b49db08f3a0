#pragma once

#include <cmath>

#include "hypkonvex/plane.hpp"

namespace hypkonvex {

/// A direction class of the projective line: the homothety class of the
/// symmetric segments parallel to u(theta). Angles are reduced to [0, pi).
class BoundaryDir {
 public:
  explicit BoundaryDir(double theta) : theta_(std::fmod(theta, kPi)) {
    if (theta_ < 0.0) theta_ += kPi;
    if (theta_ >= kPi) theta_ = 0.0;
  }
  double theta() const { return theta_; }
  Vec2 direction() const { return unit(theta_); }

  /// Angle between the two classes, in [0, pi/2].
  friend double angle_between(BoundaryDir a, BoundaryDir b) {
    const double d = std::abs(a.theta_ - b.theta_);
    return std::min(d, kPi - d);
  }

 private:
  double theta_;
};

}  // namespace hypkonvex
