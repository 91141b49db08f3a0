#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>

namespace hypkonvex {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Vec2 {
  double x = 0.0;
  double y = 0.0;

  constexpr Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
  constexpr Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
  constexpr Vec2 operator-() const { return {-x, -y}; }
  constexpr Vec2 operator*(double s) const { return {x * s, y * s}; }
  constexpr bool operator==(const Vec2&) const = default;

  double norm() const { return std::hypot(x, y); }
  /// Angle in (-pi, pi].
  double angle() const { return std::atan2(y, x); }
};

constexpr Vec2 operator*(double s, Vec2 v) { return v * s; }
constexpr double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
constexpr double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }

/// Unit vector of angle theta.
inline Vec2 unit(double theta) { return {std::cos(theta), std::sin(theta)}; }
/// Unit normal obtained by rotating unit(theta) a quarter turn counterclockwise.
inline Vec2 unit_perp(double theta) { return {-std::sin(theta), std::cos(theta)}; }

/// Real 2x2 matrix [[a, b], [c, d]].
struct Mat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  static constexpr Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
  static Mat2 rotation(double phi) {
    const double c = std::cos(phi), s = std::sin(phi);
    return {c, -s, s, c};
  }
  static constexpr Mat2 diag(double p, double q) { return {p, 0.0, 0.0, q}; }

  constexpr double det() const { return a * d - b * c; }
  constexpr Mat2 transpose() const { return {a, c, b, d}; }
  constexpr Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  constexpr Vec2 operator*(Vec2 v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
  constexpr Mat2 operator*(double s) const { return {a * s, b * s, c * s, d * s}; }
  constexpr bool operator==(const Mat2&) const = default;

  Mat2 inverse() const {
    const double D = det();
    return {d / D, -b / D, -c / D, a / D};
  }
  constexpr double frobenius_sq() const { return a * a + b * b + c * c + d * d; }
};

/// Singular values (largest first) of a 2x2 matrix, closed form.
struct SingularValues {
  double max;
  double min;
};

inline SingularValues singular_values(const Mat2& m) {
  // sigma_max^2 + sigma_min^2 = |m|_F^2 and sigma_max * sigma_min = |det|.
  const double f = m.frobenius_sq();
  const double D = std::abs(m.det());
  const double root = std::sqrt(std::max(0.0, f * f - 4.0 * D * D));
  const double smax = std::sqrt(0.5 * (f + root));
  const double smin = smax > 0.0 ? D / smax : 0.0;
  return {smax, smin};
}

}  // namespace hypkonvex
