#pragma once

#include <span>
#include <vector>

#include "hypkonvex/plane.hpp"

namespace hypkonvex {

/// The image A(D) of the unit disc under a unit-determinant matrix.
class Ellipse {
 public:
  /// Throws InvalidShape when |det - 1| > tol.
  explicit Ellipse(const Mat2& matrix, double tol = 1e-9);
  const Mat2& matrix() const { return matrix_; }

 private:
  Mat2 matrix_;
};

/// The symmetric segment [-v, v].
class Segment {
 public:
  /// Throws InvalidShape for v = 0.
  explicit Segment(Vec2 endpoint);
  Vec2 endpoint() const { return endpoint_; }

 private:
  Vec2 endpoint_;
};

/// Centrally symmetric, strictly convex polygon, vertices counterclockwise.
class Polygon {
 public:
  /// Throws InvalidShape on fewer than 4 vertices, a vertex without antipode,
  /// a collinear triple, or clockwise / non-convex order.
  explicit Polygon(std::vector<Vec2> vertices);
  std::span<const Vec2> vertices() const { return vertices_; }

  /// Builds the polygon from the convex hull of +-points (collinear points dropped).
  static Polygon symmetric_hull(std::span<const Vec2> points);

 private:
  std::vector<Vec2> vertices_;
};

/// Linear image of the unit disc by an arbitrary invertible matrix. Used as
/// the exact descriptor of scaled ellipses that no longer have unit determinant.
struct EllipseShape {
  Mat2 matrix;
};

/// Signed shoelace area of a closed polyline.
double shoelace_area(std::span<const Vec2> ring);

/// Perimeter of a closed polyline.
double perimeter(std::span<const Vec2> ring);

/// Convex hull (Andrew monotone chain), counterclockwise, collinear points removed.
std::vector<Vec2> convex_hull(std::vector<Vec2> points);

/// Minkowski sum of two convex rings given counterclockwise, by merging their
/// edge sequences in angular order. A ring of two points stands for a segment.
/// Collinear vertices of the result are removed.
std::vector<Vec2> minkowski_sum(std::span<const Vec2> p, std::span<const Vec2> q);

/// Two-point counterclockwise ring {v, -v} representing the segment [-v, v].
std::vector<Vec2> segment_ring(const Segment& s);

}  // namespace hypkonvex
