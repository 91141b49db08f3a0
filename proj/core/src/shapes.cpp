#include "hypkonvex/shapes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hypkonvex/errors.hpp"

namespace hypkonvex {
namespace {

double ring_scale(std::span<const Vec2> pts) {
  double s = 0.0;
  for (const auto& p : pts) s = std::max({s, std::abs(p.x), std::abs(p.y)});
  return s;
}

// Rotate so that the ring starts at its lowest (then leftmost) vertex.
std::vector<Vec2> start_at_bottom(std::span<const Vec2> ring) {
  const auto it = std::min_element(ring.begin(), ring.end(), [](Vec2 a, Vec2 b) {
    return a.y < b.y || (a.y == b.y && a.x < b.x);
  });
  std::vector<Vec2> out(ring.begin(), ring.end());
  std::rotate(out.begin(), out.begin() + (it - ring.begin()), out.end());
  return out;
}

double polar_angle(Vec2 e) {
  const double a = std::atan2(e.y, e.x);
  return a < 0.0 ? a + kTwoPi : a;
}

std::vector<Vec2> drop_collinear(std::vector<Vec2> ring) {
  if (ring.size() < 3) return ring;
  const double scale = ring_scale(ring);
  const double tol = 1e-13 * scale * scale;
  bool changed = true;
  while (changed && ring.size() > 2) {
    changed = false;
    const std::size_t n = ring.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Vec2 prev = ring[(i + n - 1) % n];
      const Vec2 next = ring[(i + 1) % n];
      const Vec2 e1 = ring[i] - prev;
      const Vec2 e2 = next - ring[i];
      const bool duplicate = e1.norm() <= 1e-14 * scale;
      if (duplicate || (std::abs(cross(e1, e2)) <= tol && dot(e1, e2) > 0.0)) {
        ring.erase(ring.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return ring;
}

}  // namespace

Ellipse::Ellipse(const Mat2& matrix, double tol) : matrix_(matrix) {
  const double det = matrix.det();
  if (!std::isfinite(det) || std::abs(det - 1.0) > tol) {
    throw InvalidShape("ellipse matrix must have determinant 1, got " + std::to_string(det));
  }
}

Segment::Segment(Vec2 endpoint) : endpoint_(endpoint) {
  if (!(endpoint.norm() > 0.0) || !std::isfinite(endpoint.norm())) {
    throw InvalidShape("segment endpoint must be a nonzero finite vector");
  }
}

Polygon::Polygon(std::vector<Vec2> vertices) : vertices_(std::move(vertices)) {
  const std::size_t n = vertices_.size();
  if (n < 4 || n % 2 != 0) {
    throw InvalidShape("symmetric polygon needs an even number (>= 4) of vertices, got " +
                       std::to_string(n));
  }
  const double scale = ring_scale(vertices_);
  if (!std::isfinite(scale) || scale <= 0.0) throw InvalidShape("degenerate polygon");
  const double sym_tol = 1e-12 * (1.0 + scale);
  for (const auto& v : vertices_) {
    const bool has_antipode = std::any_of(vertices_.begin(), vertices_.end(), [&](Vec2 w) {
      return std::abs(w.x + v.x) <= sym_tol && std::abs(w.y + v.y) <= sym_tol;
    });
    if (!has_antipode) throw InvalidShape("polygon vertex set is not centrally symmetric");
  }
  const double convex_tol = 1e-14 * scale * scale;
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 e1 = vertices_[(i + 1) % n] - vertices_[i];
    const Vec2 e2 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
    if (cross(e1, e2) <= convex_tol) {
      throw InvalidShape("polygon is not strictly convex in counterclockwise order");
    }
    turning += std::atan2(cross(e1, e2), dot(e1, e2));
  }
  // A star-shaped self-intersecting ring can have all left turns; reject winding != 1.
  if (std::abs(turning - kTwoPi) > 1e-6) {
    throw InvalidShape("polygon winds more than once");
  }
}

Polygon Polygon::symmetric_hull(std::span<const Vec2> points) {
  std::vector<Vec2> all;
  all.reserve(2 * points.size());
  for (const auto& p : points) {
    all.push_back(p);
    all.push_back(-p);
  }
  return Polygon(convex_hull(std::move(all)));
}

double shoelace_area(std::span<const Vec2> ring) {
  const std::size_t n = ring.size();
  double twice = 0.0;
  for (std::size_t i = 0; i < n; ++i) twice += cross(ring[i], ring[(i + 1) % n]);
  return 0.5 * twice;
}

double perimeter(std::span<const Vec2> ring) {
  const std::size_t n = ring.size();
  double p = 0.0;
  for (std::size_t i = 0; i < n; ++i) p += (ring[(i + 1) % n] - ring[i]).norm();
  return p;
}

std::vector<Vec2> convex_hull(std::vector<Vec2> pts) {
  std::sort(pts.begin(), pts.end(), [](Vec2 a, Vec2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;
  std::vector<Vec2> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && cross(hull[k - 1] - hull[k - 2], p - hull[k - 2]) <= 0.0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 1] - hull[k - 2], pts[i] - hull[k - 2]) <= 0.0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return drop_collinear(std::move(hull));
}

std::vector<Vec2> minkowski_sum(std::span<const Vec2> p_in, std::span<const Vec2> q_in) {
  const auto p = start_at_bottom(p_in);
  const auto q = start_at_bottom(q_in);
  const std::size_t n = p.size(), m = q.size();
  std::vector<Vec2> out;
  out.reserve(n + m);
  std::size_t i = 0, j = 0;
  while (i < n || j < m) {
    out.push_back(p[i % n] + q[j % m]);
    const Vec2 ep = p[(i + 1) % n] - p[i % n];
    const Vec2 eq = q[(j + 1) % m] - q[j % m];
    // Edges leave the bottom vertex with polar angles increasing through [0, 2pi).
    const bool parallel = std::abs(cross(ep, eq)) <= 1e-15 * ep.norm() * eq.norm() && dot(ep, eq) > 0.0;
    const double ap = polar_angle(ep), aq = polar_angle(eq);
    if (j >= m || (i < n && !parallel && ap < aq)) {
      ++i;
    } else if (i >= n || (!parallel && aq < ap)) {
      ++j;
    } else {
      ++i;
      ++j;
    }
  }
  return drop_collinear(std::move(out));
}

std::vector<Vec2> segment_ring(const Segment& s) { return {s.endpoint(), -s.endpoint()}; }

}  // namespace hypkonvex
