#pragma once

#include <cstddef>
#include <vector>

#include "hypkonvex/even_fn.hpp"
#include "hypkonvex/shapes.hpp"

namespace hypkonvex::supportfn {

inline constexpr std::size_t kDefaultGrid = 2048;

/// h(theta) = |A^T u(theta)|, the support function of A(D).
EvenFn from_ellipse(const Ellipse& e, std::size_t M = kDefaultGrid);
/// Same for a linear image of the disc with arbitrary (nonzero) determinant.
EvenFn from_ellipse_shape(const EllipseShape& e, std::size_t M = kDefaultGrid);
/// h(theta) = |<u(theta), v>|.
EvenFn from_segment(const Segment& s, std::size_t M = kDefaultGrid);
/// h(theta) = max_v <u(theta), v>.
EvenFn from_polygon(const Polygon& p, std::size_t M = kDefaultGrid);
/// Samples of the shape described by a non-empty tag, carrying that tag.
EvenFn from_tag(const ShapeTag& tag, std::size_t M = kDefaultGrid);

/// c1 h1 + c2 h2 for nonnegative coefficients (a Minkowski combination when
/// both are support functions). Tags survive scaling; when both inputs are tagged
/// the result carries the exact sum (segment/polygon parts merged into one polygon,
/// ellipses kept as summands). Throws GridMismatch, DomainError for c < 0.
EvenFn combine(double c1, const EvenFn& h1, double c2, const EvenFn& h2);

/// Pointwise h1 - h2; untagged.
EvenFn signed_diff(const EvenFn& h1, const EvenFn& h2);

/// c * h for c >= 0, tag preserved.
EvenFn scale(double c, const EvenFn& h);

/// Discrete curvature measure h'' + h on the grid:
///   (h[j+1] + h[j-1] - 2 cos(d) h[j]) / (2 (1 - cos d)),   d = 2 pi / M.
/// The numerator is nonnegative for every convex body (u[j-1] + u[j+1] = 2 cos(d) u[j]
/// and support functions are sublinear), and vanishes on restrictions of linear forms.
std::vector<double> curvature_samples(const EvenFn& h);

struct ConvexityCheck {
  bool is_support = false;
  double min_curvature = 0.0;
};

/// Flags h as a support function when min(h'' + h) >= -1e-8 (1 + max|h|).
ConvexityCheck is_support_function(const EvenFn& h);

/// Fraction of spectral energy carried by the top quarter of the harmonics.
double spectral_tail_fraction(const EvenFn& h);

struct SupportSplit {
  double c = 0.0;
  EvenFn s1;  ///< h + c 1
  EvenFn s2;  ///< c 1
  bool tail_warning = false;
};

/// Writes h = s1 - s2 with both s1, s2 support functions. In strict mode an
/// unresolved spectrum (more than 1% of the energy in the top quarter) throws.
SupportSplit support_split(const EvenFn& h, bool strict = false);

/// Boundary points c(theta) = h u + h' u_perp at n equispaced normal angles.
/// Throws InvalidShape when h is not a support function.
std::vector<Vec2> boundary_curve(const EvenFn& h, std::size_t n_points);

/// Mixed area (area(P + Q) - area(P) - area(Q)) / 2 with exact Minkowski sum
/// and shoelace areas.
double polygon_mixed_area_oracle(const Polygon& p, const Polygon& q);

}  // namespace hypkonvex::supportfn
