#include "hypkonvex/supportfn.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "hypkonvex/errors.hpp"

namespace hypkonvex::supportfn {
namespace {

std::vector<double> sample_tag(const ShapeTag& tag, std::size_t M) {
  if (M == 0 || M % 4 != 0) {
    throw InvalidShape("grid size must be a positive multiple of 4, got " + std::to_string(M));
  }
  std::vector<double> s(M);
  const std::size_t half = M / 2;
  for (std::size_t j = 0; j < half; ++j) {
    s[j] = tag_value(tag, kTwoPi * static_cast<double>(j) / static_cast<double>(M));
    s[j + half] = s[j];
  }
  return s;
}

void require_same_grid(const EvenFn& a, const EvenFn& b) {
  if (a.grid() != b.grid()) throw GridMismatch(a.grid(), b.grid());
}

ShapeTag scale_tag(double c, const ShapeTag& tag) {
  if (c <= 0.0) return std::monostate{};
  if (const auto* e = std::get_if<EllipseShape>(&tag)) return EllipseShape{e->matrix * c};
  if (const auto* s = std::get_if<Segment>(&tag)) return Segment(s->endpoint() * c);
  if (const auto* p = std::get_if<Polygon>(&tag)) {
    std::vector<Vec2> v(p->vertices().begin(), p->vertices().end());
    for (auto& x : v) x = x * c;
    return Polygon(std::move(v));
  }
  if (const auto* sum = std::get_if<ShapeSum>(&tag)) {
    ShapeSum out = *sum;
    for (auto& e : out.ellipses) e.matrix = e.matrix * c;
    for (auto& x : out.ring) x = x * c;
    return out;
  }
  return std::monostate{};
}

std::optional<std::vector<Vec2>> ring_of(const ShapeTag& tag) {
  if (const auto* s = std::get_if<Segment>(&tag)) return segment_ring(*s);
  if (const auto* p = std::get_if<Polygon>(&tag)) return std::vector<Vec2>(p->vertices().begin(), p->vertices().end());
  return std::nullopt;
}

ShapeTag ring_to_tag(const std::vector<Vec2>& ring) {
  if (ring.size() == 2) return Segment(ring[0]);
  return Polygon(ring);
}

// Exact tag of the sum of two (already scaled) tags: polygonal parts merge into
// one ring, ellipses are kept as separate summands.
ShapeTag sum_tags(const ShapeTag& a, const ShapeTag& b) {
  ShapeSum sum;
  for (const ShapeTag* t : {&a, &b}) {
    for (const auto& part : tag_parts(*t)) {
      if (const auto* e = std::get_if<EllipseShape>(&part)) {
        sum.ellipses.push_back(*e);
      } else if (const auto ring = ring_of(part)) {
        sum.ring = sum.ring.empty() ? *ring : minkowski_sum(sum.ring, *ring);
      }
    }
  }
  if (sum.ellipses.empty()) return ring_to_tag(sum.ring);
  return sum;
}

}  // namespace

EvenFn from_ellipse(const Ellipse& e, std::size_t M) {
  return from_ellipse_shape(EllipseShape{e.matrix()}, M);
}

EvenFn from_ellipse_shape(const EllipseShape& e, std::size_t M) {
  if (!(std::abs(e.matrix.det()) > 0.0)) throw InvalidShape("singular ellipse matrix");
  ShapeTag tag = e;
  auto s = sample_tag(tag, M);
  return EvenFn(std::move(s), std::move(tag));
}

EvenFn from_segment(const Segment& seg, std::size_t M) {
  ShapeTag tag = seg;
  auto s = sample_tag(tag, M);
  return EvenFn(std::move(s), std::move(tag));
}

EvenFn from_polygon(const Polygon& p, std::size_t M) {
  ShapeTag tag = p;
  auto s = sample_tag(tag, M);
  return EvenFn(std::move(s), std::move(tag));
}

EvenFn from_tag(const ShapeTag& tag, std::size_t M) {
  if (std::holds_alternative<std::monostate>(tag)) throw Error("from_tag on an empty tag");
  auto s = sample_tag(tag, M);
  return EvenFn(std::move(s), tag);
}

EvenFn scale(double c, const EvenFn& h) {
  if (!(c >= 0.0)) throw DomainError("scale factor must be nonnegative");
  std::vector<double> s(h.samples().begin(), h.samples().end());
  for (auto& x : s) x *= c;
  return EvenFn(std::move(s), scale_tag(c, h.tag()));
}

EvenFn combine(double c1, const EvenFn& h1, double c2, const EvenFn& h2) {
  require_same_grid(h1, h2);
  if (!(c1 >= 0.0) || !(c2 >= 0.0)) {
    throw DomainError("Minkowski combination needs nonnegative coefficients");
  }
  if (c2 == 0.0) return scale(c1, h1);
  if (c1 == 0.0) return scale(c2, h2);
  const std::size_t M = h1.grid();
  std::vector<double> s(M);
  for (std::size_t j = 0; j < M; ++j) s[j] = c1 * h1[j] + c2 * h2[j];

  ShapeTag tag;
  if (h1.tagged() && h2.tagged()) {
    tag = sum_tags(scale_tag(c1, h1.tag()), scale_tag(c2, h2.tag()));
    // Exact samples from the merged shape agree with the sum to rounding.
    s = sample_tag(tag, M);
  }
  return EvenFn(std::move(s), std::move(tag));
}

EvenFn signed_diff(const EvenFn& h1, const EvenFn& h2) {
  require_same_grid(h1, h2);
  std::vector<double> s(h1.grid());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = h1[j] - h2[j];
  return EvenFn(std::move(s));
}

std::vector<double> curvature_samples(const EvenFn& h) {
  const std::size_t M = h.grid();
  const double d = kTwoPi / static_cast<double>(M);
  const double c = std::cos(d);
  // 1 - cos d without cancellation.
  const double one_minus_c = 2.0 * std::sin(0.5 * d) * std::sin(0.5 * d);
  std::vector<double> out(M);
  for (std::size_t j = 0; j < M; ++j) {
    const double prev = h[(j + M - 1) % M];
    const double next = h[(j + 1) % M];
    out[j] = (prev + next - 2.0 * c * h[j]) / (2.0 * one_minus_c);
  }
  return out;
}

ConvexityCheck is_support_function(const EvenFn& h) {
  const auto curv = curvature_samples(h);
  const double mn = *std::min_element(curv.begin(), curv.end());
  const double tol = 1e-8 * (1.0 + h.max_abs());
  return {mn >= -tol, mn};
}

double spectral_tail_fraction(const EvenFn& h) {
  const auto& f = h.fourier();
  const std::size_t N = f.nyquist();
  double total = 0.0, tail = 0.0;
  for (std::size_t n = 0; n <= N; ++n) {
    const double e = f.a[n] * f.a[n] + f.b[n] * f.b[n];
    total += e;
    if (4 * n > 3 * N) tail += e;
  }
  return total > 0.0 ? tail / total : 0.0;
}

SupportSplit support_split(const EvenFn& h, bool strict) {
  const bool warn = spectral_tail_fraction(h) > 0.01;
  if (warn && strict) {
    throw InvalidShape("spectrum not resolved: more than 1% of the energy in the top quarter");
  }
  const auto check = is_support_function(h);
  const double c = check.is_support ? 0.0 : std::max(0.0, -check.min_curvature);
  const std::size_t M = h.grid();
  SupportSplit out{c, c == 0.0 ? h : combine(1.0, h.untagged(), c, EvenFn::constant(M, 1.0)),
                   EvenFn::constant(M, c), warn};
  return out;
}

std::vector<Vec2> boundary_curve(const EvenFn& h, std::size_t n_points) {
  if (n_points < 3) throw DomainError("boundary_curve needs at least 3 points");
  if (!is_support_function(h).is_support) {
    throw InvalidShape("boundary_curve: input is not a support function");
  }
  std::vector<Vec2> pts(n_points);
  for (std::size_t k = 0; k < n_points; ++k) {
    const double t = kTwoPi * static_cast<double>(k) / static_cast<double>(n_points);
    pts[k] = h.eval_at(t) * unit(t) + h.derivative_at(t) * unit_perp(t);
  }
  return pts;
}

double polygon_mixed_area_oracle(const Polygon& p, const Polygon& q) {
  const auto sum = minkowski_sum(p.vertices(), q.vertices());
  return 0.5 * (shoelace_area(sum) - shoelace_area(p.vertices()) - shoelace_area(q.vertices()));
}

}  // namespace hypkonvex::supportfn
