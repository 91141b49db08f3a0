#include "hypkonvex/lorentz.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gauss_legendre.hpp"
#include "hypkonvex/errors.hpp"
#include "hypkonvex/specfun.hpp"
#include "hypkonvex/supportfn.hpp"

namespace hypkonvex::lorentz {
namespace {

constexpr double kUnitTol = 1e-10;

void require_same_grid(const EvenFn& a, const EvenFn& b) {
  if (a.grid() != b.grid()) throw GridMismatch(a.grid(), b.grid());
}

// |A^T x| depends on A only through A A^T; bring A to determinant +1 times a scalar.
struct ReducedMatrix {
  double scale;
  Mat2 unimodular;
};

ReducedMatrix reduce(const Mat2& m) {
  const double det = m.det();
  const double s = std::sqrt(std::abs(det));
  Mat2 u = m * (1.0 / s);
  if (det < 0.0) u = u * Mat2::diag(1.0, -1.0);
  return {s, u};
}

// (1/2pi) int |C^T u| for any invertible C: (2 sigma_max / pi) E(sqrt(1 - (sigma_min/sigma_max)^2)).
double mean_norm(const Mat2& c) {
  const auto sv = singular_values(c);
  const auto [K, E] = specfun::agm_KE_complementary(std::min(1.0, sv.min / sv.max));
  (void)K;
  return 2.0 * sv.max * E / kPi;
}

void append_kinks(const ShapeTag& tag, std::vector<double>& out) {
  auto wrap = [](double a) {
    a = std::fmod(a, kTwoPi);
    return a < 0.0 ? a + kTwoPi : a;
  };
  if (const auto* s = std::get_if<Segment>(&tag)) {
    const double a = s->endpoint().angle();
    out.push_back(wrap(a + 0.5 * kPi));
    out.push_back(wrap(a - 0.5 * kPi));
  } else if (const auto* p = std::get_if<Polygon>(&tag)) {
    const auto v = p->vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Vec2 e = v[(i + 1) % v.size()] - v[i];
      out.push_back(wrap(e.angle() - 0.5 * kPi));
    }
  }
}

const detail::GaussRule& rule24() {
  static const detail::GaussRule r = detail::gauss_legendre(24);
  return r;
}

double piecewise_form(const ShapeTag& t1, const ShapeTag& t2) {
  std::vector<double> cuts{0.0, kTwoPi};
  append_kinks(t1, cuts);
  append_kinks(t2, cuts);
  std::sort(cuts.begin(), cuts.end());
  const auto& rule = rule24();
  const double max_len = kPi / 64.0;
  double total = 0.0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    if (hi - lo <= 0.0) continue;
    const int pieces = std::max(1, static_cast<int>(std::ceil((hi - lo) / max_len)));
    const double len = (hi - lo) / pieces;
    for (int k = 0; k < pieces; ++k) {
      const double a = lo + k * len;
      const double half = 0.5 * len;
      const double mid = a + half;
      for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
        const double t = mid + half * rule.nodes[q];
        const double v = tag_value(t1, t) * tag_value(t2, t) - tag_derivative(t1, t) * tag_derivative(t2, t);
        total += half * rule.weights[q] * v;
      }
    }
  }
  return total / kTwoPi;
}

}  // namespace

HPoint::HPoint(EvenFn fn) : fn_(std::move(fn)) {
  const double a = form_A(fn_);
  if (std::abs(a - 1.0) > kUnitTol) {
    throw InvariantViolation("hyperboloid point must have A(h) = 1, got " + std::to_string(a));
  }
  if (pi0(fn_) < 1.0 - kUnitTol) {
    throw InvariantViolation("hyperboloid point must have pi0(h) >= 1");
  }
}

double form_A_spectral(const EvenFn& h1, const EvenFn& h2) {
  require_same_grid(h1, h2);
  const auto& f = h1.fourier();
  const auto& g = h2.fourier();
  const std::size_t N = f.nyquist();
  double acc = 0.0;
  for (std::size_t n = 2; n <= N; ++n) {
    const double w = 1.0 - static_cast<double>(n) * static_cast<double>(n);
    acc += w * (f.a[n] * g.a[n] + f.b[n] * g.b[n]);
  }
  return f.a[0] * g.a[0] + 0.5 * acc;
}

namespace {

double form_A_basic(const ShapeTag& t1, const ShapeTag& t2) {
  const auto* e1 = std::get_if<EllipseShape>(&t1);
  const auto* e2 = std::get_if<EllipseShape>(&t2);
  if (e1 && e2) {
    // |A^T x| = rho(B)(|(B^{-1} A)^T x|) and A is rho-invariant, so
    // A(h_A, h_B) = A(h_{B^{-1}A}, 1) = pi0(h_{B^{-1}A}).
    const auto ra = reduce(e1->matrix);
    const auto rb = reduce(e2->matrix);
    return ra.scale * rb.scale * mean_norm(rb.unimodular.inverse() * ra.unimodular);
  }
  return piecewise_form(t1, t2);
}

double pi0_basic(const ShapeTag& t) {
  if (const auto* e = std::get_if<EllipseShape>(&t)) return mean_norm(e->matrix);
  if (const auto* s = std::get_if<Segment>(&t)) return 2.0 * s->endpoint().norm() / kPi;
  return perimeter(std::get<Polygon>(t).vertices()) / kTwoPi;
}

}  // namespace

double form_A_exact(const ShapeTag& t1, const ShapeTag& t2) {
  if (std::holds_alternative<std::monostate>(t1) || std::holds_alternative<std::monostate>(t2)) {
    throw Error("form_A_exact needs two shape tags");
  }
  // Bilinear over the summands of composite tags.
  double total = 0.0;
  for (const auto& p : tag_parts(t1)) {
    for (const auto& q : tag_parts(t2)) total += form_A_basic(p, q);
  }
  return total;
}

double form_A(const EvenFn& h1, const EvenFn& h2) {
  require_same_grid(h1, h2);
  if (h1.tagged() && h2.tagged()) return form_A_exact(h1.tag(), h2.tag());
  return form_A_spectral(h1, h2);
}

double pi0(const EvenFn& h) {
  if (h.tagged()) {
    double total = 0.0;
    for (const auto& p : tag_parts(h.tag())) total += pi0_basic(p);
    return total;
  }
  double sum = 0.0;
  for (double v : h.samples()) sum += v;
  return sum / static_cast<double>(h.grid());
}

H1Seminorms h1_seminorms(const EvenFn& h) {
  const auto& f = h.fourier();
  const std::size_t N = f.nyquist();
  double l2 = f.a[0] * f.a[0];
  double dl2 = 0.0;
  for (std::size_t n = 1; n <= N; ++n) {
    const double e = 0.5 * (f.a[n] * f.a[n] + f.b[n] * f.b[n]);
    l2 += e;
    dl2 += static_cast<double>(n) * static_cast<double>(n) * e;
  }
  return {kTwoPi * l2, kTwoPi * dl2};
}

HPoint normalize(const EvenFn& h) {
  const double a = form_A(h);
  const double p = pi0(h);
  if (!(p > 0.0)) throw NotTimelike("vector lies in the past cone: pi0(h) <= 0");
  // A(h) <= pi0(h)^2, so this threshold separates rounding noise of isotropic vectors.
  if (!(a > 1e-12 * p * p)) {
    throw NotTimelike("isotropic or negative vector: A(h) = " + std::to_string(a));
  }
  return HPoint(supportfn::scale(1.0 / std::sqrt(a), h));
}

double acosh1p(double x) { return std::log1p(x + std::sqrt(x * (2.0 + x))); }

double distance_from_cosh(double c) {
  if (!(c >= 1.0 - 1e-9)) {
    throw InvariantViolation("reversed Cauchy-Schwarz violated: A(p, q) = " + std::to_string(c));
  }
  if (c <= 1.0) return 0.0;
  return acosh1p(c - 1.0);
}

double hyper_dist(const HPoint& p, const HPoint& q) {
  return distance_from_cosh(form_A(p.fn(), q.fn()));
}

HPoint geodesic_point(const HPoint& p, const HPoint& q, double t) {
  if (t == 0.0) return p;
  if (t == 1.0) return q;
  if (!(t > 0.0 && t < 1.0)) throw DomainError("geodesic parameter must lie in [0, 1]");
  return normalize(supportfn::combine(1.0 - t, p.fn(), t, q.fn()));
}

HPoint segment_geodesic_point(BoundaryDir nu, BoundaryDir omega, double lambda, std::size_t M) {
  const double s = std::sin(angle_between(nu, omega));
  if (!(s > 1e-12)) throw DomainError("geodesic endpoints must be distinct direction classes");
  const double a = std::sqrt(kPi / (4.0 * s));
  const auto hv = supportfn::from_segment(Segment(nu.direction()), M);
  const auto hw = supportfn::from_segment(Segment(omega.direction()), M);
  return normalize(supportfn::combine(a * std::exp(0.5 * lambda), hv, a * std::exp(-0.5 * lambda), hw));
}

HPoint project_disc_to_segment_geodesic(BoundaryDir nu, BoundaryDir omega, std::size_t M) {
  return segment_geodesic_point(nu, omega, 0.0, M);
}

}  // namespace hypkonvex::lorentz
