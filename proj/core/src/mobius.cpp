#include "hypkonvex/mobius.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "hypkonvex/errors.hpp"
#include "hypkonvex/specfun.hpp"
#include "hypkonvex/supportfn.hpp"

namespace hypkonvex::mobius {
namespace {

Mat2 canonical_sign(Mat2 m) {
  const double first = m.a != 0.0 ? m.a : (m.b != 0.0 ? m.b : (m.c != 0.0 ? m.c : m.d));
  return first < 0.0 ? m * -1.0 : m;
}

// Image of a tagged shape under the linear map a.
ShapeTag transport(const Mat2& a, const ShapeTag& tag) {
  if (const auto* e = std::get_if<EllipseShape>(&tag)) return EllipseShape{a * e->matrix};
  if (const auto* s = std::get_if<Segment>(&tag)) return Segment(a * s->endpoint());
  if (const auto* p = std::get_if<Polygon>(&tag)) {
    std::vector<Vec2> v(p->vertices().begin(), p->vertices().end());
    for (auto& x : v) x = a * x;
    return Polygon(std::move(v));
  }
  ShapeSum sum = std::get<ShapeSum>(tag);
  for (auto& e : sum.ellipses) e.matrix = a * e.matrix;
  for (auto& x : sum.ring) x = a * x;
  return sum;
}

}  // namespace

Mobius::Mobius(double a, double b, double c, double d, double tol) : m_{a, b, c, d} {
  const double det = m_.det();
  if (!std::isfinite(det) || std::abs(det - 1.0) > tol) {
    throw InvalidShape("PSL2(R) element needs determinant 1, got " + std::to_string(det));
  }
  m_ = canonical_sign(m_);
}

Mobius Mobius::hyperbolic(double s) {
  return Mobius(std::exp(0.5 * s), 0.0, 0.0, std::exp(-0.5 * s), 1e-9);
}

Mobius Mobius::operator*(const Mobius& o) const { return Mobius(m_ * o.m_, 1e-9); }

Mobius Mobius::inverse() const { return Mobius(m_.d, -m_.b, -m_.c, m_.a, 1e-9); }

HalfPlanePoint half_plane_point(double x, double y) {
  if (!(y > 0.0) || !std::isfinite(x) || !std::isfinite(y)) {
    throw DomainError("half-plane point needs finite x and y > 0");
  }
  return {x, y};
}

double act_circle(const Mobius& m, double theta) { return (m.matrix() * unit(theta)).angle(); }

EvenFn rho_act(const Mobius& m, const EvenFn& h) {
  const Mat2& a = m.matrix();
  const std::size_t M = h.grid();
  if (h.tagged()) return supportfn::from_tag(transport(a, h.tag()), M);
  const Mat2 at = a.transpose();
  std::vector<double> out(M);
  const std::size_t half = M / 2;
  for (std::size_t j = 0; j < half; ++j) {
    const Vec2 w = at * unit(h.angle(j));
    out[j] = w.norm() * h.eval_at(w.angle());
    out[j + half] = out[j];
  }
  return EvenFn(std::move(out));
}

HalfPlanePoint halfplane_apply(const Mobius& m, HalfPlanePoint z) {
  const Mat2& a = m.matrix();
  // (a z + b)/(c z + d) with z = x + i y; Im = y / |c z + d|^2 since det = 1.
  const double re_num = a.a * z.x + a.b;
  const double im_num = a.a * z.y;
  const double re_den = a.c * z.x + a.d;
  const double im_den = a.c * z.y;
  const double den = re_den * re_den + im_den * im_den;
  return {(re_num * re_den + im_num * im_den) / den, z.y / den};
}

Mobius mobius_from_halfplane(HalfPlanePoint z) {
  if (!(z.y > 0.0)) throw DomainError("half-plane point needs y > 0");
  const double r = std::sqrt(z.y);
  return Mobius(r, z.x / r, 0.0, 1.0 / r, 1e-9);
}

double dist_h2(HalfPlanePoint z1, HalfPlanePoint z2) {
  const Mat2 c = mobius_from_halfplane(z2).matrix().inverse() * mobius_from_halfplane(z1).matrix();
  // |C|_F^2 / 2 - 1 = ((p - s)^2 + (q + r)^2) / 2 when det C = 1.
  const double x = 0.5 * ((c.a - c.d) * (c.a - c.d) + (c.b + c.c) * (c.b + c.c));
  return lorentz::acosh1p(x);
}

double translation_length(const Mobius& m) { return 2.0 * std::log(singular_values(m.matrix()).max); }

lorentz::HPoint iota(HalfPlanePoint z, std::size_t M) {
  return lorentz::normalize(supportfn::from_ellipse(Ellipse(mobius_from_halfplane(z).matrix()), M));
}

double iota_cosh_quadrature(const Mobius& m) {
  const Mat2 at = m.matrix().transpose();
  auto f = [&](std::size_t j, std::size_t n) {
    return (at * unit(kTwoPi * static_cast<double>(j) / static_cast<double>(n))).norm();
  };
  // Periodic trapezoid rule, doubling the node count and reusing old nodes
  // until two successive means agree. Neumaier summation keeps the running
  // sum exact enough for the comparison.
  double sum = 0.0, comp = 0.0;
  auto add = [&](double v) {
    const double t = sum + v;
    comp += std::abs(sum) >= std::abs(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  };
  std::size_t n = 64;
  for (std::size_t j = 0; j < n; ++j) add(f(j, n));
  double mean = (sum + comp) / static_cast<double>(n);
  for (int level = 0; level < 20; ++level) {
    const std::size_t n2 = 2 * n;
    for (std::size_t j = 1; j < n2; j += 2) add(f(j, n2));
    const double next = (sum + comp) / static_cast<double>(n2);
    const bool done = std::abs(next - mean) <= 1e-15 * next;
    mean = next;
    n = n2;
    if (done) return mean;
  }
  throw ConvergenceError("trapezoid rule did not converge for a near-degenerate matrix");
}

double iota_dist_quadrature(const Mobius& m) {
  return lorentz::distance_from_cosh(iota_cosh_quadrature(m));
}

double iota_cosh_closed(double s) {
  if (!(s >= 0.0)) throw DomainError("iota_dist_closed needs s >= 0, got " + std::to_string(s));
  // k' = e^{-s} keeps E accurate for large s where k rounds to 1.
  const auto [K, E] = specfun::agm_KE_complementary(std::exp(-s));
  (void)K;
  return 2.0 * std::exp(0.5 * s) * E / kPi;
}

double iota_dist_closed(double s) {
  const double c = iota_cosh_closed(s);
  return c <= 1.0 ? 0.0 : lorentz::acosh1p(c - 1.0);
}

double iota_dist(HalfPlanePoint z1, HalfPlanePoint z2) { return iota_dist_closed(dist_h2(z1, z2)); }

}  // namespace hypkonvex::mobius
