#include <doctest.h>

#include <cmath>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "hypkonvex/errors.hpp"
#include "hypkonvex/mobius.hpp"
#include "hypkonvex/random.hpp"
#include "hypkonvex/supportfn.hpp"

using namespace hypkonvex;
using namespace hypkonvex::mobius;
namespace sf = hypkonvex::supportfn;

namespace {

double sup_diff(const EvenFn& a, const EvenFn& b) {
  double m = 0;
  for (std::size_t j = 0; j < a.grid(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

}  // namespace

TEST_CASE("Mobius construction and sign") {
  const Mobius m(-2.0, 0.0, 0.0, -0.5);
  CHECK(m.matrix() == Mat2::diag(2.0, 0.5));
  const Mobius n(0.0, -1.0, 1.0, 0.0);
  CHECK(n.matrix().b == 1.0);
  CHECK_THROWS_AS(Mobius(1.0, 1.0, 0.0, 2.0), InvalidShape);
  const Mat2 half_turn = Mobius::rotation(kPi).matrix();
  CHECK(half_turn.a == doctest::Approx(1.0));
  CHECK(std::abs(half_turn.b) + std::abs(half_turn.c) < 1e-15);
  const auto h = Mobius::hyperbolic(2.0);
  CHECK(translation_length(h) == doctest::Approx(2.0));
  const auto prod = h * h.inverse();
  CHECK(std::abs(prod.matrix().a - 1.0) < 1e-15);
  CHECK(std::abs(prod.matrix().b) < 1e-15);
}

TEST_CASE("act_circle") {
  CHECK(act_circle(Mobius::identity(), 0.4) == doctest::Approx(0.4));
  CHECK(act_circle(Mobius::rotation(0.3), 0.4) == doctest::Approx(0.7));
  // diag(e, 1/e) maps the diagonal direction to atan(e^-2).
  CHECK(act_circle(Mobius::hyperbolic(2.0), kPi / 4) == doctest::Approx(std::atan(std::exp(-2.0))));
}

TEST_CASE("rho_act") {
  const std::size_t M = 512;
  rnd::Rng rng(42);
  const auto one = EvenFn::constant(M, 1.0);
  for (int i = 0; i < 10; ++i) {
    const auto h = rnd::random_body(rng, M);
    CHECK(sup_diff(rho_act(Mobius::identity(), h), h) < 1e-14 * h.max_abs());
    const auto m = rnd::random_mobius(rng);
    CHECK(sup_diff(rho_act(m, one), sf::from_ellipse(Ellipse(m.matrix()), M)) < 1e-13);
    // Composition: rho(m1 m2) = rho(m1) rho(m2).
    const auto m2 = rnd::random_mobius(rng);
    const auto lhs = rho_act(m * m2, h);
    const auto rhs = rho_act(m, rho_act(m2, h));
    CHECK(sup_diff(lhs, rhs) < 1e-12 * lhs.max_abs());
    // Untagged smooth inputs follow the tagged route.
    const auto e = sf::from_ellipse(rnd::random_ellipse(rng, 4.0), 1024);
    const auto m3 = rnd::random_mobius(rng, 1.5);
    CHECK(sup_diff(rho_act(m3, e.untagged()), rho_act(m3, e)) < 1e-9);
  }
  // Rotations fix the disc; a nontrivial hyperbolic element moves it.
  CHECK(sup_diff(rho_act(Mobius::rotation(1.1), one), one) < 1e-15);
  CHECK(sup_diff(rho_act(Mobius::hyperbolic(0.5), one), one) > 0.1);
}

TEST_CASE("half-plane action and sections") {
  const HalfPlanePoint i{0.0, 1.0};
  const auto z = halfplane_apply(Mobius::hyperbolic(std::log(4.0)), i);
  CHECK(z.x == doctest::Approx(0.0));
  CHECK(z.y == doctest::Approx(4.0));
  // Rotations fix i.
  const auto r = halfplane_apply(Mobius::rotation(0.7), i);
  CHECK(std::abs(r.x) < 1e-15);
  CHECK(r.y == doctest::Approx(1.0));
  rnd::Rng rng(5);
  for (int k = 0; k < 50; ++k) {
    const auto p = rnd::random_half_plane_point(rng);
    const auto back = halfplane_apply(mobius_from_halfplane(p), i);
    CHECK(back.x == doctest::Approx(p.x).epsilon(1e-12));
    CHECK(back.y == doctest::Approx(p.y).epsilon(1e-12));
    const auto a = rnd::random_mobius(rng), b = rnd::random_mobius(rng);
    const auto lhs = halfplane_apply(a * b, p);
    const auto rhs = halfplane_apply(a, halfplane_apply(b, p));
    CHECK(lhs.x == doctest::Approx(rhs.x).epsilon(1e-10));
    CHECK(lhs.y == doctest::Approx(rhs.y).epsilon(1e-10));
  }
  CHECK_THROWS_AS(half_plane_point(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(mobius_from_halfplane({0.0, -1.0}), DomainError);
}

TEST_CASE("dist_h2") {
  const HalfPlanePoint i{0.0, 1.0};
  for (double s : {1e-6, 0.1, 1.0, 5.0, 20.0}) {
    CHECK(dist_h2(i, {0.0, std::exp(s)}) == doctest::Approx(s).epsilon(1e-13));
  }
  CHECK(dist_h2(i, i) == 0.0);
  rnd::Rng rng(9);
  for (int k = 0; k < 50; ++k) {
    const auto p = rnd::random_half_plane_point(rng), q = rnd::random_half_plane_point(rng);
    const auto m = rnd::random_mobius(rng);
    const double d = dist_h2(p, q);
    CHECK(dist_h2(halfplane_apply(m, p), halfplane_apply(m, q)) == doctest::Approx(d).epsilon(1e-9));
    // Textbook formula acosh(1 + |p - q|^2 / (2 y_p y_q)).
    const double dx = p.x - q.x, dy = p.y - q.y;
    CHECK(d == doctest::Approx(std::acosh(1 + (dx * dx + dy * dy) / (2 * p.y * q.y))).epsilon(1e-10));
  }
}

TEST_CASE("iota") {
  const auto base = iota({0.0, 1.0}, 256);
  for (double x : base.fn().samples()) CHECK(x == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(iota_cosh_closed(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(iota_dist_closed(0.0) == 0.0);
  // Endpoint clustering resolves the near-kink of the integrand at pi/2 for large s.
  boost::math::quadrature::tanh_sinh<double> ts;
  for (double s : {0.5, 1.0, 2.0, 5.0, 10.0}) {
    const double q = iota_dist_quadrature(Mobius::hyperbolic(s));
    CHECK(std::abs(q - iota_dist_closed(s)) < 1e-10);
    const double a = std::exp(s / 2), b = std::exp(-s / 2);
    const double oracle =
        ts.integrate([a, b](double t) { return std::hypot(a * std::cos(t), b * std::sin(t)); }, 0.0, kPi / 2, 1e-15) *
        2 / kPi;
    CHECK(std::abs(iota_cosh_closed(s) - oracle) < 1e-13 * oracle);
    // Rotating either side does not change the distance.
    CHECK(std::abs(iota_dist_quadrature(Mobius::rotation(0.3) * Mobius::hyperbolic(s) * Mobius::rotation(1.2)) -
                   iota_dist_closed(s)) < 1e-10);
  }
  // Small s: d = sqrt(3/8) s (1 + O(s^2)).
  CHECK(std::abs(iota_dist_closed(1e-3) / 1e-3 - std::sqrt(3.0 / 8.0)) < 1e-6);
  // Large s: d - s/2 -> ln(4/pi).
  CHECK(std::abs(iota_dist_closed(40.0) - 20.0 - std::log(4.0 / kPi)) < 1e-12);
  for (double s = 0.0; s <= 40.0; s += 0.25) {
    CHECK(iota_dist_closed(s) <= s + 1e-12);
    CHECK(iota_dist_closed(s) >= s / 2 - 1e-12);
  }
  CHECK_THROWS_AS(iota_dist_closed(-0.1), DomainError);
  // iota_dist matches the distance on the hyperboloid.
  rnd::Rng rng(12);
  for (int k = 0; k < 20; ++k) {
    const auto p = rnd::random_half_plane_point(rng), q = rnd::random_half_plane_point(rng);
    CHECK(std::abs(iota_dist(p, q) - lorentz::hyper_dist(iota(p, 1024), iota(q, 1024))) < 1e-9);
  }
}
