#include <doctest.h>

#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "hypkonvex/errors.hpp"
#include "hypkonvex/lorentz.hpp"
#include "hypkonvex/random.hpp"
#include "hypkonvex/supportfn.hpp"

using namespace hypkonvex;
using namespace hypkonvex::lorentz;
namespace sf = hypkonvex::supportfn;

namespace {

EvenFn ellipse_T(double s, std::size_t M) { return sf::from_ellipse(Ellipse(Mat2::diag(std::exp(s / 2), std::exp(-s / 2))), M); }

}  // namespace

TEST_CASE("form_A and pi0 basics") {
  const auto one = EvenFn::constant(256, 1.0);
  CHECK(form_A(one) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(form_A_spectral(one, one) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(pi0(one) == doctest::Approx(1.0));
  rnd::Rng rng(17);
  for (int i = 0; i < 20; ++i) {
    const auto h = rnd::random_body(rng, 256);
    CHECK(std::abs(form_A(h, one) - pi0(h)) < 1e-12 * pi0(h));
    CHECK(std::abs(form_A(h, one) - form_A(one, h)) < 1e-15 * pi0(h));
  }
  CHECK_THROWS_AS(form_A(one, EvenFn::constant(128, 1.0)), GridMismatch);
}

TEST_CASE("form_A exact and spectral routes agree on smooth bodies") {
  rnd::Rng rng(23);
  for (int i = 0; i < 20; ++i) {
    const auto a = sf::from_ellipse(rnd::random_ellipse(rng), 2048);
    const auto b = sf::from_ellipse(rnd::random_ellipse(rng), 2048);
    CHECK(std::abs(form_A(a, b) - form_A_spectral(a, b)) < 1e-11 * form_A(a, b));
  }
}

TEST_CASE("h1 seminorms") {
  const auto one = h1_seminorms(EvenFn::constant(64, 1.0));
  CHECK(one.l2sq == doctest::Approx(kTwoPi));
  CHECK(std::abs(one.dl2sq) < 1e-14);
  const auto c = h1_seminorms(EvenFn::from_function(64, [](double t) { return std::cos(2 * t); }));
  CHECK(c.l2sq == doctest::Approx(kPi));
  CHECK(c.dl2sq == doctest::Approx(4 * kPi));
  rnd::Rng rng(4);
  for (int i = 0; i < 20; ++i) {
    const auto h = rnd::random_band_limited(rng, 256, 12, false);
    const auto n = h1_seminorms(h);
    CHECK(std::abs((n.l2sq - n.dl2sq) / kTwoPi - form_A_spectral(h, h)) < 1e-12 * (n.l2sq + n.dl2sq));
  }
}

TEST_CASE("normalize") {
  const auto p = normalize(EvenFn::constant(64, 2.0));
  for (double x : p.fn().samples()) CHECK(x == doctest::Approx(1.0));
  const Polygon square({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  const auto q = normalize(sf::from_polygon(square, 1024));
  CHECK(q.fn()[0] == doctest::Approx(std::sqrt(kPi) / 2).epsilon(1e-14));
  CHECK(std::abs(form_A(q.fn()) - 1.0) < 1e-12);
  CHECK_THROWS_AS(normalize(sf::from_segment(Segment({1, 2}), 64)), NotTimelike);
  CHECK_THROWS_AS(normalize(EvenFn::from_function(64, [](double t) { return std::cos(2 * t); })), NotTimelike);
  CHECK_THROWS_AS(HPoint(EvenFn::constant(64, 2.0)), InvariantViolation);
}

TEST_CASE("acosh1p and clamping") {
  CHECK(acosh1p(0.0) == 0.0);
  CHECK(acosh1p(1e-20) == doctest::Approx(std::sqrt(2e-20)).epsilon(1e-12));
  CHECK(acosh1p(3.0) == doctest::Approx(std::acosh(4.0)).epsilon(1e-15));
  CHECK(distance_from_cosh(1.0 - 5e-13) == 0.0);
  CHECK(distance_from_cosh(1.0 - 5e-10) == 0.0);
  CHECK_THROWS_AS(distance_from_cosh(1.0 - 1e-8), InvariantViolation);
  CHECK(distance_from_cosh(std::cosh(2.0)) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("hyper_dist") {
  const auto disc = normalize(EvenFn::constant(1024, 1.0));
  CHECK(hyper_dist(disc, disc) == 0.0);
  // Disc to T_1(D) against an independent quadrature of (1/2pi) int |T u|.
  boost::math::quadrature::gauss_kronrod<double, 61> gk;
  const double e = std::exp(0.5);
  const double c = gk.integrate([e](double t) { return std::hypot(e * std::cos(t), std::sin(t) / e); }, 0.0, kTwoPi,
                                15, 1e-15) /
                   kTwoPi;
  const auto t1 = normalize(ellipse_T(1.0, 1024));
  CHECK(std::abs(hyper_dist(disc, t1) - std::acosh(c)) < 1e-12);
  rnd::Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const auto a = normalize(rnd::random_body(rng, 512));
    const auto b = normalize(rnd::random_body(rng, 512));
    const auto d = normalize(rnd::random_body(rng, 512));
    CHECK(hyper_dist(a, d) <= hyper_dist(a, b) + hyper_dist(b, d) + 1e-10);
    CHECK(std::abs(hyper_dist(a, b) - hyper_dist(b, a)) < 1e-12);
  }
}

TEST_CASE("geodesics") {
  rnd::Rng rng(8);
  for (int i = 0; i < 20; ++i) {
    const auto p = normalize(rnd::random_body(rng, 512));
    const auto q = normalize(rnd::random_body(rng, 512));
    const double total = hyper_dist(p, q);
    for (double t : {0.1, 0.5, 0.8}) {
      const auto m = geodesic_point(p, q, t);
      CHECK(std::abs(hyper_dist(p, m) + hyper_dist(m, q) - total) < 1e-9 * (1 + total));
    }
    const auto mid = geodesic_point(p, q, 0.5);
    CHECK(std::abs(hyper_dist(p, mid) - hyper_dist(mid, q)) < 1e-9 * (1 + total));
  }
}

TEST_CASE("segment geodesic and rhombus") {
  const BoundaryDir nu(0.0), omega(kPi / 2);
  const auto r = project_disc_to_segment_geodesic(nu, omega, 1024);
  const Polygon square({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
  const auto sq = normalize(sf::from_polygon(square, 1024));
  for (std::size_t j = 0; j < 1024; ++j) CHECK(std::abs(r.fn()[j] - sq.fn()[j]) < 1e-14);
  // Oblique pair: equal coefficients a |<u, v>| + a |<u, w>|.
  const BoundaryDir v(0.3), w(1.4);
  const double phi = angle_between(v, w);
  const double a = std::sqrt(kPi / (4 * std::sin(phi)));
  const auto rh = project_disc_to_segment_geodesic(v, w, 512);
  for (std::size_t j = 0; j < 512; j += 7) {
    const Vec2 u = unit(rh.fn().angle(j));
    CHECK(std::abs(rh.fn()[j] - a * (std::abs(dot(u, v.direction())) + std::abs(dot(u, w.direction())))) < 1e-13);
  }
  const auto disc = normalize(EvenFn::constant(512, 1.0));
  for (double lambda : {-1.0, -0.2, 0.3, 2.0}) {
    const auto p = segment_geodesic_point(v, w, lambda, 512);
    CHECK(pi0(p.fn()) > pi0(rh.fn()));
    CHECK(hyper_dist(disc, p) > hyper_dist(disc, rh));
  }
  CHECK_THROWS_AS(project_disc_to_segment_geodesic(v, v, 64), DomainError);
}
