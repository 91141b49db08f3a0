#include <doctest.h>

#include <cmath>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <json.hpp>

#include "hypkonvex/errors.hpp"
#include "hypkonvex/random.hpp"
#include "hypkonvex/supportfn.hpp"
#include "hypkonvex/verify.hpp"

using namespace hypkonvex;
using namespace hypkonvex::verify;
namespace sf = hypkonvex::supportfn;

TEST_CASE("circle Jacobian integrates to one") {
  boost::math::quadrature::gauss_kronrod<double, 61> gk;
  for (double t : {0.1, 0.7, 2.0}) {
    const double v = gk.integrate([t](double th) { return jacobian_circle(t, th); }, 0.0, kTwoPi, 15, 1e-14);
    CHECK(v / kTwoPi == doctest::Approx(1.0).epsilon(1e-12));
  }
  CHECK(jacobian_circle(0.0, 1.3) == doctest::Approx(1.0));
}

TEST_CASE("kernels") {
  for (double t : {0.05, 0.5, 1.0, 3.0}) {
    const auto k = kernels_compare(t);
    CHECK(std::abs(k.I1 - k.closed) < 1e-10 * k.closed);
    CHECK(std::abs(k.I2 - k.closed) < 1e-10 * k.closed);
    CHECK(k.kern2 == doctest::Approx(std::exp(t)).epsilon(1e-13));
    CHECK(k.gap > 0.0);
  }
  CHECK_THROWS_AS(kernels_compare(0.0), DomainError);
}

TEST_CASE("extended Minkowski residual") {
  const std::vector<EvenFn> discs{EvenFn::constant(256, 1.0), EvenFn::constant(256, 2.0)};
  const std::vector<double> c{1.5};
  const auto r = minkowski_extended_test(discs, c);
  CHECK(std::abs(r.residual) < 1e-12 * r.scale);
  rnd::Rng rng(6);
  for (int i = 0; i < 20; ++i) {
    std::vector<EvenFn> b{rnd::random_body(rng, 512), rnd::random_body(rng, 512), rnd::random_body(rng, 512)};
    const std::vector<double> cc{0.4, 1.7};
    const auto x = minkowski_extended_test(b, cc);
    CHECK(x.residual >= -1e-12 * x.scale);
  }
  CHECK_THROWS_AS(minkowski_extended_test(discs, std::vector<double>{1.0, 2.0}), DomainError);
  const std::vector<EvenFn> seg{sf::from_segment(Segment({1, 0}), 256), EvenFn::constant(256, 1.0)};
  CHECK_THROWS_AS(minkowski_extended_test(seg, c), DomainError);
}

TEST_CASE("ellipse sums") {
  const EllipseShape disc{Mat2::identity()};
  CHECK(ellipse_sum_test(disc, disc, 512) < 1e-25);
  const EllipseShape a{Mat2::diag(2.0, 0.5)};
  const EllipseShape a3{Mat2::diag(6.0, 1.5)};
  CHECK(ellipse_sum_test(a, a3, 512) < 1e-20);
  CHECK(ellipse_sum_test(a, EllipseShape{Mat2::diag(0.5, 2.0)}, 512) > 1e-3);
  CHECK_THROWS_AS(ellipse_sum_test(EvenFn::constant(64, 1.0), EvenFn::constant(128, 1.0)), GridMismatch);
}

TEST_CASE("curvature estimate") {
  const std::vector<double> s{0.04, 0.02, 0.01, 0.005};
  const auto est = curvature_scale_estimate(s);
  CHECK(est.ratios.size() == 4);
  CHECK(std::abs(est.extrapolated - std::sqrt(3.0 / 8.0)) < 1e-8);
  CHECK_THROWS_AS(curvature_scale_estimate(std::vector<double>{0.1}), DomainError);
  CHECK_THROWS_AS(curvature_scale_estimate(std::vector<double>{0.1, -0.1}), DomainError);
}

TEST_CASE("quasi-isometry suite") {
  const auto rep = quasi_iso_suite(40.0, 400);
  CHECK(rep.pass);
  CHECK(rep.cases == rep.records.size());
  CHECK_THROWS_AS(quasi_iso_suite(41.0), DomainError);
}

TEST_CASE("rhombus search") {
  const auto r = rhombus_search(BoundaryDir(0.2), BoundaryDir(1.3), 1024);
  CHECK(std::abs(r.lambda) < 1e-6);
  CHECK(r.sup_error < 1e-12);
  CHECK(r.pi0_min < lorentz::pi0(lorentz::segment_geodesic_point(BoundaryDir(0.2), BoundaryDir(1.3), 0.1, 1024).fn()));
}

TEST_CASE("Gram determinant") {
  const std::vector<EvenFn> same{EvenFn::constant(256, 1.0), EvenFn::constant(256, 3.0)};
  CHECK(gram_normalized_det(same) < 1e-14);
  const std::vector<EvenFn> two{EvenFn::constant(256, 1.0),
                                sf::from_ellipse(Ellipse(Mat2::diag(2.0, 0.5)), 256)};
  CHECK(gram_normalized_det(two) > 1e-3);
  const std::vector<EvenFn> bad{sf::from_segment(Segment({1, 0}), 256), EvenFn::constant(256, 1.0)};
  CHECK_THROWS_AS(gram_normalized_det(bad), DomainError);
}

TEST_CASE("digest and reports") {
  const std::vector<double> x{1.0, 2.0};
  CHECK(digest(x).size() == 16);
  CHECK(digest(x) == digest(std::vector<double>{1.0, 2.0}));
  CHECK(digest(x) != digest(std::vector<double>{2.0, 1.0}));
  CHECK(digest(std::vector<double>{}) == "cbf29ce484222325");

  SuiteReport r;
  r.suite = "demo";
  r.records.push_back({"a", "0", {}, 0.5, 1.0});
  r.records.push_back({"b", "0", {}, -0.0, 1.0});
  finalize(r);
  CHECK(r.pass);
  CHECK_FALSE(r.normalized);
  CHECK(r.max_violation == 0.5);
  r.records.push_back({"c", "0", {}, 2e-3, 1e-3});
  finalize(r);
  CHECK(r.normalized);
  CHECK(r.tolerance == 1.0);
  CHECK(r.max_violation == doctest::Approx(2.0));
  CHECK_FALSE(r.pass);

  const auto j = nlohmann::ordered_json::parse(to_json(r));
  std::vector<std::string> keys;
  for (const auto& [k, v] : j.items()) keys.push_back(k);
  CHECK(keys == std::vector<std::string>{"suite", "seed", "grid", "cases", "max_violation", "tolerance", "pass",
                                         "normalized", "records"});
  CHECK(j["cases"] == 3);
  CHECK(j["records"].size() == 3);
}

TEST_CASE("suite registry") {
  CHECK(suite_names().size() == 11);
  CHECK_THROWS_AS(run_suite("nope", {}), DomainError);
  const auto reps = run_suite("kernels", {0, 256});
  REQUIRE(reps.size() == 1);
  CHECK(reps[0].pass);
  CHECK(to_json(reps[0]) == to_json(run_suite("kernels", {0, 256})[0]));
}
