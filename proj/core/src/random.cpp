#include "hypkonvex/random.hpp"

#include <cmath>
#include <vector>

#include "hypkonvex/errors.hpp"
#include "hypkonvex/supportfn.hpp"

namespace hypkonvex::rnd {
namespace {

double uniform(Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

}  // namespace

Ellipse random_ellipse(Rng& rng, double max_condition) {
  // Draws are sequenced explicitly: argument evaluation order is unspecified.
  const double sigma = std::exp(0.5 * uniform(rng, 0.0, std::log(max_condition)));
  const double phi1 = uniform(rng, 0.0, kTwoPi);
  const double phi2 = uniform(rng, 0.0, kTwoPi);
  const Mat2 m = Mat2::rotation(phi1) * Mat2::diag(sigma, 1.0 / sigma) * Mat2::rotation(phi2);
  return Ellipse(m);
}

Polygon random_polygon(Rng& rng) {
  std::lognormal_distribution<double> radius(0.0, 0.5);
  std::uniform_int_distribution<int> count(2, 6);
  for (;;) {
    const int k = count(rng);
    std::vector<Vec2> pts;
    for (int i = 0; i < k; ++i) {
      const double phi = uniform(rng, 0.0, kPi);
      pts.push_back(unit(phi) * radius(rng));
    }
    try {
      return Polygon::symmetric_hull(pts);
    } catch (const InvalidShape&) {
      // Degenerate draw (all points collinear); try again.
    }
  }
}

EvenFn random_body(Rng& rng, std::size_t M) {
  if (std::bernoulli_distribution(0.5)(rng)) return supportfn::from_ellipse(random_ellipse(rng), M);
  return supportfn::from_polygon(random_polygon(rng), M);
}

EvenFn random_band_limited(Rng& rng, std::size_t M, int degree, bool mean_zero) {
  std::normal_distribution<double> g(0.0, 1.0);
  const double a0 = mean_zero ? 0.0 : g(rng);
  std::vector<double> a, b;
  for (int n = 2; n <= degree; n += 2) {
    const double an = g(rng);
    const double bn = g(rng);
    a.push_back(an / n);
    b.push_back(bn / n);
  }
  return EvenFn::from_function(M, [&](double t) {
    double v = a0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double n = 2.0 * static_cast<double>(i + 1);
      v += a[i] * std::cos(n * t) + b[i] * std::sin(n * t);
    }
    return v;
  });
}

mobius::Mobius random_mobius(Rng& rng, double max_norm) {
  const double s = uniform(rng, 0.0, 2.0 * std::log(max_norm));
  const double phi1 = uniform(rng, 0.0, kTwoPi);
  const double phi2 = uniform(rng, 0.0, kTwoPi);
  const Mat2 m = Mat2::rotation(phi1) * Mat2::diag(std::exp(0.5 * s), std::exp(-0.5 * s)) * Mat2::rotation(phi2);
  return mobius::Mobius(m, 1e-9);
}

mobius::HalfPlanePoint random_half_plane_point(Rng& rng) {
  const double x = uniform(rng, -2.0, 2.0);
  return {x, std::exp(uniform(rng, -2.0, 2.0))};
}

}  // namespace hypkonvex::rnd
