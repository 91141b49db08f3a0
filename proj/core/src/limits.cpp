#include "hypkonvex/limits.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "hypkonvex/errors.hpp"
#include "hypkonvex/supportfn.hpp"

namespace hypkonvex::limits {

EvenFn boundary_rep(BoundaryDir d, std::size_t M) {
  return supportfn::from_segment(Segment(d.direction() * (0.5 * kPi)), M);
}

double visual_dist(BoundaryDir d1, BoundaryDir d2) {
  return 0.5 * std::sqrt(kPi) * std::sqrt(std::sin(angle_between(d1, d2)));
}

double visual_dist_via_form(BoundaryDir d1, BoundaryDir d2, std::size_t M) {
  const auto sum = supportfn::combine(1.0, boundary_rep(d1, M), 1.0, boundary_rep(d2, M));
  return 0.5 * std::sqrt(std::max(0.0, lorentz::form_A(sum)));
}

std::vector<lorentz::HPoint> escaping_sequence(BoundaryDir d, std::span<const double> radii, std::size_t M) {
  std::vector<lorentz::HPoint> out;
  out.reserve(radii.size());
  const Mat2 rot = Mat2::rotation(d.theta());
  for (double r : radii) {
    if (!(r >= 0.0)) throw DomainError("escaping radii must be nonnegative");
    const Mat2 m = rot * Mat2::diag(std::exp(0.5 * r), std::exp(-0.5 * r));
    out.push_back(lorentz::normalize(supportfn::from_ellipse_shape(EllipseShape{m}, M)));
  }
  return out;
}

GromovEstimate visual_dist_generic(std::span<const lorentz::HPoint> p, std::span<const lorentz::HPoint> q) {
  if (p.size() != q.size() || p.empty()) {
    throw DomainError("escaping sequences must be nonempty and of equal length");
  }
  const std::size_t M = p.front().fn().grid();
  const lorentz::HPoint one = lorentz::normalize(EvenFn::constant(M, 1.0));
  GromovEstimate g;
  double last_p = -1.0, last_q = -1.0;
  for (std::size_t n = 0; n < p.size(); ++n) {
    const double dp = lorentz::hyper_dist(p[n], one);
    const double dq = lorentz::hyper_dist(q[n], one);
    if (!(dp > last_p) || !(dq > last_q)) {
      throw DomainError("sequence does not escape: distances from the disc must increase");
    }
    last_p = dp;
    last_q = dq;
    const double dpq = lorentz::hyper_dist(p[n], q[n]);
    g.estimates.push_back(std::exp(-0.5 * (dp + dq - dpq)));
  }
  g.value = g.estimates.back();
  return g;
}

DirectionMetric DirectionMetric::visual() { return DirectionMetric{}; }

DirectionMetric DirectionMetric::round() {
  DirectionMetric m;
  m.kind_ = Kind::Round;
  return m;
}

DirectionMetric DirectionMetric::power(const DirectionMetric& base, double lambda, double t) {
  if (!(lambda > 0.0) || !(t > 0.0)) throw DomainError("power metric needs lambda > 0 and t > 0");
  DirectionMetric m = base;
  m.t_ = base.t_ * t;
  // lambda (l0 b^t0)^t = lambda l0^t b^(t0 t)
  m.lambda_ = lambda * std::pow(base.lambda_, t);
  return m;
}

double DirectionMetric::of_angle(double angle) const {
  const double base = kind_ == Kind::Visual ? 0.5 * std::sqrt(kPi) * std::sqrt(std::sin(angle)) : angle;
  return lambda_ * std::pow(base, t_);
}

double DirectionMetric::ball_half_width(double eps) const {
  if (!(eps > 0.0)) throw DomainError("ball radius must be positive");
  const double base = std::pow(eps / lambda_, 1.0 / t_);
  if (kind_ == Kind::Visual) {
    const double x = 4.0 * base * base / kPi;
    // asin turns an ulp below 1 into an angle error of order 1e-8.
    return x >= 1.0 - 1e-14 ? 0.5 * kPi : std::asin(x);
  }
  return std::min(0.5 * kPi, base);
}

std::int64_t covering_number(double eps, const DirectionMetric& metric) {
  const double ratio = kPi / (2.0 * metric.ball_half_width(eps));
  // A ratio within rounding of an integer needs exactly that many balls.
  return static_cast<std::int64_t>(std::ceil(ratio * (1.0 - 1e-12)));
}

namespace {

DimensionFit fit_line(std::vector<double> eps, std::vector<double> counts) {
  const std::size_t n = eps.size();
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = -std::log(eps[i]);
    const double y = std::log(counts[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  const double dn = static_cast<double>(n);
  const double slope = (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
  const double icept = (sy - slope * sx) / dn;
  double ss = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = std::log(counts[i]) - (icept - slope * std::log(eps[i]));
    ss += r * r;
  }
  return {slope, std::sqrt(ss / dn), std::move(eps), std::move(counts)};
}

void check_range(int j_min, int j_max) {
  if (!(j_min >= 2 && j_max > j_min)) {
    throw DomainError("scale range needs j_max > j_min >= 2, got [" + std::to_string(j_min) + ", " +
                      std::to_string(j_max) + "]");
  }
}

}  // namespace

DimensionFit hausdorff_dim_estimate(int j_min, int j_max, const DirectionMetric& metric) {
  check_range(j_min, j_max);
  std::vector<double> eps, counts;
  for (int j = j_min; j <= j_max; ++j) {
    eps.push_back(std::ldexp(1.0, -j));
    counts.push_back(static_cast<double>(covering_number(eps.back(), metric)));
  }
  return fit_line(std::move(eps), std::move(counts));
}

std::int64_t greedy_cover_count(std::span<const double> a, double eps, const DirectionMetric& metric) {
  std::int64_t count = 0;
  std::size_t i = 0;
  const std::size_t n = a.size();
  auto within = [&](double d) { return d <= 0.5 * kPi && metric.of_angle(d) <= eps; };
  while (i < n) {
    ++count;
    const double start = a[i];
    std::size_t c = i;
    while (c + 1 < n && within(a[c + 1] - start)) ++c;
    const double centre = a[c];
    i = c + 1;
    while (i < n && within(a[i] - centre)) ++i;
  }
  return count;
}

EmpiricalFit empirical_dimension(int j_min, int j_max, std::size_t samples, std::uint64_t seed,
                                 const DirectionMetric& metric) {
  check_range(j_min, j_max);
  if (samples < 2) throw DomainError("empirical cover needs at least two samples");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(0.0, kPi);
  std::vector<double> angles(samples);
  for (auto& a : angles) a = dist(rng);
  std::sort(angles.begin(), angles.end());
  const double spacing = kPi / static_cast<double>(samples);

  EmpiricalFit out;
  std::vector<double> eps, counts;
  for (int j = j_min; j <= j_max; ++j) {
    const double e = std::ldexp(1.0, -j);
    if (2.0 * metric.ball_half_width(e) < 16.0 * spacing) break;
    if (eps.empty()) out.j_min = j;
    out.j_max = j;
    eps.push_back(e);
    counts.push_back(static_cast<double>(greedy_cover_count(angles, e, metric)));
  }
  if (eps.size() < 2) throw DomainError("fewer than two scales are resolved by the sample");
  out.fit = fit_line(std::move(eps), std::move(counts));
  return out;
}

}  // namespace hypkonvex::limits
