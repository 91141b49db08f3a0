// Acceptance checks: one line per criterion, nonzero exit if any fails.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "hypkonvex/limits.hpp"
#include "hypkonvex/lorentz.hpp"
#include "hypkonvex/mobius.hpp"
#include "hypkonvex/random.hpp"
#include "hypkonvex/supportfn.hpp"
#include "hypkonvex/verify.hpp"

using namespace hypkonvex;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a);
  return buf;
}

// Max raw violation per record label.
std::map<std::string, double> worst_by_label(const verify::SuiteReport& r) {
  std::map<std::string, double> m;
  for (const auto& c : r.records) {
    auto it = m.find(c.label);
    if (it == m.end()) m[c.label] = c.violation;
    else it->second = std::max(it->second, c.violation);
  }
  return m;
}

std::map<std::string, double> worst_by_prefix(const verify::SuiteReport& r) {
  std::map<std::string, double> m;
  for (const auto& [label, v] : worst_by_label(r)) {
    const std::string key = label.substr(0, label.find('='));
    auto it = m.find(key);
    if (it == m.end()) m[key] = v;
    else it->second = std::max(it->second, v);
  }
  return m;
}

verify::SuiteReport suite(const std::string& name) { return verify::run_suite(name, {1, 2048}).front(); }

// 1. Area identity.
Outcome area_identity() {
  rnd::Rng rng(20240101);
  std::vector<Polygon> polys;
  for (int i = 0; i < 100; ++i) polys.push_back(rnd::random_polygon(rng));
  auto rel_errors = [&](std::size_t M) {
    std::vector<double> e;
    for (const auto& p : polys) {
      const EvenFn h = supportfn::from_polygon(p, M).untagged();
      const double area = shoelace_area(p.vertices());
      e.push_back(std::abs(kPi * lorentz::form_A_spectral(h, h) - area) / area);
    }
    return e;
  };
  auto total = [](const std::vector<double>& e) {
    double t = 0.0;
    for (double x : e) t += x;
    return t;
  };
  // Aliasing at the kinks makes a single doubling ratio fluctuate, so the order is
  // the least-squares slope of log2(total error) over five successive doublings.
  const std::vector<std::size_t> grids{1024, 2048, 4096, 8192, 16384};
  std::vector<double> x, y;
  double max1 = 0.0, single = 0.0, at4096 = 0.0;
  for (std::size_t M : grids) {
    const auto e = rel_errors(M);
    if (M == 4096) {
      max1 = *std::max_element(e.begin(), e.end());
      at4096 = total(e);
    }
    if (M == 8192) single = std::log2(at4096 / total(e));
    x.push_back(std::log2(static_cast<double>(M)));
    y.push_back(std::log2(total(e)));
  }
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  const double order = -(n * sxy - sx * sy) / (n * sxx - sx * sx);
  double max_ell = 0.0;
  for (int i = 0; i < 100; ++i) {
    const EvenFn h = supportfn::from_ellipse(rnd::random_ellipse(rng), 4096).untagged();
    max_ell = std::max(max_ell, std::abs(kPi * lorentz::form_A_spectral(h, h) - kPi) / kPi);
  }
  const bool ok = max1 < 1e-2 && order >= 1.0 && max_ell < 1e-10;
  return {ok, fmt("polygon max rel err %.3g at M=4096", max1) + fmt(", observed order %.3f", order) +
                  fmt(" (4096->8192 alone %.3f)", single) +
                  fmt(", ellipse max rel err %.3g", max_ell)};
}

// 2. Kernel equality.
Outcome kernel_equality() {
  double worst = 0.0;
  for (int i = 1; i <= 50; ++i) {
    const auto k = verify::kernels_compare(0.1 * i);
    worst = std::max({worst, std::abs(k.I1 - k.closed), std::abs(k.I2 - k.closed)});
  }
  return {worst < 1e-9, fmt("max |I - closed| = %.3g", worst)};
}

// 3. Curvature scale.
Outcome curvature_scale() {
  const double target = std::sqrt(3.0 / 8.0);
  const double ratio = mobius::iota_dist_closed(1e-2) / 1e-2;
  const std::vector<double> s{0.02, 0.01, 0.005, 0.0025};
  const auto est = verify::curvature_scale_estimate(s);
  const double e1 = std::abs(ratio - target), e2 = std::abs(est.extrapolated - target);
  return {e1 < 1e-4 && e2 < 1e-8, fmt("|ratio(1e-2) - sqrt(3/8)| = %.3g", e1) + fmt(", extrapolated err %.3g", e2)};
}

// 4. Quasi-isometry.
Outcome quasi_isometry() {
  const auto r = verify::quasi_iso_suite(40.0, 400);
  const auto w = worst_by_label(r);
  const bool ok = w.at("lower") <= 0.0 + 1e-12 && w.at("upper") <= 1e-12 && w.at("deviation") <= 0.5;
  return {ok, fmt("sandwich excess lower %.3g", w.at("lower")) + fmt(", upper %.3g", w.at("upper")) +
                  fmt(", max |d - s/2| = %.4f", w.at("deviation"))};
}

// 5. Minkowski suite.
Outcome minkowski() {
  const auto a = worst_by_label(suite("minkowski"));
  const auto b = worst_by_label(suite("extended"));
  double ext = -INFINITY;
  for (const auto& [k, v] : b) ext = std::max(ext, v);
  const bool ok = a.at("pair") <= 1e-12 && ext <= 1e-9 && a.at("homothetic") < 1e-9;
  return {ok, fmt("pairs min scaled residual %.3g", -a.at("pair")) + fmt(", extended min %.3g", -ext) +
                  fmt(", homothetic defect %.3g", a.at("homothetic"))};
}

// 6. Sobolev inequalities.
Outcome sobolev() {
  const auto w = suite("wirtinger");
  const auto e = suite("encadrement");
  const bool ok = w.max_violation <= 1e-12 && e.max_violation <= 1e-12 && w.cases == 1000 && e.cases == 1000;
  return {ok, fmt("min slack Wirtinger %.3g", -w.max_violation) + fmt(", bracket %.3g", -e.max_violation)};
}

// 7. Visual metric.
Outcome visual_metric() {
  const double perp = limits::visual_dist(BoundaryDir(0.3), BoundaryDir(0.3 + 0.5 * kPi));
  const double e_perp = std::abs(perp - 0.5 * std::sqrt(kPi));
  rnd::Rng rng(7);
  std::uniform_real_distribution<double> ang(0.0, kPi);
  double e_form = 0.0;
  for (int i = 0; i < 50; ++i) {
    const BoundaryDir d1(ang(rng)), d2(ang(rng));
    e_form = std::max(e_form, std::abs(limits::visual_dist(d1, d2) - limits::visual_dist_via_form(d1, d2, 2048)));
  }
  // Gromov-product ratios for three directions at radius 15.
  const std::vector<double> radii{10.0, 12.0, 15.0};
  const BoundaryDir z1(0.2), z2(1.1), z3(2.4);
  const auto p1 = limits::escaping_sequence(z1, radii, 2048);
  const auto p2 = limits::escaping_sequence(z2, radii, 2048);
  const auto p3 = limits::escaping_sequence(z3, radii, 2048);
  const auto g12 = limits::visual_dist_generic(p1, p2);
  const auto g13 = limits::visual_dist_generic(p1, p3);
  const auto g23 = limits::visual_dist_generic(p2, p3);
  const double v12 = limits::visual_dist(z1, z2), v13 = limits::visual_dist(z1, z3), v23 = limits::visual_dist(z2, z3);
  const double r1 = std::abs((g12.value / g13.value) / (v12 / v13) - 1.0);
  const double r2 = std::abs((g12.value / g23.value) / (v12 / v23) - 1.0);
  const double ratio_err = std::max(r1, r2);
  const bool ok = e_perp < 1e-12 && e_form < 1e-9 && ratio_err < 0.02;
  return {ok, fmt("perpendicular err %.3g", e_perp) + fmt(", form vs closed %.3g", e_form) +
                  fmt(", Gromov ratio err %.3g", ratio_err)};
}

// 8. Hausdorff dimension.
Outcome hausdorff() {
  const auto a = limits::hausdorff_dim_estimate(4, 12);
  const auto e = limits::empirical_dimension(4, 12, 100000, 1);
  const auto c = limits::hausdorff_dim_estimate(4, 12, limits::DirectionMetric::round());
  const bool ok = a.slope >= 1.98 && a.slope <= 2.02 && std::abs(e.fit.slope - a.slope) <= 0.1 && c.slope >= 0.99 &&
                  c.slope <= 1.01;
  return {ok, fmt("analytic slope %.5f", a.slope) + fmt(", empirical %.4f", e.fit.slope) +
                  " on j in [" + std::to_string(e.j_min) + "," + std::to_string(e.j_max) + "]" +
                  fmt(", control %.5f", c.slope)};
}

// 9. Rhombus projection.
Outcome rhombus() {
  rnd::Rng rng(9);
  std::uniform_real_distribution<double> ang(0.0, kPi);
  double worst_lambda = 0.0, worst_sup = 0.0;
  for (int i = 0; i < 20; ++i) {
    BoundaryDir nu(ang(rng)), om(ang(rng));
    while (angle_between(nu, om) < 1e-3) om = BoundaryDir(ang(rng));
    const auto r = verify::rhombus_search(nu, om, 2048);
    worst_lambda = std::max(worst_lambda, std::abs(r.lambda));
    worst_sup = std::max(worst_sup, r.sup_error);
  }
  return {worst_lambda <= 1e-6 && worst_sup <= 1e-9,
          fmt("max |lambda*| = %.3g", worst_lambda) + fmt(", sup-norm err %.3g", worst_sup)};
}

// 10. Equivariance and invariance.
Outcome equivariance() {
  const auto w = worst_by_label(suite("equivariance"));
  const bool ok = w.at("A-invariance") <= 1e-8 && w.at("iota-equivariance") <= 1e-10 && w.at("group-law") <= 1e-9;
  return {ok, fmt("A-invariance %.3g", w.at("A-invariance")) + fmt(", iota %.3g", w.at("iota-equivariance")) +
                  fmt(", group law %.3g", w.at("group-law"))};
}

// 11. Span dimension and ellipse sums.
Outcome span_dimension() {
  const auto g = suite("gram-rank");
  double min_det = INFINITY;
  for (const auto& c : g.records) min_det = std::min(min_det, c.values.front().second);
  const auto es = suite("ellipse-sum");
  double min_non = INFINITY, max_hom = 0.0;
  for (const auto& c : es.records) {
    const double e = c.values.front().second;
    if (c.label.rfind("homothetic", 0) == 0) max_hom = std::max(max_hom, e);
    else min_non = std::min(min_non, e);
  }
  const bool ok = g.cases == 250 && min_det > 1e-10 && min_non > 1e-6 && max_hom < 1e-12;
  return {ok, fmt("min normalized |det| %.3g", min_det) + fmt(", non-homothetic min energy %.3g", min_non) +
                  fmt(", homothetic max %.3g", max_hom)};
}

// 12. Determinism.
Outcome determinism() {
  auto dump = [] {
    std::string s;
    for (const auto& r : verify::run_suite("all", {1, 2048})) s += verify::to_json(r);
    return s;
  };
  const std::string a = dump(), b = dump();
  return {a == b, "two runs of all suites, seed 1: " + std::to_string(a.size()) + " bytes, " +
                      (a == b ? "identical" : "different")};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"area identity", area_identity},   {"kernel equality", kernel_equality},
      {"curvature scale", curvature_scale}, {"quasi-isometry", quasi_isometry},
      {"Minkowski suite", minkowski},     {"Sobolev inequalities", sobolev},
      {"visual metric", visual_metric},   {"Hausdorff dimension", hausdorff},
      {"rhombus projection", rhombus},    {"equivariance", equivariance},
      {"span dimension", span_dimension}, {"determinism", determinism},
  };
  const std::map<std::string, double> budget{{"area identity", 10.0}, {"kernel equality", 1.0}, {"Hausdorff dimension", 30.0}};
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto& [name, fn] = criteria[i];
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (auto it = budget.find(name); it != budget.end() && secs > it->second) {
      o.pass = false;
      o.detail += fmt(", over time budget of %.0f s", it->second);
    }
    std::printf("[%s] %2zu %-21s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", i + 1, name.c_str(), o.detail.c_str(), secs);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
