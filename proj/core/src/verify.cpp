#include "hypkonvex/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <map>
#include <random>

#include <json.hpp>

#include "hypkonvex/errors.hpp"
#include "hypkonvex/limits.hpp"
#include "hypkonvex/lorentz.hpp"
#include "hypkonvex/mobius.hpp"
#include "hypkonvex/quadrature.hpp"
#include "hypkonvex/random.hpp"
#include "hypkonvex/specfun.hpp"
#include "hypkonvex/supportfn.hpp"

namespace hypkonvex::verify {
namespace {

using lorentz::form_A;

CaseRecord record(std::string label, std::vector<double> inputs, std::vector<std::pair<std::string, double>> values,
                  double violation, double tolerance) {
  return {std::move(label), digest(inputs), std::move(values), violation, tolerance};
}

// A(h) above the rounding noise of isotropic vectors (A(h) <= pi0(h)^2).
bool timelike(double a, const EvenFn& h) {
  const double p = lorentz::pi0(h);
  return a > 1e-12 * p * p;
}

// Inputs of a tagged support function for digests: the tag data.
void push_tag(const EvenFn& h, std::vector<double>& out) {
  if (const auto* sum = std::get_if<ShapeSum>(&h.tag())) {
    for (const auto& e : sum->ellipses) out.insert(out.end(), {e.matrix.a, e.matrix.b, e.matrix.c, e.matrix.d});
    for (const auto& v : sum->ring) out.insert(out.end(), {v.x, v.y});
  } else if (const auto* e = std::get_if<EllipseShape>(&h.tag())) {
    out.insert(out.end(), {e->matrix.a, e->matrix.b, e->matrix.c, e->matrix.d});
  } else if (const auto* s = std::get_if<Segment>(&h.tag())) {
    out.insert(out.end(), {s->endpoint().x, s->endpoint().y});
  } else if (const auto* p = std::get_if<Polygon>(&h.tag())) {
    for (const auto& v : p->vertices()) out.insert(out.end(), {v.x, v.y});
  } else {
    const auto& f = h.fourier();
    for (std::size_t n = 0; n <= f.bandwidth; ++n) out.insert(out.end(), {f.a[n], f.b[n]});
  }
}

std::vector<double> tag_inputs(std::initializer_list<const EvenFn*> fns) {
  std::vector<double> out;
  for (const auto* f : fns) push_tag(*f, out);
  return out;
}

double uniform(rnd::Rng& rng, double a, double b) { return std::uniform_real_distribution<double>(a, b)(rng); }

SuiteReport make(std::string name, const SuiteOptions& o) {
  SuiteReport r;
  r.suite = std::move(name);
  r.seed = o.seed;
  r.grid = o.grid;
  return r;
}

// ---- suites ---------------------------------------------------------------

SuiteReport suite_minkowski(const SuiteOptions& o) {
  auto rep = make("minkowski", o);
  rnd::Rng rng(o.seed);
  for (int i = 0; i < 1000; ++i) {
    const EvenFn h1 = rnd::random_body(rng, o.grid);
    const EvenFn h2 = rnd::random_body(rng, o.grid);
    const double a12 = form_A(h1, h2), a11 = form_A(h1), a22 = form_A(h2);
    const double scale = std::max(a12 * a12, a11 * a22);
    const double res = (a12 * a12 - a11 * a22) / scale;
    rep.records.push_back(record("pair", tag_inputs({&h1, &h2}), {{"A12", a12}, {"A11", a11}, {"A22", a22}, {"scaled_residual", res}},
                                 -res, 1e-12));
  }
  for (int i = 0; i < 100; ++i) {
    const EvenFn h1 = rnd::random_body(rng, o.grid);
    const double lambda = std::exp(uniform(rng, -2.0, 2.0));
    const EvenFn h2 = supportfn::scale(lambda, h1);
    const double a12 = form_A(h1, h2), a11 = form_A(h1), a22 = form_A(h2);
    const double scale = std::max(a12 * a12, a11 * a22);
    const double defect = std::abs(a12 * a12 - a11 * a22) / scale;
    auto in = tag_inputs({&h1});
    in.push_back(lambda);
    rep.records.push_back(record("homothetic", std::move(in), {{"lambda", lambda}, {"scaled_defect", defect}}, defect, 1e-9));
  }
  return rep;
}

SuiteReport suite_extended(const SuiteOptions& o) {
  auto rep = make("extended", o);
  rnd::Rng rng(o.seed);
  std::uniform_int_distribution<int> count(1, 5);
  for (int i = 0; i < 500; ++i) {
    const int n = count(rng);
    std::vector<EvenFn> bodies;
    std::vector<double> coeffs, in;
    for (int k = 0; k <= n; ++k) {
      bodies.push_back(rnd::random_body(rng, o.grid));
      push_tag(bodies.back(), in);
    }
    for (int k = 0; k < n; ++k) coeffs.push_back(uniform(rng, -2.0, 2.0));
    in.insert(in.end(), coeffs.begin(), coeffs.end());
    const auto r = minkowski_extended_test(bodies, coeffs);
    const double scaled = r.residual / r.scale;
    rep.records.push_back(record("n=" + std::to_string(n), std::move(in), {{"residual", r.residual}, {"scaled_residual", scaled}},
                                 -scaled, 1e-9));
  }
  return rep;
}

// Random even, mean-zero, band-limited functions shared by the two Sobolev suites.
template <class Check>
SuiteReport sobolev_suite(std::string name, const SuiteOptions& o, Check check) {
  auto rep = make(std::move(name), o);
  rnd::Rng rng(o.seed);
  std::uniform_int_distribution<int> deg(1, 16);
  for (int i = 0; i < 1000; ++i) {
    const int degree = 2 * deg(rng);
    const EvenFn h = rnd::random_band_limited(rng, o.grid, degree, true);
    const auto s = lorentz::h1_seminorms(h);
    check(rep, h, s, degree);
  }
  return rep;
}

SuiteReport suite_wirtinger(const SuiteOptions& o) {
  return sobolev_suite("wirtinger", o, [](SuiteReport& rep, const EvenFn& h, const lorentz::H1Seminorms& s, int degree) {
    const double slack = (0.25 * s.dl2sq - s.l2sq) / s.dl2sq;
    rep.records.push_back(record("degree=" + std::to_string(degree), tag_inputs({&h}),
                                 {{"l2sq", s.l2sq}, {"dl2sq", s.dl2sq}, {"scaled_slack", slack}}, -slack, 1e-12));
  });
}

SuiteReport suite_encadrement(const SuiteOptions& o) {
  return sobolev_suite("encadrement", o, [](SuiteReport& rep, const EvenFn& h, const lorentz::H1Seminorms& s, int degree) {
    const double neg_a = -lorentz::form_A_spectral(h, h);
    const double h1sq = s.l2sq + s.dl2sq;
    const double lower = 3.0 / (16.0 * kPi) * h1sq;
    const double upper = h1sq / kTwoPi;
    const double slack = std::min(neg_a - lower, upper - neg_a) / upper;
    rep.records.push_back(record("degree=" + std::to_string(degree), tag_inputs({&h}),
                                 {{"minus_A", neg_a}, {"lower", lower}, {"upper", upper}, {"scaled_slack", slack}}, -slack,
                                 1e-12));
  });
}

SuiteReport suite_curvature(const SuiteOptions& o) {
  auto rep = make("curvature", o);
  const double target = std::sqrt(3.0 / 8.0);
  const std::vector<double> s{0.04, 0.02, 0.01, 0.005, 0.0025};
  const auto est = curvature_scale_estimate(s);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0.01) {
      rep.records.push_back(record("ratio", {s[i]}, {{"s", s[i]}, {"ratio", est.ratios[i]}},
                                   std::abs(est.ratios[i] - target), 1e-4));
    }
  }
  rep.records.push_back(record("richardson", s, {{"extrapolated", est.extrapolated}},
                               std::abs(est.extrapolated - target), 1e-8));
  const double sq = 1e-3;
  const double c = mobius::iota_cosh_quadrature(mobius::Mobius::hyperbolic(sq));
  rep.records.push_back(record("quadrature-expansion", {sq}, {{"cosh", c}, {"model", 1.0 + 3.0 * sq * sq / 16.0}},
                               std::abs(c - (1.0 + 3.0 * sq * sq / 16.0)), 1e-13));
  return rep;
}

SuiteReport suite_kernels(const SuiteOptions& o) {
  auto rep = make("kernels", o);
  for (int i = 1; i <= 50; ++i) {
    const double t = 0.1 * i;
    const auto k = kernels_compare(t);
    const std::vector<std::pair<std::string, double>> vals{
        {"t", t}, {"I1", k.I1}, {"I2", k.I2}, {"closed", k.closed}, {"kern2", k.kern2}, {"gap", k.gap}};
    rep.records.push_back(record("I1-closed", {t}, vals, std::abs(k.I1 - k.closed), 1e-10));
    rep.records.push_back(record("I2-closed", {t}, vals, std::abs(k.I2 - k.closed), 1e-10));
    rep.records.push_back(record("I1-I2", {t}, vals, std::abs(k.I1 - k.I2), 1e-10));
  }
  return rep;
}

SuiteReport suite_kernels_full(const SuiteOptions& o) {
  // The kernel identities share one tolerance; the kern2 checks are listed as
  // separate records with their own tolerances.
  auto rep = suite_kernels(o);
  for (int i = 1; i <= 50; ++i) {
    const double t = 0.1 * i;
    const auto k = kernels_compare(t);
    const double et = std::exp(t);
    rep.records.push_back(record("kern2-exp", {t}, {{"t", t}, {"kern2", k.kern2}}, std::abs(k.kern2 - et) / et, 1e-13));
    // gap > 0.01 e^t (1 - 2E/pi), expressed as bound / gap <= 1.
    const double bound = 0.01 * (et - k.closed);
    rep.records.push_back(record("gap", {t}, {{"t", t}, {"gap", k.gap}, {"bound", bound}},
                                 k.gap > 0.0 ? bound / k.gap : 1e300, 1.0));
  }
  return rep;
}

SuiteReport suite_dimension(const SuiteOptions& o) {
  auto rep = make("dimension", o);
  using limits::DirectionMetric;
  const auto analytic = limits::hausdorff_dim_estimate(4, 12);
  rep.records.push_back(record("analytic", {4, 12}, {{"slope", analytic.slope}, {"residual", analytic.residual}},
                               std::abs(analytic.slope - 2.0), 0.02));
  const auto emp = limits::empirical_dimension(2, 12, 100000, o.seed);
  rep.records.push_back(record("empirical", {2, 12, 1e5, static_cast<double>(o.seed)},
                               {{"slope", emp.fit.slope},
                                {"residual", emp.fit.residual},
                                {"j_min", static_cast<double>(emp.j_min)},
                                {"j_max", static_cast<double>(emp.j_max)}},
                               std::abs(emp.fit.slope - analytic.slope), 0.1));
  const auto round = limits::hausdorff_dim_estimate(4, 12, DirectionMetric::round());
  rep.records.push_back(record("round-control", {4, 12}, {{"slope", round.slope}, {"residual", round.residual}},
                               std::abs(round.slope - 1.0), 0.01));
  const auto scaled = limits::hausdorff_dim_estimate(4, 12, DirectionMetric::power(DirectionMetric::visual(), 2.0, 1.0));
  rep.records.push_back(record("scaled-visual", {4, 12, 2.0}, {{"slope", scaled.slope}},
                               std::abs(scaled.slope - 2.0), 0.02));
  const auto half = limits::hausdorff_dim_estimate(4, 12, DirectionMetric::power(DirectionMetric::round(), 1.0, 0.5));
  rep.records.push_back(record("round-power-half", {4, 12, 0.5}, {{"slope", half.slope}},
                               std::abs(half.slope - 2.0), 0.02));
  return rep;
}

EllipseShape shape_of(const Ellipse& e) { return EllipseShape{e.matrix()}; }

SuiteReport suite_ellipse_sum(const SuiteOptions& o) {
  auto rep = make("ellipse-sum", o);
  rnd::Rng rng(o.seed);
  auto energy_record = [&](const std::string& label, const EvenFn& h1, const EvenFn& h2, bool homothetic) {
    const double e = ellipse_sum_test(h1, h2);
    if (homothetic) {
      rep.records.push_back(record(label, tag_inputs({&h1, &h2}), {{"energy", e}}, e, 1e-12));
    } else {
      // energy > 1e-6, expressed as 1e-6 / energy <= 1.
      rep.records.push_back(record(label, tag_inputs({&h1, &h2}), {{"energy", e}}, e > 0.0 ? 1e-6 / e : 1e300, 1.0));
    }
  };
  for (int i = 0; i < 50; ++i) {
    const Ellipse e1 = rnd::random_ellipse(rng);
    Ellipse e2 = rnd::random_ellipse(rng);
    // Keep the pair well away from homothety: hyperbolic distance at least 0.5.
    while (lorentz::distance_from_cosh(lorentz::form_A_exact(shape_of(e1), shape_of(e2))) < 0.5) {
      e2 = rnd::random_ellipse(rng);
    }
    const EvenFn h1 = supportfn::from_ellipse(e1, o.grid);
    const EvenFn h2 = supportfn::from_ellipse(e2, o.grid);
    energy_record("non-homothetic", h1, h2, false);
    const auto m = rnd::random_mobius(rng);
    energy_record("non-homothetic-moved", mobius::rho_act(m, h1), mobius::rho_act(m, h2), false);
  }
  for (int i = 0; i < 50; ++i) {
    const Ellipse e1 = rnd::random_ellipse(rng);
    const double lambda = std::exp(uniform(rng, -1.0, 1.0));
    const EvenFn h1 = supportfn::from_ellipse(e1, o.grid);
    const EvenFn h2 = supportfn::from_ellipse_shape(EllipseShape{e1.matrix() * lambda}, o.grid);
    energy_record("homothetic", h1, h2, true);
    const auto m = rnd::random_mobius(rng);
    energy_record("homothetic-moved", mobius::rho_act(m, h1), mobius::rho_act(m, h2), true);
  }
  return rep;
}

constexpr double kGramSeparation = 0.5;

SuiteReport suite_gram_rank(const SuiteOptions& o) {
  auto rep = make("gram-rank", o);
  rnd::Rng rng(o.seed);
  for (int n = 2; n <= 6; ++n) {
    for (int draw = 0; draw < 50; ++draw) {
      std::vector<EvenFn> fns;
      std::vector<double> in;
      // Distinct means separated: redraw until every pair is at distance >= kGramSeparation.
      while (fns.size() < static_cast<std::size_t>(n + 1)) {
        EvenFn h = supportfn::from_ellipse(rnd::random_ellipse(rng), o.grid);
        bool far = true;
        for (const auto& f : fns) far = far && lorentz::hyper_dist(lorentz::HPoint(f), lorentz::HPoint(h)) >= kGramSeparation;
        if (!far) continue;
        push_tag(h, in);
        fns.push_back(std::move(h));
      }
      const double det = gram_normalized_det(fns);
      rep.records.push_back(record("n=" + std::to_string(n), std::move(in), {{"normalized_det", det}},
                                   det > 0.0 ? 1e-10 / det : 1e300, 1.0));
    }
  }
  return rep;
}

double sup_diff(const EvenFn& a, const EvenFn& b) {
  double m = 0.0;
  for (std::size_t j = 0; j < a.grid(); ++j) m = std::max(m, std::abs(a[j] - b[j]));
  return m;
}

SuiteReport suite_equivariance(const SuiteOptions& o) {
  auto rep = make("equivariance", o);
  rnd::Rng rng(o.seed);
  std::uniform_int_distribution<int> deg(1, 4);
  for (int i = 0; i < 200; ++i) {
    const auto m = rnd::random_mobius(rng);
    const int d1 = 2 * deg(rng);
    const EvenFn h1 = rnd::random_band_limited(rng, o.grid, d1, false);
    const int d2 = 2 * deg(rng);
    const EvenFn h2 = rnd::random_band_limited(rng, o.grid, d2, false);
    const double before = form_A(h1, h2);
    const double after = form_A(mobius::rho_act(m, h1), mobius::rho_act(m, h2));
    auto in = tag_inputs({&h1, &h2});
    in.insert(in.end(), {m.matrix().a, m.matrix().b, m.matrix().c, m.matrix().d});
    rep.records.push_back(record("A-invariance", std::move(in), {{"before", before}, {"after", after}},
                                 std::abs(after - before), 1e-8));
  }
  for (int i = 0; i < 200; ++i) {
    const auto m = rnd::random_mobius(rng);
    const auto z = rnd::random_half_plane_point(rng);
    const auto lhs = mobius::rho_act(m, mobius::iota(z, o.grid).fn());
    const auto rhs = mobius::iota(mobius::halfplane_apply(m, z), o.grid).fn();
    const double err = sup_diff(lhs, rhs);
    rep.records.push_back(record("iota-equivariance", {m.matrix().a, m.matrix().b, m.matrix().c, m.matrix().d, z.x, z.y},
                                 {{"sup_error", err}}, err, 1e-10));
  }
  for (int i = 0; i < 100; ++i) {
    const auto m1 = rnd::random_mobius(rng);
    const auto m2 = rnd::random_mobius(rng);
    const int d = 2 * deg(rng);
    const EvenFn h = rnd::random_band_limited(rng, o.grid, d, false);
    const double err = sup_diff(mobius::rho_act(m1 * m2, h), mobius::rho_act(m1, mobius::rho_act(m2, h)));
    auto in = tag_inputs({&h});
    in.insert(in.end(), {m1.matrix().a, m1.matrix().b, m1.matrix().c, m1.matrix().d, m2.matrix().a, m2.matrix().b,
                         m2.matrix().c, m2.matrix().d});
    rep.records.push_back(record("group-law", std::move(in), {{"sup_error", err}}, err, 1e-9));
  }
  return rep;
}

SuiteReport suite_quasiiso(const SuiteOptions& o) {
  auto rep = quasi_iso_suite(40.0, 400);
  rep.seed = o.seed;
  rep.grid = o.grid;
  return rep;
}

using SuiteFn = SuiteReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"minkowski", suite_minkowski},     {"extended", suite_extended},     {"wirtinger", suite_wirtinger},
      {"encadrement", suite_encadrement}, {"curvature", suite_curvature},   {"quasiiso", suite_quasiiso},
      {"kernels", suite_kernels_full},    {"dimension", suite_dimension},   {"ellipse-sum", suite_ellipse_sum},
      {"gram-rank", suite_gram_rank},     {"equivariance", suite_equivariance},
  };
  return r;
}

}  // namespace

void finalize(SuiteReport& r) {
  r.cases = r.records.size();
  bool uniform_tol = true;
  for (const auto& c : r.records) uniform_tol = uniform_tol && c.tolerance == r.records.front().tolerance;
  r.normalized = !uniform_tol;
  double worst = -INFINITY;
  for (const auto& c : r.records) {
    worst = std::max(worst, r.normalized ? c.violation / c.tolerance : c.violation);
  }
  r.max_violation = r.records.empty() ? 0.0 : worst + 0.0;  // + 0.0 turns -0 into 0
  r.tolerance = r.normalized ? 1.0 : (r.records.empty() ? 0.0 : r.records.front().tolerance);
  r.pass = std::isfinite(r.max_violation) ? r.max_violation <= r.tolerance : false;
}

std::string to_json(const SuiteReport& r, int indent) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["seed"] = r.seed;
  j["grid"] = r.grid;
  j["cases"] = r.cases;
  j["max_violation"] = r.max_violation;
  j["tolerance"] = r.tolerance;
  j["pass"] = r.pass;
  j["normalized"] = r.normalized;
  auto& recs = j["records"] = nlohmann::ordered_json::array();
  for (const auto& c : r.records) {
    nlohmann::ordered_json rec;
    rec["label"] = c.label;
    rec["digest"] = c.digest;
    auto& vals = rec["values"] = nlohmann::ordered_json::object();
    for (const auto& [k, v] : c.values) vals[k] = v;
    rec["violation"] = c.violation;
    rec["tolerance"] = c.tolerance;
    recs.push_back(std::move(rec));
  }
  return j.dump(indent);
}

std::string digest(std::span<const double> inputs) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (double x : inputs) {
    unsigned char bytes[sizeof(double)];
    std::memcpy(bytes, &x, sizeof(double));
    for (unsigned char b : bytes) {
      h ^= b;
      h *= 0x100000001b3ULL;
    }
  }
  static const char* hex = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, h >>= 4) s[static_cast<std::size_t>(i)] = hex[h & 0xF];
  return s;
}

double jacobian_circle(double t, double theta) {
  const double c = std::cosh(t), s = std::sinh(t);
  return 1.0 / (c * c - 2.0 * s * c * std::cos(theta) + s * s);
}

Kernels kernels_compare(double t) {
  if (!(t > 0.0)) throw DomainError("kernels_compare needs t > 0");
  const double em = std::exp(-2.0 * t), ep = std::exp(2.0 * t);
  // cosh 2t - sinh 2t cos(theta) = e^{-2t} cos^2(theta/2) + e^{2t} sin^2(theta/2), free of cancellation.
  auto base = [&](double th) {
    const double c = std::cos(0.5 * th), s = std::sin(0.5 * th);
    return em * c * c + ep * s * s;
  };
  // Both integrands are even about 0; the kernel peaks at theta = 0.
  const auto i1 = quad::gauss_kronrod([&](double th) { return std::pow(base(th), -1.5); }, 0.0, kPi, 1e-14);
  const double et = std::exp(t), emt = std::exp(-t);
  const auto i2 = quad::gauss_kronrod([&](double th) { return std::hypot(et * std::cos(th), emt * std::sin(th)); }, 0.0,
                                      0.5 * kPi, 1e-14);
  Kernels k;
  k.I1 = i1.value / kPi;
  k.I2 = i2.value * 2.0 / kPi;
  k.closed = mobius::iota_cosh_closed(2.0 * t);
  const auto image = mobius::halfplane_apply(mobius::Mobius(et, 0.0, 0.0, emt, 1e-9), mobius::HalfPlanePoint{0.0, 1.0});
  k.kern2 = std::exp(0.5 * mobius::dist_h2(mobius::HalfPlanePoint{0.0, 1.0}, image));
  k.gap = k.kern2 - k.closed;
  return k;
}

ExtendedResidual minkowski_extended_test(std::span<const EvenFn> bodies, std::span<const double> coeffs) {
  if (bodies.size() != coeffs.size() + 1 || coeffs.empty()) {
    throw DomainError("extended Minkowski test needs n + 1 bodies and n coefficients");
  }
  const std::size_t n = bodies.size();
  std::vector<double> g(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) g[i * n + j] = g[j * n + i] = form_A(bodies[i], bodies[j]);
    if (!timelike(g[i * n + i], bodies[i])) throw DomainError("extended Minkowski test needs bodies of positive area");
  }
  double lin = 0.0, lin_abs = 0.0, quad = 0.0, quad_abs = 0.0;
  for (std::size_t k = 1; k < n; ++k) {
    lin += coeffs[k - 1] * g[k * n];
    lin_abs += std::abs(coeffs[k - 1] * g[k * n]);
    for (std::size_t l = 1; l < n; ++l) {
      quad += coeffs[k - 1] * coeffs[l - 1] * g[k * n + l];
      quad_abs += std::abs(coeffs[k - 1] * coeffs[l - 1] * g[k * n + l]);
    }
  }
  return {lin * lin - g[0] * quad, std::max(lin_abs * lin_abs, g[0] * quad_abs)};
}

double ellipse_sum_test(const EvenFn& h1, const EvenFn& h2) {
  if (h1.grid() != h2.grid()) throw GridMismatch(h1.grid(), h2.grid());
  std::vector<double> sq(h1.grid());
  for (std::size_t j = 0; j < sq.size(); ++j) {
    const double v = h1[j] + h2[j];
    sq[j] = v * v;
  }
  const EvenFn g(std::move(sq));
  const auto& f = g.fourier();
  double e = 0.0;
  for (std::size_t n = 4; n <= f.nyquist(); ++n) e += 0.5 * (f.a[n] * f.a[n] + f.b[n] * f.b[n]);
  return e;
}

double ellipse_sum_test(const EllipseShape& e1, const EllipseShape& e2, std::size_t M) {
  return ellipse_sum_test(supportfn::from_ellipse_shape(e1, M), supportfn::from_ellipse_shape(e2, M));
}

CurvatureEstimate curvature_scale_estimate(std::span<const double> s_values) {
  CurvatureEstimate est;
  for (double s : s_values) {
    if (!(s > 0.0)) throw DomainError("curvature estimate needs positive s");
    est.s.push_back(s);
    est.ratios.push_back(mobius::iota_dist_closed(s) / s);
  }
  std::vector<std::size_t> order(est.s.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return est.s[a] < est.s[b]; });
  if (order.size() < 2 || est.s[order[0]] == est.s[order[1]]) {
    throw DomainError("curvature estimate needs two distinct s values");
  }
  const double small = est.s[order[0]], large = est.s[order[1]];
  const double q2 = (large / small) * (large / small);
  est.extrapolated = (q2 * est.ratios[order[0]] - est.ratios[order[1]]) / (q2 - 1.0);
  return est;
}

SuiteReport quasi_iso_suite(double s_max, std::size_t points) {
  if (!(s_max > 0.0 && s_max <= 40.0)) throw DomainError("quasi-isometry suite needs 0 < s_max <= 40");
  if (points < 2) throw DomainError("quasi-isometry suite needs at least two grid points");
  SuiteReport rep;
  rep.suite = "quasiiso";
  double prev = -1.0;
  for (std::size_t i = 0; i < points; ++i) {
    const double s = s_max * static_cast<double>(i) / static_cast<double>(points - 1);
    const double d = mobius::iota_dist_closed(s);
    const double upper = std::acosh(std::exp(0.5 * s));
    const std::vector<std::pair<std::string, double>> vals{{"s", s}, {"d", d}, {"upper", upper}};
    rep.records.push_back(record("upper", {s}, vals, d - upper, 1e-12));
    const double arg = 2.0 * std::exp(0.5 * s) / kPi;
    if (arg >= 1.0) {
      const double lower = std::acosh(arg);
      rep.records.push_back(record("lower", {s}, {{"s", s}, {"d", d}, {"lower", lower}}, lower - d, 1e-12));
    }
    rep.records.push_back(record("deviation", {s}, {{"s", s}, {"d", d}}, std::abs(d - 0.5 * s), 0.5));
    if (i > 0) rep.records.push_back(record("monotone", {s}, {{"s", s}, {"d", d}, {"previous", prev}}, prev - d, 1e-15));
    prev = d;
  }
  finalize(rep);
  return rep;
}

RhombusSearch rhombus_search(BoundaryDir nu, BoundaryDir omega, std::size_t M) {
  auto f = [&](double lambda) { return lorentz::pi0(lorentz::segment_geodesic_point(nu, omega, lambda, M).fn()); };
  const double g = 0.5 * (std::sqrt(5.0) - 1.0);
  double a = -8.0, b = 8.0;
  double x1 = b - g * (b - a), x2 = a + g * (b - a);
  double f1 = f(x1), f2 = f(x2);
  while (b - a > 1e-9) {
    if (f1 < f2) {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - g * (b - a);
      f1 = f(x1);
    } else if (f2 < f1) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + g * (b - a);
      f2 = f(x2);
    } else {
      // Flat to rounding: the minimiser lies between the probes.
      a = x1;
      b = x2;
      x1 = b - g * (b - a);
      x2 = a + g * (b - a);
      f1 = f(x1);
      f2 = f(x2);
    }
  }
  RhombusSearch out;
  out.lambda = 0.5 * (a + b);
  out.pi0_min = f(out.lambda);
  const double sin_phi = std::sin(angle_between(nu, omega));
  const double c = std::sqrt(kPi / (4.0 * sin_phi));
  const Vec2 v = nu.direction() * c, w = omega.direction() * c;
  const std::vector<Vec2> pts{v + w, v - w};
  const EvenFn explicit_rhombus = supportfn::from_polygon(Polygon::symmetric_hull(pts), M);
  out.sup_error = sup_diff(lorentz::project_disc_to_segment_geodesic(nu, omega, M).fn(), explicit_rhombus);
  return out;
}

double gram_normalized_det(std::span<const EvenFn> fns) {
  const std::size_t n = fns.size();
  std::vector<double> g(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) g[i * n + j] = g[j * n + i] = form_A(fns[i], fns[j]);
  }
  // Row normalisation: each row scaled to unit Euclidean norm.
  for (std::size_t i = 0; i < n; ++i) {
    if (!timelike(g[i * n + i], fns[i])) throw DomainError("Gram determinant needs timelike vectors");
    double r = 0.0;
    for (std::size_t j = 0; j < n; ++j) r += g[i * n + j] * g[i * n + j];
    r = std::sqrt(r);
    for (std::size_t j = 0; j < n; ++j) g[i * n + j] /= r;
  }
  // LU with partial pivoting.
  double det = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(g[i * n + k]) > std::abs(g[p * n + k])) p = i;
    }
    if (g[p * n + k] == 0.0) return 0.0;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(g[k * n + j], g[p * n + j]);
      det = -det;
    }
    det *= g[k * n + k];
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = g[i * n + k] / g[k * n + k];
      for (std::size_t j = k; j < n; ++j) g[i * n + j] -= f * g[k * n + j];
    }
  }
  return std::abs(det);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<SuiteReport> run_suite(std::string_view name, const SuiteOptions& options) {
  std::vector<SuiteReport> out;
  for (const auto& [n, fn] : registry()) {
    if (name == "all" || name == n) {
      out.push_back(fn(options));
      finalize(out.back());
    }
  }
  if (out.empty()) throw DomainError("unknown suite: " + std::string(name));
  return out;
}

}  // namespace hypkonvex::verify
