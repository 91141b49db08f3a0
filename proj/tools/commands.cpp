#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <json.hpp>

#include "hypkonvex/errors.hpp"
#include "hypkonvex/limits.hpp"
#include "hypkonvex/lorentz.hpp"
#include "hypkonvex/supportfn.hpp"
#include "hypkonvex/verify.hpp"

namespace hypkonvex::cli {
namespace {

constexpr double kSpectralTailLimit = 0.01;
constexpr double kViewport = 4.0;

std::string num(double x) { return fmt::format("{:.17g}", x); }

// Usage-level failure (bad flag values); maps to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

EvenFn body(const shapedoc::ShapeDoc& doc, const RunConfig& cfg, const char* which) {
  EvenFn h = shapedoc::to_even_fn(doc, cfg.grid);
  if (!h.tagged()) {
    if (!supportfn::is_support_function(h).is_support) {
      throw InvalidShape(std::string(which) + ": samples are not a support function");
    }
    if (supportfn::spectral_tail_fraction(h) > kSpectralTailLimit) {
      if (cfg.strict) throw InvalidShape(std::string(which) + ": spectrum not resolved on this grid");
    }
  }
  return h;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw Error("cannot write " + p.string());
  f << text;
}

std::filesystem::path out_dir(const RunConfig& cfg) {
  std::filesystem::path p = cfg.out.empty() ? std::filesystem::path(".") : std::filesystem::path(cfg.out);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.grid < 64 || cfg.grid % 4 != 0) {
    throw DomainError("grid size must be >= 64 and divisible by 4, got " + std::to_string(cfg.grid));
  }
}

DistResult dist(const shapedoc::ShapeDoc& a, const shapedoc::ShapeDoc& b, const RunConfig& cfg) {
  const EvenFn ha = body(a, cfg, "first shape");
  const EvenFn hb = body(b, cfg, "second shape");
  DistResult r;
  r.area_a = kPi * lorentz::form_A(ha);
  r.area_b = kPi * lorentz::form_A(hb);
  r.perimeter_a = kTwoPi * lorentz::pi0(ha);
  r.perimeter_b = kTwoPi * lorentz::pi0(hb);
  const auto pa = lorentz::normalize(ha);
  const auto pb = lorentz::normalize(hb);
  r.form = lorentz::form_A(pa.fn(), pb.fn());
  r.distance = lorentz::distance_from_cosh(r.form);
  return r;
}

std::string dist_json(const DistResult& r) {
  nlohmann::ordered_json j;
  j["distance"] = r.distance;
  j["A"] = r.form;
  j["perimeter_a"] = r.perimeter_a;
  j["perimeter_b"] = r.perimeter_b;
  j["area_a"] = r.area_a;
  j["area_b"] = r.area_b;
  return j.dump();
}

std::vector<GeodesicFrame> geodesic(const shapedoc::ShapeDoc& a, const shapedoc::ShapeDoc& b, std::size_t steps,
                                    const RunConfig& cfg) {
  if (steps == 0) throw UsageError("geodesic needs at least one step");
  const auto pa = lorentz::normalize(body(a, cfg, "first shape"));
  const auto pb = lorentz::normalize(body(b, cfg, "second shape"));
  const double total = lorentz::hyper_dist(pa, pb);
  if (!(total > 1e-12)) throw DomainError("geodesic endpoints coincide");
  std::vector<GeodesicFrame> frames;
  for (std::size_t i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps);
    const auto p = lorentz::geodesic_point(pa, pb, t);
    GeodesicFrame f;
    f.t = t;
    // acosh amplifies rounding near cosh = 1, so the endpoints take their exact values.
    f.d_from_a = i == 0 ? 0.0 : (i == steps ? total : lorentz::hyper_dist(pa, p));
    f.d_from_b = i == 0 ? total : (i == steps ? 0.0 : lorentz::hyper_dist(p, pb));
    if (std::abs(f.d_from_a + f.d_from_b - total) > 1e-9 * (1.0 + total)) {
      throw InvariantViolation("geodesic additivity failed at t = " + num(t));
    }
    f.perimeter = kTwoPi * lorentz::pi0(p.fn());
    f.boundary = supportfn::boundary_curve(p.fn(), 720);
    frames.push_back(std::move(f));
  }
  return frames;
}

std::string geodesic_csv(const std::vector<GeodesicFrame>& frames) {
  std::string s = "t,d_from_a,d_from_b,perimeter\n";
  for (const auto& f : frames) {
    s += fmt::format("{},{},{},{}\n", num(f.t), num(f.d_from_a), num(f.d_from_b), num(f.perimeter));
  }
  return s;
}

std::string render_svg(const std::vector<Vec2>& boundary, std::string_view caption) {
  double extent = 0.0;
  for (const auto& p : boundary) extent = std::max({extent, std::abs(p.x), std::abs(p.y)});
  const double fit = 0.95 * kViewport;
  const double scale = extent > fit ? fit / extent : 1.0;
  std::string s = fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"{} {} {} {}\">\n",
      -kViewport, -kViewport, 2 * kViewport, 2 * kViewport);
  s += "<rect x=\"-4\" y=\"-4\" width=\"8\" height=\"8\" fill=\"white\" stroke=\"#ccc\" stroke-width=\"0.02\"/>\n";
  s += "<path fill=\"#cfe0f5\" stroke=\"#1f4e8c\" stroke-width=\"0.03\" d=\"";
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    // SVG's y axis points down.
    s += fmt::format("{}{} {} ", i == 0 ? "M" : "L", num(scale * boundary[i].x), num(-scale * boundary[i].y));
  }
  s += "Z\"/>\n";
  s += "<circle cx=\"0\" cy=\"0\" r=\"0.05\" fill=\"black\"/>\n";
  s += fmt::format("<text x=\"-3.9\" y=\"-3.6\" font-size=\"0.3\">{}</text>\n", caption);
  if (scale != 1.0) {
    s += fmt::format("<text x=\"-3.9\" y=\"3.8\" font-size=\"0.3\" fill=\"#b00\">scaled by {}</text>\n", num(scale));
  }
  s += "</svg>\n";
  return s;
}

std::string kernels_csv(double t_min, double t_max, std::size_t steps) {
  if (!(t_min > 0.0) || !(t_max >= t_min)) throw UsageError("kernels needs 0 < t_min <= t_max");
  if (steps == 0) throw UsageError("kernels needs steps >= 1");
  std::string s = "t,I1,I2,closed,kern2,gap\n";
  const std::size_t rows = t_max == t_min ? 1 : steps + 1;
  for (std::size_t i = 0; i < rows; ++i) {
    const double t = rows == 1 ? t_min : t_min + (t_max - t_min) * static_cast<double>(i) / static_cast<double>(steps);
    const auto k = verify::kernels_compare(t);
    s += fmt::format("{},{},{},{},{},{}\n", num(t), num(k.I1), num(k.I2), num(k.closed), num(k.kern2), num(k.gap));
  }
  return s;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (const char* env = std::getenv("HYPKONVEX_GRID")) {
    try {
      cfg.grid = static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      err << "error: HYPKONVEX_GRID must be an integer\n";
      return kUsage;
    }
  }

  CLI::App app{"Hyperbolic geometry of planar symmetric convex bodies", "hypkonvex"};
  app.require_subcommand(1);
  app.add_option("--grid", cfg.grid, "Grid size M (>= 64, divisible by 4); default from HYPKONVEX_GRID or 2048");
  app.add_option("--seed", cfg.seed, "Seed of the randomised suites");
  app.add_option("--out", cfg.out, "Output directory");
  app.add_flag("--strict", cfg.strict, "Treat unresolved spectra as errors");

  std::string shape_a, shape_b;
  auto* dist_cmd = app.add_subcommand("dist", "Distance between two bodies normalised to area pi");
  dist_cmd->add_option("shape_a", shape_a)->required();
  dist_cmd->add_option("shape_b", shape_b)->required();

  std::size_t steps = 8;
  auto* geo_cmd = app.add_subcommand("geodesic", "SVG frames and CSV along the geodesic between two bodies");
  geo_cmd->add_option("shape_a", shape_a)->required();
  geo_cmd->add_option("shape_b", shape_b)->required();
  geo_cmd->add_option("--steps", steps, "Number of intervals");

  std::string suite = "all";
  auto* verify_cmd = app.add_subcommand("verify", "Run verification suites and write JSON reports");
  verify_cmd->add_option("--suite", suite, "Suite name or all");

  double t_min = 0.1, t_max = 5.0;
  std::size_t k_steps = 49;
  auto* kern_cmd = app.add_subcommand("kernels", "Compare the kernel integrals on a grid of t");
  kern_cmd->add_option("--t-min", t_min);
  kern_cmd->add_option("--t-max", t_max);
  kern_cmd->add_option("--steps", k_steps);

  int j_min = 4, j_max = 12;
  bool empirical = false;
  std::size_t samples = 100000;
  std::string metric = "visual";
  auto* hdim_cmd = app.add_subcommand("hdim", "Covering numbers and dimension slope of the limit set");
  hdim_cmd->add_option("--j-min", j_min);
  hdim_cmd->add_option("--j-max", j_max);
  hdim_cmd->add_flag("--empirical", empirical, "Append greedy-cover counts on sampled directions");
  hdim_cmd->add_option("--samples", samples, "Sample count of the empirical mode");
  hdim_cmd->add_option("--metric", metric, "visual or round")->check(CLI::IsMember({"visual", "round"}));

  for (auto* sub : {dist_cmd, geo_cmd, verify_cmd, kern_cmd, hdim_cmd}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    validate(cfg);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  try {
    if (*dist_cmd) {
      const auto r = dist(shapedoc::load(shape_a), shapedoc::load(shape_b), cfg);
      out << num(r.distance) << '\n' << dist_json(r) << '\n';
      return kOk;
    }
    if (*geo_cmd) {
      const auto frames = geodesic(shapedoc::load(shape_a), shapedoc::load(shape_b), steps, cfg);
      const auto dir = out_dir(cfg);
      for (std::size_t i = 0; i < frames.size(); ++i) {
        write_file(dir / fmt::format("frame_{:03d}.svg", i),
                   render_svg(frames[i].boundary, fmt::format("t = {:.4f}", frames[i].t)));
      }
      write_file(dir / "geodesic.csv", geodesic_csv(frames));
      out << "wrote " << frames.size() << " frames and geodesic.csv to " << dir.string() << '\n';
      return kOk;
    }
    if (*verify_cmd) {
      const auto& names = verify::suite_names();
      if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        err << "error: unknown suite \"" << suite << "\"\n";
        return kUsage;
      }
      const auto reports = verify::run_suite(suite, {cfg.seed, cfg.grid});
      const auto dir = out_dir(cfg);
      bool all_pass = true;
      for (const auto& r : reports) {
        write_file(dir / (r.suite + ".json"), verify::to_json(r) + "\n");
        out << fmt::format("{:<13} {} cases={} max_violation={} tolerance={}{}\n", r.suite, r.pass ? "PASS" : "FAIL",
                           r.cases, num(r.max_violation), num(r.tolerance), r.normalized ? " (normalized)" : "");
        all_pass = all_pass && r.pass;
      }
      return all_pass ? kOk : kSuiteFailure;
    }
    if (*kern_cmd) {
      out << kernels_csv(t_min, t_max, k_steps);
      return kOk;
    }
    if (*hdim_cmd) {
      if (!(j_min >= 2 && j_min < j_max && j_max <= 16)) throw UsageError("hdim needs 2 <= j_min < j_max <= 16");
      const auto m = metric == "round" ? limits::DirectionMetric::round() : limits::DirectionMetric::visual();
      const auto fit = limits::hausdorff_dim_estimate(j_min, j_max, m);
      std::vector<double> greedy(fit.eps.size(), NAN);
      std::string emp_summary;
      if (empirical) {
        const auto e = limits::empirical_dimension(j_min, j_max, samples, cfg.seed, m);
        for (std::size_t i = 0; i < e.fit.eps.size(); ++i) {
          greedy[static_cast<std::size_t>(e.j_min - j_min) + i] = e.fit.counts[i];
        }
        emp_summary = fmt::format(" empirical_slope={} empirical_residual={} empirical_j=[{},{}]", num(e.fit.slope),
                                  num(e.fit.residual), e.j_min, e.j_max);
      }
      std::string csv = empirical ? "eps,N,greedy\n" : "eps,N\n";
      for (std::size_t i = 0; i < fit.eps.size(); ++i) {
        csv += fmt::format("{},{}", num(fit.eps[i]), num(fit.counts[i]));
        if (empirical) csv += "," + (std::isnan(greedy[i]) ? std::string() : num(greedy[i]));
        csv += "\n";
      }
      const std::string summary =
          fmt::format("slope={} residual={}{}", num(fit.slope), num(fit.residual), emp_summary);
      if (cfg.out.empty()) {
        out << csv << "# " << summary << '\n';
      } else {
        write_file(out_dir(cfg) / "hdim.csv", csv);
        out << summary << '\n';
      }
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const NotTimelike& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const Error& e) {
    err << "domain error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}

}  // namespace hypkonvex::cli
