#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "hypkonvex/plane.hpp"
#include "hypkonvex/shapedoc.hpp"

namespace hypkonvex::cli {

enum ExitCode : int { kOk = 0, kUsage = 2, kDomain = 3, kSuiteFailure = 4 };

struct RunConfig {
  std::size_t grid = 2048;
  std::uint64_t seed = 0;
  std::string out;
  bool strict = false;
};

/// Throws DomainError unless grid >= 64 and grid % 4 == 0.
void validate(const RunConfig& cfg);

struct DistResult {
  double distance = 0.0;
  double form = 0.0;  ///< A(h_a, h_b) of the normalised bodies (cosh of the distance)
  double perimeter_a = 0.0, perimeter_b = 0.0;
  double area_a = 0.0, area_b = 0.0;
};

/// Throws NotTimelike for a zero-area body, InvalidShape for samples that are
/// not a support function or (strict mode) have an unresolved spectrum.
DistResult dist(const shapedoc::ShapeDoc& a, const shapedoc::ShapeDoc& b, const RunConfig& cfg);
std::string dist_json(const DistResult& r);

struct GeodesicFrame {
  double t = 0.0;
  double d_from_a = 0.0;
  double d_from_b = 0.0;
  double perimeter = 0.0;
  std::vector<Vec2> boundary;
};

/// steps + 1 equispaced affine parameters in [0, 1]. Throws DomainError for
/// identical endpoints, InvariantViolation when additivity fails.
std::vector<GeodesicFrame> geodesic(const shapedoc::ShapeDoc& a, const shapedoc::ShapeDoc& b, std::size_t steps,
                                    const RunConfig& cfg);
std::string geodesic_csv(const std::vector<GeodesicFrame>& frames);
/// Closed path in the fixed viewport [-4, 4]^2 with the origin marked; bodies
/// that leave the viewport are scaled down and annotated.
std::string render_svg(const std::vector<Vec2>& boundary, std::string_view caption);

/// Rows t, I1, I2, closed, kern2, gap. Throws a usage Error for a bad range or steps = 0.
std::string kernels_csv(double t_min, double t_max, std::size_t steps);

/// Full command line; returns the exit code. Output goes to out, diagnostics to err.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hypkonvex::cli
