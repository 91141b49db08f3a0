#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hypkonvex/boundary.hpp"
#include "hypkonvex/even_fn.hpp"
#include "hypkonvex/shapes.hpp"

namespace hypkonvex::verify {

/// One checked case. It passes when violation <= tolerance.
struct CaseRecord {
  std::string label;
  std::string digest;  ///< FNV-1a digest of the case inputs
  std::vector<std::pair<std::string, double>> values;
  double violation = 0.0;
  double tolerance = 0.0;
};

/// Outcome of a suite. When every record shares one tolerance, max_violation and
/// tolerance are in the units of that check. Otherwise (normalized = true) both are
/// ratios violation / tolerance and the suite tolerance is 1. pass <=> max_violation <= tolerance.
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t grid = 0;
  std::size_t cases = 0;
  double max_violation = 0.0;
  double tolerance = 0.0;
  bool normalized = false;
  bool pass = false;
  std::vector<CaseRecord> records;
};

/// Fills cases, max_violation, tolerance, normalized and pass from the records.
void finalize(SuiteReport& report);

/// JSON document {suite, seed, grid, cases, max_violation, tolerance, pass, normalized, records}.
std::string to_json(const SuiteReport& report, int indent = 2);

/// 64-bit FNV-1a of the bytes of the given doubles, as 16 hex digits.
std::string digest(std::span<const double> inputs);

/// 1 / |cosh t - sinh t e^{i theta}|^2, the Jacobian of the circle action of diag(e^t, e^-t).
double jacobian_circle(double t, double theta);

struct Kernels {
  double I1 = 0.0;      ///< (1/2pi) int |cosh t - sinh t e^{i theta}|^-3, adaptive quadrature
  double I2 = 0.0;      ///< (1/2pi) int |diag(e^t, e^-t) u|, adaptive quadrature
  double closed = 0.0;  ///< (2/pi) e^t E(sqrt(1 - e^{-4t}))
  double kern2 = 0.0;   ///< exp(d_H2(i, A_t(i)) / 2) = e^t
  double gap = 0.0;     ///< kern2 - closed, in the cosh domain
};

/// Throws DomainError for t <= 0.
Kernels kernels_compare(double t);

struct ExtendedResidual {
  double residual = 0.0;  ///< (sum c_k A(h_k, h_0))^2 - A(h_0) sum c_i c_j A(h_i, h_j)
  double scale = 0.0;     ///< bound on the magnitude of both terms
};

/// bodies = {h_0, ..., h_n}, coeffs = {c_1, ..., c_n}. Throws DomainError on a
/// body with A <= 0 or mismatched sizes.
ExtendedResidual minkowski_extended_test(std::span<const EvenFn> bodies, std::span<const double> coeffs);

/// Mean-square energy of the harmonics n >= 4 of (h_1 + h_2)^2.
double ellipse_sum_test(const EllipseShape& e1, const EllipseShape& e2, std::size_t M);
double ellipse_sum_test(const EvenFn& h1, const EvenFn& h2);

struct CurvatureEstimate {
  std::vector<double> s;
  std::vector<double> ratios;  ///< iota_dist_closed(s) / s
  double extrapolated = 0.0;   ///< Richardson on the two smallest s, O(s^2) error model
};

/// Throws DomainError unless there are at least two distinct positive values.
CurvatureEstimate curvature_scale_estimate(std::span<const double> s_values);

/// Sandwich, deviation and monotonicity checks of iota_dist_closed on
/// `points` equispaced values in [0, s_max]. Throws DomainError for s_max > 40.
SuiteReport quasi_iso_suite(double s_max = 40.0, std::size_t points = 400);

struct RhombusSearch {
  double lambda = 0.0;     ///< golden-section minimiser of pi0 along the geodesic
  double pi0_min = 0.0;
  double sup_error = 0.0;  ///< sup |projected point - explicit rhombus| on the grid
};

/// Minimises pi0 over the parallelogram geodesic between nu and omega and
/// compares the nearest point with the rhombus built from its vertices.
RhombusSearch rhombus_search(BoundaryDir nu, BoundaryDir omega, std::size_t M);

/// |det G| after scaling every row of the Gram matrix G_ij = A(h_i, h_j) to unit
/// Euclidean norm. Throws DomainError when some A(h_i) <= 0.
double gram_normalized_det(std::span<const EvenFn> fns);

struct SuiteOptions {
  std::uint64_t seed = 0;
  std::size_t grid = 2048;
};

/// Suite names accepted by run_suite, without "all".
const std::vector<std::string>& suite_names();

/// Runs one named suite, or every suite for "all". Throws DomainError for unknown names.
std::vector<SuiteReport> run_suite(std::string_view name, const SuiteOptions& options);

}  // namespace hypkonvex::verify
