#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hypkonvex/boundary.hpp"
#include "hypkonvex/even_fn.hpp"
#include "hypkonvex/lorentz.hpp"

namespace hypkonvex::limits {

/// Isotropic representative with pi0 = 1: the support function of the
/// segment of length pi parallel to the direction class, (pi/2)|<u, v>|.
EvenFn boundary_rep(BoundaryDir d, std::size_t M);

/// Visual distance from the disc on the limit set: (sqrt(pi)/2) sqrt(sin angle).
double visual_dist(BoundaryDir d1, BoundaryDir d2);

/// The same distance from the Lorentzian form, 1/2 sqrt(A(v1 + v2)) on the
/// normalised representatives (exact quadrature of the parallelogram).
double visual_dist_via_form(BoundaryDir d1, BoundaryDir d2, std::size_t M);

/// Orbit points iota(R_theta T_r (i)) at the given radii r = d_H2(i, .):
/// ellipses of aspect e^r whose long axis is the direction class.
std::vector<lorentz::HPoint> escaping_sequence(BoundaryDir d, std::span<const double> radii, std::size_t M);

struct GromovEstimate {
  double value = 0.0;              ///< estimate at the last index
  std::vector<double> estimates;   ///< exp(-(p_n | q_n)_1) for every n
};

/// Gromov-product estimator exp(-(d(p,1) + d(q,1) - d(p,q)) / 2) along two
/// sequences escaping to the boundary. Throws DomainError if the sequences
/// have different lengths or distances from the disc do not increase.
GromovEstimate visual_dist_generic(std::span<const lorentz::HPoint> p, std::span<const lorentz::HPoint> q);

/// A metric on direction classes written as a function of the angle in [0, pi/2].
class DirectionMetric {
 public:
  /// (sqrt(pi)/2) sqrt(sin angle).
  static DirectionMetric visual();
  /// The angle itself: the round metric of the projective line.
  static DirectionMetric round();
  /// lambda * base^t for a base metric.
  static DirectionMetric power(const DirectionMetric& base, double lambda, double t);

  double of_angle(double angle) const;
  /// Largest angle in [0, pi/2] whose distance is <= eps.
  double ball_half_width(double eps) const;

 private:
  enum class Kind { Visual, Round };
  Kind kind_ = Kind::Visual;
  double lambda_ = 1.0;
  double t_ = 1.0;
};

/// Minimal number of eps-balls covering the projective line:
/// ceil(pi / (2 * ball_half_width(eps))).
std::int64_t covering_number(double eps, const DirectionMetric& metric = DirectionMetric::visual());

struct DimensionFit {
  double slope = 0.0;
  double residual = 0.0;  ///< root-mean-square deviation from the fitted line (natural log units)
  std::vector<double> eps;
  std::vector<double> counts;
};

/// Least-squares slope of log N(eps_j) against log(1/eps_j), eps_j = 2^-j, j in [j_min, j_max].
/// Throws DomainError unless j_max > j_min >= 2.
DimensionFit hausdorff_dim_estimate(int j_min, int j_max, const DirectionMetric& metric = DirectionMetric::visual());

/// Greedy cover of a finite sorted set of angles in [0, pi): each ball starts
/// at the first uncovered sample and is centred at the farthest sample still
/// within eps of it. Optimal for interval covers of a line.
std::int64_t greedy_cover_count(std::span<const double> sorted_angles, double eps, const DirectionMetric& metric);

struct EmpiricalFit {
  DimensionFit fit;
  int j_min = 0;  ///< scales actually used
  int j_max = 0;
};

/// Greedy-cover counts on `samples` seeded uniform directions. Only scales whose
/// balls span at least 16 mean sample spacings are used; throws DomainError if
/// fewer than two such scales fall in [j_min, j_max].
EmpiricalFit empirical_dimension(int j_min, int j_max, std::size_t samples, std::uint64_t seed,
                                 const DirectionMetric& metric = DirectionMetric::visual());

}  // namespace hypkonvex::limits
