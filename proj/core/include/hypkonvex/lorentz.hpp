#pragma once

#include <cstddef>

#include "hypkonvex/boundary.hpp"
#include "hypkonvex/even_fn.hpp"

namespace hypkonvex::lorentz {

/// A point of the hyperboloid {A(h) = 1, pi0(h) > 0}. For a support function
/// this is a symmetric convex body of area pi.
class HPoint {
 public:
  /// Throws InvariantViolation unless |A(fn) - 1| <= 1e-10 and pi0(fn) >= 1 - 1e-10.
  explicit HPoint(EvenFn fn);
  const EvenFn& fn() const { return fn_; }

 private:
  EvenFn fn_;
};

/// The Lorentzian form A(h1, h2) = (1/2pi) int (h1 h2 - h1' h2').
/// Uses the exact route when both arguments carry shape tags, the spectral
/// route otherwise. Throws GridMismatch.
double form_A(const EvenFn& h1, const EvenFn& h2);
inline double form_A(const EvenFn& h) { return form_A(h, h); }

/// Spectral route: a0 a0' + 1/2 sum_{n>=1} (1 - n^2)(a_n a_n' + b_n b_n') over
/// the DFT coefficients of the samples. Ignores tags.
double form_A_spectral(const EvenFn& h1, const EvenFn& h2);

/// Exact route on shape tags: closed form (complete elliptic integral) for two
/// ellipses, Gauss-Legendre quadrature between the kinks otherwise.
/// Throws Error when a tag is empty.
double form_A_exact(const ShapeTag& t1, const ShapeTag& t2);

/// pi0(h) = (1/2pi) int h = A(h, 1): perimeter / 2pi for a support function.
/// Closed form when tagged, sample mean otherwise.
double pi0(const EvenFn& h);

struct H1Seminorms {
  double l2sq;   ///< int_0^{2pi} h^2
  double dl2sq;  ///< int_0^{2pi} h'^2
};

/// Unnormalised full-period integrals by Parseval.
H1Seminorms h1_seminorms(const EvenFn& h);

/// h / sqrt(A(h)). Throws NotTimelike when pi0(h) <= 0 or A(h) <= 1e-12 pi0(h)^2.
HPoint normalize(const EvenFn& h);

/// acosh(1 + x) for x >= 0 without cancellation near 0.
double acosh1p(double x);

/// acosh(c) with the clamping policy of the hyperboloid: values in
/// [1 - 1e-12, 1) clamp to 1; below 1 - 1e-9 throws InvariantViolation.
/// Values in between are rounding noise of an inexact route and also clamp.
double distance_from_cosh(double c);

/// acosh(A(p, q)).
double hyper_dist(const HPoint& p, const HPoint& q);

/// normalize((1 - t) p + t q). The affine parameter is not arclength.
HPoint geodesic_point(const HPoint& p, const HPoint& q, double t);

/// Point with coefficient ratio exp(lambda) on the geodesic between the
/// boundary classes nu and omega: the area-pi parallelogram
///   a (e^{lambda/2} [-v, v] + e^{-lambda/2} [-w, w]),  4 a^2 sin(angle) = pi.
HPoint segment_geodesic_point(BoundaryDir nu, BoundaryDir omega, double lambda, std::size_t M);

/// Nearest point to the disc on the geodesic joining nu and omega: the rhombus
/// of equal coefficients (lambda = 0). Throws DomainError when nu == omega.
HPoint project_disc_to_segment_geodesic(BoundaryDir nu, BoundaryDir omega, std::size_t M);

}  // namespace hypkonvex::lorentz
