#pragma once

#include "hypkonvex/even_fn.hpp"
#include "hypkonvex/lorentz.hpp"
#include "hypkonvex/plane.hpp"

namespace hypkonvex::mobius {

/// Element of PSL2(R): a unit-determinant matrix up to sign. The stored
/// representative has its first nonzero entry of (a, b, c, d) positive.
class Mobius {
 public:
  /// Throws InvalidShape when |ad - bc - 1| > tol.
  Mobius(double a, double b, double c, double d, double tol = 1e-12);
  explicit Mobius(const Mat2& m, double tol = 1e-12) : Mobius(m.a, m.b, m.c, m.d, tol) {}

  static Mobius identity() { return Mobius(1.0, 0.0, 0.0, 1.0); }
  static Mobius rotation(double phi) { return Mobius(Mat2::rotation(phi)); }
  /// T_s = diag(e^{s/2}, e^{-s/2}), translation by s along the imaginary axis.
  static Mobius hyperbolic(double s);

  const Mat2& matrix() const { return m_; }
  Mobius operator*(const Mobius& o) const;
  Mobius inverse() const;
  bool operator==(const Mobius& o) const { return m_ == o.m_; }

 private:
  Mat2 m_;
};

struct HalfPlanePoint {
  double x = 0.0;
  double y = 1.0;
};

/// Checked constructor; throws DomainError for y <= 0.
HalfPlanePoint half_plane_point(double x, double y);

/// Angle of M u(theta) / |M u(theta)|, in (-pi, pi].
double act_circle(const Mobius& m, double theta);

/// rho(m)(h)(x) = |m^T x| h(m^T x / |m^T x|). Shape tags are transported exactly
/// (ellipse A -> m A, segment v -> m v, polygon vertices -> m vertices);
/// untagged functions go through trigonometric interpolation.
EvenFn rho_act(const Mobius& m, const EvenFn& h);

/// (a z + b) / (c z + d).
HalfPlanePoint halfplane_apply(const Mobius& m, HalfPlanePoint z);

/// Upper-triangular section [[sqrt y, x / sqrt y], [0, 1 / sqrt y]] sending i to z.
Mobius mobius_from_halfplane(HalfPlanePoint z);

/// Hyperbolic distance acosh(|B^{-1} A|_F^2 / 2) via the sections of z1, z2.
double dist_h2(HalfPlanePoint z1, HalfPlanePoint z2);

/// Translation length s = 2 ln sigma_max(m) = d(i, m(i)).
double translation_length(const Mobius& m);

/// The exotic embedding: the normalised support function of the ellipse S_z(D).
lorentz::HPoint iota(HalfPlanePoint z, std::size_t M);

/// (1/2pi) int |m^T u(theta)| dtheta by the periodic trapezoid rule, with the
/// node count doubled until converged (geometric for nondegenerate m).
double iota_cosh_quadrature(const Mobius& m);

/// acosh of iota_cosh_quadrature.
double iota_dist_quadrature(const Mobius& m);

/// Cosh of the distance between iota(z1), iota(z2) with d_H2(z1, z2) = s:
///   (2/pi) e^{s/2} E(sqrt(1 - e^{-2s})).
double iota_cosh_closed(double s);

/// acosh of iota_cosh_closed, cancellation-safe near s = 0. Throws DomainError for s < 0.
double iota_dist_closed(double s);

/// d(iota(z1), iota(z2)) through the closed form and equivariance.
double iota_dist(HalfPlanePoint z1, HalfPlanePoint z2);

}  // namespace hypkonvex::mobius
