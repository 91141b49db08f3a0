#pragma once

namespace hypkonvex::specfun {

/// Complete elliptic integrals of the first and second kind for modulus k:
///   K(k) = int_0^{pi/2} (1 - k^2 sin^2 u)^{-1/2} du
///   E(k) = int_0^{pi/2} (1 - k^2 sin^2 u)^{+1/2} du
struct EllipticPair {
  double K;
  double E;
};

/// K, E and the weighted integral I(k) = int_0^{pi/2} (1 - k^2 sin^2 u)^{-3/2} du.
struct EllipticTriple {
  double k;
  double K;
  double E;
  double I;
};

/// Largest modulus accepted by the k-parametrised entry points; past this K
/// is dominated by the rounding of 1 - k^2.
inline constexpr double kMaxModulus = 1.0 - 1e-12;

/// K(k) and E(k) by the arithmetic-geometric mean. Throws DomainError unless
/// 0 <= k <= kMaxModulus, ConvergenceError if the AGM fails to close within 64 steps.
EllipticPair agm_KE(double k);

/// Same integrals parametrised by the complementary modulus k' = sqrt(1 - k^2),
/// which keeps full precision when k is within rounding of 1. Requires 0 < k' <= 1.
EllipticPair agm_KE_complementary(double kprime);

/// I(k) = E(k) / (1 - k^2).
double ellip_I(double k);

EllipticTriple elliptic_triple(double k);

}  // namespace hypkonvex::specfun
