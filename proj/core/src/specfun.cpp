#include "hypkonvex/specfun.hpp"

#include <cmath>
#include <string>

#include "hypkonvex/errors.hpp"
#include "hypkonvex/plane.hpp"

namespace hypkonvex::specfun {
namespace {

constexpr int kMaxIterations = 64;
constexpr double kGapTolerance = 1e-16;

// AGM(1, k') with the companion sum for E:
//   K = pi / (2 AGM),  E = K (1 - sum_n 2^{n-1} c_n^2),  c_0 = k.
// The gap c_{n+1} = c_n^2 / (4 a_{n+1}) is propagated directly so it never
// suffers the cancellation of a_n - b_n.
EllipticPair agm_core(double k, double kprime) {
  if (k == 0.0) return {kPi / 2.0, kPi / 2.0};
  double a = 1.0;
  double b = kprime;
  double c = k;
  double weight = 0.5;
  double sum = weight * c * c;
  for (int n = 0; n < kMaxIterations; ++n) {
    const double a_next = 0.5 * (a + b);
    const double b_next = std::sqrt(a * b);
    c = c * c / (4.0 * a_next);
    weight *= 2.0;
    sum += weight * c * c;
    a = a_next;
    b = b_next;
    if (c <= kGapTolerance * a) {
      const double K = kPi / (2.0 * a);
      return {K, K * (1.0 - sum)};
    }
  }
  throw ConvergenceError("AGM did not converge for k = " + std::to_string(k));
}

}  // namespace

EllipticPair agm_KE(double k) {
  if (!(k >= 0.0) || k > kMaxModulus) {
    throw DomainError("elliptic modulus outside [0, 1 - 1e-12]: " + std::to_string(k));
  }
  return agm_core(k, std::sqrt((1.0 - k) * (1.0 + k)));
}

EllipticPair agm_KE_complementary(double kprime) {
  if (!(kprime > 0.0) || kprime > 1.0) {
    throw DomainError("complementary modulus outside (0, 1]: " + std::to_string(kprime));
  }
  if (kprime == 1.0) return {kPi / 2.0, kPi / 2.0};
  return agm_core(std::sqrt((1.0 - kprime) * (1.0 + kprime)), kprime);
}

double ellip_I(double k) {
  const auto [K, E] = agm_KE(k);
  (void)K;
  return E / ((1.0 - k) * (1.0 + k));
}

EllipticTriple elliptic_triple(double k) {
  const auto [K, E] = agm_KE(k);
  return {k, K, E, E / ((1.0 - k) * (1.0 + k))};
}

}  // namespace hypkonvex::specfun
