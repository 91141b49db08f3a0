#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace hypkonvex {

/// Real trigonometric coefficients of the interpolant through M equispaced
/// samples on [0, 2pi):
///   h(theta) = a[0] + sum_{n=1}^{N-1} (a[n] cos n theta + b[n] sin n theta) + a[N] cos N theta
/// with N = M / 2. Both vectors have N + 1 entries; b[0] = b[N] = 0.
struct FourierCoeffs {
  std::vector<double> a;
  std::vector<double> b;
  /// Highest harmonic whose coefficients exceed 1e-17 of the largest one.
  std::size_t bandwidth = 0;

  std::size_t nyquist() const { return a.empty() ? 0 : a.size() - 1; }
};

/// Forward transform (FFTW backend). Requires an even number of samples.
FourierCoeffs real_dft(std::span<const double> samples);

/// Samples of the trigonometric polynomial with the given coefficients on the M-point grid.
std::vector<double> inverse_real_dft(const FourierCoeffs& c, std::size_t M);

/// Evaluates the trigonometric interpolant at an arbitrary angle. Cost is
/// linear in the bandwidth; harmonics are generated by complex rotation.
double eval_trig(const FourierCoeffs& c, double theta);

/// Derivative of the interpolant at an arbitrary angle.
double eval_trig_derivative(const FourierCoeffs& c, double theta);

}  // namespace hypkonvex
