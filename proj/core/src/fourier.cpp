#include "hypkonvex/fourier.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <memory>
#include <mutex>

#include "hypkonvex/errors.hpp"

namespace hypkonvex {
namespace {

struct FftwBuffer {
  explicit FftwBuffer(std::size_t bytes) : ptr(fftw_malloc(bytes)) {}
  ~FftwBuffer() { fftw_free(ptr); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  void* ptr;
};

struct PlanPair {
  fftw_plan forward = nullptr;
  fftw_plan backward = nullptr;
};

// The FFTW planner is not reentrant; execution with the new-array interface is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

const PlanPair& plans_for(std::size_t M) {
  static std::map<std::size_t, PlanPair> cache;
  std::lock_guard lock(planner_mutex());
  auto it = cache.find(M);
  if (it != cache.end()) return it->second;
  FftwBuffer real(sizeof(double) * M);
  FftwBuffer cplx(sizeof(fftw_complex) * (M / 2 + 1));
  PlanPair p;
  const int n = static_cast<int>(M);
  p.forward = fftw_plan_dft_r2c_1d(n, static_cast<double*>(real.ptr),
                                   static_cast<fftw_complex*>(cplx.ptr), FFTW_ESTIMATE);
  p.backward = fftw_plan_dft_c2r_1d(n, static_cast<fftw_complex*>(cplx.ptr),
                                    static_cast<double*>(real.ptr), FFTW_ESTIMATE);
  return cache.emplace(M, p).first->second;
}

std::size_t effective_bandwidth(const FourierCoeffs& c) {
  double peak = 0.0;
  for (std::size_t n = 0; n < c.a.size(); ++n) peak = std::max({peak, std::abs(c.a[n]), std::abs(c.b[n])});
  const double floor = 1e-17 * peak;
  for (std::size_t n = c.a.size(); n-- > 0;) {
    if (std::abs(c.a[n]) > floor || std::abs(c.b[n]) > floor) return n;
  }
  return 0;
}

}  // namespace

FourierCoeffs real_dft(std::span<const double> samples) {
  const std::size_t M = samples.size();
  if (M < 2 || M % 2 != 0) throw DomainError("real_dft needs an even, nonzero number of samples");
  const std::size_t N = M / 2;
  const auto& plan = plans_for(M);
  FftwBuffer in(sizeof(double) * M);
  FftwBuffer out(sizeof(fftw_complex) * (N + 1));
  auto* x = static_cast<double*>(in.ptr);
  auto* X = static_cast<fftw_complex*>(out.ptr);
  std::copy(samples.begin(), samples.end(), x);
  fftw_execute_dft_r2c(plan.forward, x, X);

  FourierCoeffs c;
  c.a.assign(N + 1, 0.0);
  c.b.assign(N + 1, 0.0);
  const double inv = 1.0 / static_cast<double>(M);
  c.a[0] = X[0][0] * inv;
  for (std::size_t n = 1; n < N; ++n) {
    c.a[n] = 2.0 * X[n][0] * inv;
    c.b[n] = -2.0 * X[n][1] * inv;
  }
  c.a[N] = X[N][0] * inv;
  c.bandwidth = effective_bandwidth(c);
  return c;
}

std::vector<double> inverse_real_dft(const FourierCoeffs& c, std::size_t M) {
  const std::size_t N = M / 2;
  if (c.nyquist() != N) throw GridMismatch(2 * c.nyquist(), M);
  const auto& plan = plans_for(M);
  FftwBuffer in(sizeof(fftw_complex) * (N + 1));
  FftwBuffer out(sizeof(double) * M);
  auto* X = static_cast<fftw_complex*>(in.ptr);
  auto* x = static_cast<double*>(out.ptr);
  X[0][0] = c.a[0];
  X[0][1] = 0.0;
  for (std::size_t n = 1; n < N; ++n) {
    X[n][0] = 0.5 * c.a[n];
    X[n][1] = -0.5 * c.b[n];
  }
  X[N][0] = c.a[N];
  X[N][1] = 0.0;
  fftw_execute_dft_c2r(plan.backward, X, x);
  return std::vector<double>(x, x + M);
}

double eval_trig(const FourierCoeffs& c, double theta) {
  const std::size_t N = c.nyquist();
  const std::size_t top = std::min(c.bandwidth, N);
  const std::complex<double> step = std::polar(1.0, theta);
  std::complex<double> z = step;
  double acc = c.a[0];
  for (std::size_t n = 1; n <= top; ++n) {
    if (n == N) {
      acc += c.a[n] * std::cos(static_cast<double>(n) * theta);
    } else {
      acc += c.a[n] * z.real() + c.b[n] * z.imag();
    }
    z *= step;
    // Reseed periodically so rounding in the rotation does not accumulate.
    if ((n & 31u) == 0) z = std::polar(1.0, static_cast<double>(n + 1) * theta);
  }
  return acc;
}

double eval_trig_derivative(const FourierCoeffs& c, double theta) {
  const std::size_t N = c.nyquist();
  const std::size_t top = std::min(c.bandwidth, N);
  const std::complex<double> step = std::polar(1.0, theta);
  std::complex<double> z = step;
  double acc = 0.0;
  for (std::size_t n = 1; n <= top; ++n) {
    const double nn = static_cast<double>(n);
    if (n == N) {
      acc -= nn * c.a[n] * std::sin(nn * theta);
    } else {
      acc += nn * (c.b[n] * z.real() - c.a[n] * z.imag());
    }
    z *= step;
    if ((n & 31u) == 0) z = std::polar(1.0, static_cast<double>(n + 1) * theta);
  }
  return acc;
}

}  // namespace hypkonvex
