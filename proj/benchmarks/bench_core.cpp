#include <benchmark/benchmark.h>

#include "hypkonvex/limits.hpp"
#include "hypkonvex/lorentz.hpp"
#include "hypkonvex/mobius.hpp"
#include "hypkonvex/random.hpp"
#include "hypkonvex/specfun.hpp"
#include "hypkonvex/supportfn.hpp"
#include "hypkonvex/verify.hpp"

using namespace hypkonvex;

static void BM_AgmKE(benchmark::State& state) {
  double k = 0.3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(specfun::agm_KE(k));
    k = k < 0.99 ? k + 1e-6 : 0.3;
  }
}
BENCHMARK(BM_AgmKE);

static void BM_FormSpectral(benchmark::State& state) {
  const auto M = static_cast<std::size_t>(state.range(0));
  rnd::Rng rng(1);
  const auto a = rnd::random_body(rng, M).untagged();
  const auto b = rnd::random_body(rng, M).untagged();
  for (auto _ : state) {
    // Copies drop the cached spectrum so the transform is timed too.
    const EvenFn x(std::vector<double>(a.samples().begin(), a.samples().end()));
    const EvenFn y(std::vector<double>(b.samples().begin(), b.samples().end()));
    benchmark::DoNotOptimize(lorentz::form_A_spectral(x, y));
  }
}
BENCHMARK(BM_FormSpectral)->Arg(512)->Arg(2048)->Arg(8192);

static void BM_FormExactPolygons(benchmark::State& state) {
  rnd::Rng rng(2);
  const auto p = rnd::random_polygon(rng);
  const auto q = rnd::random_polygon(rng);
  for (auto _ : state) benchmark::DoNotOptimize(lorentz::form_A_exact(p, q));
}
BENCHMARK(BM_FormExactPolygons);

static void BM_RhoActUntagged(benchmark::State& state) {
  const auto M = static_cast<std::size_t>(state.range(0));
  rnd::Rng rng(3);
  const auto h = rnd::random_body(rng, M).untagged();
  const auto m = rnd::random_mobius(rng);
  for (auto _ : state) benchmark::DoNotOptimize(mobius::rho_act(m, h));
}
BENCHMARK(BM_RhoActUntagged)->Arg(256)->Arg(1024);

static void BM_IotaClosed(benchmark::State& state) {
  double s = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mobius::iota_dist_closed(s));
    s = s < 30.0 ? s + 1e-3 : 0.1;
  }
}
BENCHMARK(BM_IotaClosed);

static void BM_IotaQuadrature(benchmark::State& state) {
  const auto m = mobius::Mobius::hyperbolic(static_cast<double>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(mobius::iota_dist_quadrature(m));
}
BENCHMARK(BM_IotaQuadrature)->Arg(1)->Arg(10);

static void BM_Kernels(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify::kernels_compare(1.0));
}
BENCHMARK(BM_Kernels);

static void BM_EmpiricalDimension(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(limits::empirical_dimension(2, 12, 100000, 1));
}
BENCHMARK(BM_EmpiricalDimension)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
