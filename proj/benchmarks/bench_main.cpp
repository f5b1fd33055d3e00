#include <benchmark/benchmark.h>

#include "heckesign/chebst/bmv.hpp"
#include "heckesign/forms/elliptic.hpp"
#include "heckesign/forms/modular_forms.hpp"
#include "heckesign/signs/smooth_sums.hpp"
#include "heckesign/specfun/beta.hpp"
#include "heckesign/specfun/dickman.hpp"
#include "heckesign/util/primes.hpp"

using namespace heckesign;

static void BM_DeltaSeries(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(forms::delta_series(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_DeltaSeries)->Arg(1 << 12)->Arg(1 << 15)->Unit(benchmark::kMillisecond);

static void BM_EcApSweep(benchmark::State& state) {
  const auto primes = util::primes_up_to(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) {
    std::int64_t acc = 0;
    for (const auto p : primes) {
      if (p > 3) acc += forms::ec_ap(-1, 1, p);
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_EcApSweep)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_SegmentedSieve(benchmark::State& state) {
  for (auto _ : state) {
    std::uint64_t count = 0;
    util::for_each_prime(2, static_cast<std::uint64_t>(state.range(0)), [&](std::uint64_t) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_SegmentedSieve)->Arg(1000000)->Arg(10000000)->Unit(benchmark::kMillisecond);

static void BM_HSum(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(signs::h_sum(static_cast<double>(state.range(0)), 1.2, std::uint64_t{1}));
}
BENCHMARK(BM_HSum)->Arg(10000)->Arg(1000000)->Unit(benchmark::kMillisecond);

static void BM_Dickman(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(specfun::DickmanRho(10.0));
}
BENCHMARK(BM_Dickman)->Unit(benchmark::kMillisecond);

static void BM_BetaVolterra(benchmark::State& state) {
  const auto alpha = specfun::StepFunction::capped_alpha(8);
  const double h = 1.0 / static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(specfun::beta_volterra(alpha, 2.0, h));
}
BENCHMARK(BM_BetaVolterra)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);

static void BM_VaalerEval(benchmark::State& state) {
  const auto a = chebst::vaaler_alpha_L(static_cast<int>(state.range(0)));
  double x = 0.0;
  for (auto _ : state) {
    x += 0.001;
    benchmark::DoNotOptimize(a(x));
  }
}
BENCHMARK(BM_VaalerEval)->Arg(11)->Arg(119);
BENCHMARK_MAIN();
