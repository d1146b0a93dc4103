#include <benchmark/benchmark.h>

#include "theta/applications.hpp"
#include "theta/asymptotics.hpp"
#include "theta/exact.hpp"
#include "theta/weierstrass.hpp"

namespace {

using theta::asymptotics::SeriesConfig;

void BM_ThetaRecurrence(benchmark::State& state) {
  const auto s = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theta::exact::theta(s));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ThetaRecurrence)->RangeMultiplier(4)->Range(16, 16384)->Complexity();

void BM_ThetaSumForm(benchmark::State& state) {
  const auto s = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theta::exact::theta_sum_form(s));
}
BENCHMARK(BM_ThetaSumForm)->RangeMultiplier(4)->Range(16, 16384);

void BM_FloorEFactorialCheck(benchmark::State& state) {
  const auto s = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theta::exact::floor_e_factorial_check(s));
}
BENCHMARK(BM_FloorEFactorialCheck)->Arg(50)->Arg(500);

void BM_SeriesConstant(benchmark::State& state) {
  const auto cfg = SeriesConfig::make("1e-30", 200, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(theta::asymptotics::series_constant(cfg));
}
BENCHMARK(BM_SeriesConstant)->Arg(20)->Arg(50)->Arg(200);

void BM_RatioStudy(benchmark::State& state) {
  const auto cfg = SeriesConfig::defaults();
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta::asymptotics::ratio_study(static_cast<std::uint64_t>(state.range(0)), cfg));
  }
}
BENCHMARK(BM_RatioStudy)->Arg(200)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_WeierstrassProduct(benchmark::State& state) {
  const auto cfg = SeriesConfig::make("1e-30");
  const auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(theta::weierstrass::weierstrass_product(k, cfg));
}
BENCHMARK(BM_WeierstrassProduct)->Arg(1)->Arg(10)->Arg(100);

void BM_DistributionTable(benchmark::State& state) {
  const auto cfg = SeriesConfig::defaults();
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        theta::applications::distribution_table(static_cast<std::uint64_t>(state.range(0)), cfg));
  }
}
BENCHMARK(BM_DistributionTable)->Arg(15)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
