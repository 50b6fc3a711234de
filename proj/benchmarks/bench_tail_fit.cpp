#include <benchmark/benchmark.h>

#include "attnscope/simulate.hpp"
#include "attnscope/tail_fit.hpp"

namespace {

void BM_FitPowerLaw(benchmark::State& state) {
  attnscope::sim::Rng rng(42);
  const auto v = attnscope::sim::discrete_power_law(static_cast<std::size_t>(state.range(0)), 2.5, 5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(attnscope::fit_power_law(v));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FitPowerLaw)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMillisecond)->Complexity();

void BM_FitPowerLawExact(benchmark::State& state) {
  attnscope::sim::Rng rng(42);
  const auto v = attnscope::sim::discrete_power_law(20000, 2.5, 5, rng);
  attnscope::PowerLawOptions opts;
  opts.exact_zeta = true;
  for (auto _ : state) benchmark::DoNotOptimize(attnscope::fit_power_law(v, opts));
}
BENCHMARK(BM_FitPowerLawExact)->Unit(benchmark::kMillisecond);

void BM_FitTail(benchmark::State& state) {
  attnscope::sim::Rng rng(42);
  const auto v = attnscope::sim::discrete_power_law(20000, 2.5, 5, rng);
  for (auto _ : state) benchmark::DoNotOptimize(attnscope::fit_tail(v));
}
BENCHMARK(BM_FitTail)->Unit(benchmark::kMillisecond);

}  // namespace
