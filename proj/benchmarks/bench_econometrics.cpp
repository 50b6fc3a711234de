#include <benchmark/benchmark.h>

#include "attnscope/econometrics.hpp"
#include "attnscope/simulate.hpp"

namespace {

void BM_AdfAutolag(benchmark::State& state) {
  attnscope::sim::Rng rng(1);
  const auto x = attnscope::sim::random_walk(static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) benchmark::DoNotOptimize(attnscope::adf_test(x));
}
BENCHMARK(BM_AdfAutolag)->Arg(200)->Arg(1000)->Unit(benchmark::kMicrosecond);

void BM_Pipeline(benchmark::State& state) {
  attnscope::sim::Rng rng(2);
  const auto [x, y] = attnscope::sim::lagged_cause_pair(200, 0.5, 3, rng);
  attnscope::MonthlySeries a{"attention", {}}, b{"value", {}};
  auto m = attnscope::Month::parse("2000-01");
  for (std::size_t t = 0; t < x.size(); ++t, m = m + 1) {
    a.observations.push_back({m, x[t]});
    b.observations.push_back({m, y[t]});
  }
  for (auto _ : state) benchmark::DoNotOptimize(attnscope::run_two_step_pipeline(a, b));
}
BENCHMARK(BM_Pipeline)->Unit(benchmark::kMillisecond);

}  // namespace
