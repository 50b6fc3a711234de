#include <string>

#include <benchmark/benchmark.h>

#include "attnscope/diversity.hpp"
#include "attnscope/simulate.hpp"

namespace {

attnscope::MonthlyDomainCounts month_of(std::size_t domains) {
  attnscope::sim::Rng rng(7);
  const auto counts = attnscope::sim::discrete_power_law(domains, 2.1, 1, rng);
  attnscope::MonthlyDomainCounts m;
  m.month = attnscope::Month::parse("2012-06");
  for (std::size_t i = 0; i < counts.size(); ++i) m.add("d" + std::to_string(i), counts[i]);
  return m;
}

void BM_SummarizeMonth(benchmark::State& state) {
  const auto m = month_of(static_cast<std::size_t>(state.range(0)));
  attnscope::SummaryOptions opts;
  opts.top_ns = {10, 50, 100, 500, 1000};
  for (auto _ : state) benchmark::DoNotOptimize(attnscope::summarize_month(m, opts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SummarizeMonth)->RangeMultiplier(10)->Range(1000, 1000000)->Unit(benchmark::kMicrosecond)->Complexity();

void BM_Hhi(benchmark::State& state) {
  const auto m = month_of(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(attnscope::hhi(m));
}
BENCHMARK(BM_Hhi)->Arg(100000)->Unit(benchmark::kMicrosecond);

}  // namespace
