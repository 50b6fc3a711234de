#include <sstream>
#include <string>

#include <benchmark/benchmark.h>

#include "attnscope/ingest.hpp"
#include "attnscope/simulate.hpp"
#include "attnscope/url.hpp"

namespace {

const std::string& corpus() {
  static const std::string text = [] {
    attnscope::sim::Rng rng(42);
    std::string s;
    for (const auto& line : attnscope::sim::synthetic_posts(20000, 5000, rng)) s += line + '\n';
    return s;
  }();
  return text;
}

void BM_IngestStream(benchmark::State& state) {
  const std::string& text = corpus();
  for (auto _ : state) {
    std::istringstream in(text);
    auto result = attnscope::ingest_stream(in);
    benchmark::DoNotOptimize(result);
  }
  state.SetItemsProcessed(state.iterations() * 20000);
  state.SetBytesProcessed(state.iterations() * static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_IngestStream)->Unit(benchmark::kMillisecond);

void BM_NormalizeDomain(benchmark::State& state) {
  const std::string urls[] = {"https://www.example.co.uk/a/b", "http://blog.site12.com/x?y=1",
                              "https://site3.io", "http://de.wikipedia.org/wiki/Cat"};
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(attnscope::normalize_domain(urls[i++ % 4]));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_NormalizeDomain);

void BM_ExtractUrls(benchmark::State& state) {
  const std::string body =
      "see https://a.com/x, and (http://en.wikipedia.org/wiki/Foo_(bar)) or \"http://b.org/q\". lol";
  for (auto _ : state) benchmark::DoNotOptimize(attnscope::extract_urls(body));
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ExtractUrls);

}  // namespace
