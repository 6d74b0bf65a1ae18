#include <benchmark/benchmark.h>

#include "errold/canonical.hpp"
#include "errold/extremal.hpp"
#include "errold/named_graphs.hpp"

using namespace errold;

namespace {

void BM_CanonicalPetersen(benchmark::State& state) {
  const Graph g = named::petersen();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_form(g).code);
}
BENCHMARK(BM_CanonicalPetersen);

void BM_CanonicalWideHeawood(benchmark::State& state) {
  const Graph g = named::heawood();
  for (auto _ : state) benchmark::DoNotOptimize(canonical_code_wide(g));
}
BENCHMARK(BM_CanonicalWideHeawood);

void BM_EnumerateAll(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_graphs(n, std::nullopt, [](const Graph&) { return true; }).size());
}
BENCHMARK(BM_EnumerateAll)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

void BM_SupportingSeven(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(smallest_supporting_edge_count(7).edge_count);
}
BENCHMARK(BM_SupportingSeven)->Unit(benchmark::kMillisecond);

}  // namespace
