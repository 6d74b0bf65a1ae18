#include <benchmark/benchmark.h>

#include "errold/grids.hpp"

using namespace errold::grids;

namespace {

void BM_CertifySqr(benchmark::State& state) {
  PeriodicPattern p;
  p.kind = grid_kind(GridName::SQR);
  p.basis1 = {4, 0};
  p.basis2 = {1, 2};
  p.detectors = {{0, 0}, {0, 1}, {1, 0}, {1, 1}, {2, 0}, {2, 1}, {3, 0}};
  for (auto _ : state) benchmark::DoNotOptimize(certify_pattern(p).pass);
}
BENCHMARK(BM_CertifySqr);

void BM_Search(benchmark::State& state) {
  const GridKind kind = grid_kind(static_cast<GridName>(state.range(0)));
  const int index = static_cast<int>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(search_patterns(kind, index).has_value());
}
BENCHMARK(BM_Search)->Args({0, 8})->Args({1, 7})->Args({2, 9})->Unit(benchmark::kMillisecond);

}  // namespace
