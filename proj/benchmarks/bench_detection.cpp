#include <benchmark/benchmark.h>

#include <random>

#include "errold/detection.hpp"
#include "errold/named_graphs.hpp"
#include "errold/solver.hpp"

using namespace errold;

namespace {

Graph random_cubicish(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(4.0 / n);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

void BM_VerifyPruned(benchmark::State& state) {
  const Graph g = random_cubicish(static_cast<int>(state.range(0)), 1);
  const VertexSet s = g.all_vertices();
  for (auto _ : state) benchmark::DoNotOptimize(verify(g, s, kErrOld).pass);
}
BENCHMARK(BM_VerifyPruned)->Arg(64)->Arg(256)->Arg(1024);

void BM_VerifyNaive(benchmark::State& state) {
  const Graph g = random_cubicish(static_cast<int>(state.range(0)), 1);
  const VertexSet s = g.all_vertices();
  for (auto _ : state) benchmark::DoNotOptimize(verify(g, s, kErrOld, VerifyStrategy::naive).pass);
}
BENCHMARK(BM_VerifyNaive)->Arg(64)->Arg(256);

void BM_SolveHeawood(benchmark::State& state) {
  const Graph g = named::heawood();
  const DetectionKind& kind = kAllKinds[state.range(0)];
  for (auto _ : state) benchmark::DoNotOptimize(minimum_detector_set(g, kind).optimum);
}
BENCHMARK(BM_SolveHeawood)->DenseRange(0, 3);

}  // namespace
