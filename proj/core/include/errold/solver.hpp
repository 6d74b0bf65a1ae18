#pragma once

#include <cstdint>
#include <optional>

#include "errold/detection.hpp"
#include "errold/graph.hpp"

namespace errold {

enum class SolveStrategy { branch_and_bound, exhaustive };
enum class SolveStatus { optimal, infeasible };

struct SolveOptions {
  SolveStrategy strategy = SolveStrategy::branch_and_bound;
  std::optional<std::uint64_t> node_budget;
  int jobs = 1;
};

struct SolveResult {
  SolveStatus status = SolveStatus::infeasible;
  std::optional<int> optimum;
  std::optional<VertexSet> witness_set;
  std::uint64_t nodes_explored = 0;
};

// Minimum-cardinality detector set for `kind`.
//
// Exhaustive search walks subsets by size, then lexicographically, and
// returns the first that verifies. Branch-and-bound fixes the degree-forced
// vertices, branches on the rest in descending-degree order (exclude first),
// and keeps the invariant that "all undecided vertices in" is itself a valid
// set, so every leaf is a solution. Both throw BudgetExhausted once more than
// `node_budget` nodes are visited. The witness is identical for every `jobs`
// value; only nodes_explored may vary.
SolveResult minimum_detector_set(const Graph& g, const DetectionKind& kind,
                                 const SolveOptions& options = {});

// Is there a valid detector set of size <= k?
bool decision(const Graph& g, const DetectionKind& kind, int k, const SolveOptions& options = {});

}  // namespace errold
