#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "errold/graph.hpp"

namespace errold {

inline constexpr int kMaxCanonicalVertices = 10;

// Upper-triangle adjacency packed column by column, pairs (0,1), (0,2),
// (1,2), (0,3), ... with (0,1) as the most significant of n(n-1)/2 bits.
// Reading the set bits from the top gives the edge list as a sequence of
// column-order positions, so the largest packed word is the graph labeling
// whose edge sequence is lexicographically least.
std::uint64_t pack_adjacency(const Graph& g);
Graph unpack_adjacency(int n, std::uint64_t code);

struct CanonicalGraph {
  Graph graph;  // relabeled so that pack_adjacency(graph) == code
  std::uint64_t code = 0;
};

// Canonical labeling by a pruned search over all n! vertex orders. Throws
// ResourceError for n > kMaxCanonicalVertices.
CanonicalGraph canonical_form(const Graph& g);

inline constexpr int kMaxWideCanonicalVertices = 16;

// Same labeling search with a 128-bit packed word, for isomorphism tests on
// up to 16 vertices where the 64-bit code does not fit.
struct WideCode {
  std::uint64_t high = 0;
  std::uint64_t low = 0;

  friend auto operator<=>(const WideCode&, const WideCode&) = default;
};

WideCode canonical_code_wide(const Graph& g);

// Fixed-width lowercase hex of the canonical code, ceil(n(n-1)/2 / 4) digits
// (at least one).
std::string canonical_hex(int n, std::uint64_t code);

}  // namespace errold
