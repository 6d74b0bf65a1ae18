#include "errold/canonical.hpp"

#include <array>
#include <cstdio>

#include "errold/errors.hpp"

namespace errold {
namespace {

using Row = std::uint16_t;

int pair_count(int n) { return n * (n - 1) / 2; }

template <typename Code>
class CanonicalSearch {
 public:
  static constexpr int kMaxVertices = 16;

  explicit CanonicalSearch(const Graph& g) : n_(g.n()), total_bits_(pair_count(g.n())) {
    for (int v = 0; v < n_; ++v) {
      Row r = 0;
      for (int w : g.neighbors(v)) r = static_cast<Row>(r | (1U << w));
      rows_[static_cast<std::size_t>(v)] = r;
    }
  }

  void run() {
    if (n_ <= 1) {
      for (int i = 0; i < n_; ++i) best_perm_[static_cast<std::size_t>(i)] = i;
      have_best_ = true;
      return;
    }
    place(0, 0, 0);
  }

  Code code() const { return best_; }
  // best_perm()[k] is the original vertex given label k.
  const std::array<int, kMaxVertices>& best_perm() const { return best_perm_; }

 private:
  // Bits contributed by placing v at position k: adjacency to positions 0..k-1,
  // position 0 most significant.
  Code column_bits(int k, int v) const {
    Code bits = 0;
    for (int i = 0; i < k; ++i) bits = (bits << 1) | ((rows_[static_cast<std::size_t>(perm_[static_cast<std::size_t>(i)])] >> v) & 1U);
    return bits;
  }

  bool swap_is_automorphism(int u, int v) const {
    const Row mask = static_cast<Row>(~((1U << u) | (1U << v)));
    return (rows_[static_cast<std::size_t>(u)] & mask) == (rows_[static_cast<std::size_t>(v)] & mask);
  }

  void place(int k, Code prefix, Row placed) {
    if (k == n_) {
      if (!have_best_ || prefix > best_) {
        best_ = prefix;
        have_best_ = true;
        best_perm_ = perm_;
      }
      return;
    }
    // Only children maximising this column can lead to the largest word.
    Code top = 0;
    std::array<int, kMaxVertices> ties{};
    int tie_count = 0;
    for (int v = 0; v < n_; ++v) {
      if ((placed >> v) & 1U) continue;
      const Code bits = column_bits(k, v);
      if (tie_count == 0 || bits > top) {
        top = bits;
        tie_count = 0;
      }
      if (bits == top) ties[static_cast<std::size_t>(tie_count++)] = v;
    }
    const Code next = (prefix << k) | top;
    if (have_best_) {
      const int used = pair_count(k + 1);
      const Code best_prefix = best_ >> (total_bits_ - used);
      if (next < best_prefix) return;
    }
    for (int i = 0; i < tie_count; ++i) {
      const int v = ties[static_cast<std::size_t>(i)];
      // Vertices interchangeable by a transposition give identical subtrees.
      bool duplicate = false;
      for (int j = 0; j < i && !duplicate; ++j) duplicate = swap_is_automorphism(ties[static_cast<std::size_t>(j)], v);
      if (duplicate) continue;
      perm_[static_cast<std::size_t>(k)] = v;
      place(k + 1, next, static_cast<Row>(placed | (1U << v)));
    }
  }

  int n_;
  int total_bits_;
  std::array<Row, kMaxVertices> rows_{};
  std::array<int, kMaxVertices> perm_{};
  std::array<int, kMaxVertices> best_perm_{};
  Code best_ = 0;
  bool have_best_ = false;
};

}  // namespace

std::uint64_t pack_adjacency(const Graph& g) {
  if (g.n() > kMaxCanonicalVertices) throw ResourceError("adjacency packing supports at most 10 vertices");
  const int total = pair_count(g.n());
  std::uint64_t code = 0;
  for (const Edge& e : g.edges()) {
    const int pos = e.v * (e.v - 1) / 2 + e.u;
    code |= std::uint64_t{1} << (total - 1 - pos);
  }
  return code;
}

Graph unpack_adjacency(int n, std::uint64_t code) {
  const int total = pair_count(n);
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      const int pos = v * (v - 1) / 2 + u;
      if ((code >> (total - 1 - pos)) & 1U) edges.emplace_back(u, v);
    }
  }
  return Graph::from_edges(n, edges);
}

CanonicalGraph canonical_form(const Graph& g) {
  if (g.n() > kMaxCanonicalVertices) {
    throw ResourceError("canonical form supports at most " + std::to_string(kMaxCanonicalVertices) +
                        " vertices, got " + std::to_string(g.n()));
  }
  CanonicalSearch<std::uint64_t> search(g);
  search.run();
  std::vector<int> relabel(static_cast<std::size_t>(g.n()));
  for (int k = 0; k < g.n(); ++k) relabel[static_cast<std::size_t>(search.best_perm()[static_cast<std::size_t>(k)])] = k;
  CanonicalGraph out{g.permuted(relabel), 0};
  out.code = pack_adjacency(out.graph);
  return out;
}

WideCode canonical_code_wide(const Graph& g) {
  __extension__ using Wide = unsigned __int128;
  if (g.n() > kMaxWideCanonicalVertices) {
    throw ResourceError("wide canonical code supports at most " + std::to_string(kMaxWideCanonicalVertices) +
                        " vertices, got " + std::to_string(g.n()));
  }
  CanonicalSearch<Wide> search(g);
  search.run();
  const Wide code = search.code();
  return {static_cast<std::uint64_t>(code >> 64), static_cast<std::uint64_t>(code)};
}

std::string canonical_hex(int n, std::uint64_t code) {
  const int digits = std::max(1, (pair_count(n) + 3) / 4);
  char buf[24];
  std::snprintf(buf, sizeof buf, "%0*llx", digits, static_cast<unsigned long long>(code));
  return buf;
}

}  // namespace errold
