#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>

#include "errold/errors.hpp"
#include "errold/graph.hpp"
#include "errold/graph_io.hpp"
#include "errold/named_graphs.hpp"
#include "support.hpp"

using namespace errold;
namespace t = errold::testing;

TEST(EdgeList, ParsesUndeclaredCount) {
  const Graph g = parse_edge_list("0 1\n1 2");
  EXPECT_EQ(g.n(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(EdgeList, EmptyStreamIsEmptyGraph) {
  const Graph g = parse_edge_list("");
  EXPECT_EQ(g.n(), 0);
  EXPECT_EQ(g.m(), 0);
}

TEST(EdgeList, SelfLoopIsValidationError) {
  EXPECT_THROW(parse_edge_list("0 0"), ValidationError);
}

TEST(EdgeList, DuplicateEdgeIsValidationError) {
  EXPECT_THROW(parse_edge_list("0 1\n1 0\n"), ValidationError);
}

TEST(EdgeList, DeclaredCountKeepsIsolatedVertices) {
  const Graph g = parse_edge_list("# comment\nn 5\n0 1\n\n# tail\n");
  EXPECT_EQ(g.n(), 5);
  EXPECT_EQ(g.degree(4), 0);
}

TEST(EdgeList, MalformedLineReportsLineNumber) {
  try {
    parse_edge_list("0 1\n1  2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_edge_list("0 x\n"), ParseError);
  EXPECT_THROW(parse_edge_list("0 1 2\n"), ParseError);
  EXPECT_THROW(parse_edge_list("n 2\n0 3\n"), ValidationError);
}

TEST(EdgeList, RoundTripIsIdentity) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = t::random_graph(rng, static_cast<int>(rng() % 30), 0.2);
    EXPECT_EQ(parse_edge_list(to_edge_list(g)), g);
  }
}

TEST(EdgeList, MissingFile) {
  EXPECT_THROW(read_edge_list_file("/nonexistent/graph.el"), std::runtime_error);
}

TEST(DetectorSet, ParsesWhitespaceAndComments) {
  const VertexSet s = parse_detector_set("0 2\n# skip 3\n4\t1 # trailing\n", 5);
  EXPECT_EQ(s.to_vector(), (std::vector<int>{0, 1, 2, 4}));
  EXPECT_THROW(parse_detector_set("7", 5), ValidationError);
  EXPECT_THROW(parse_detector_set("1 1", 5), ValidationError);
  EXPECT_THROW(parse_detector_set("a", 5), ParseError);
}

TEST(DegreeSummary, Examples) {
  const DegreeSummary k4 = degree_summary(named::complete(4));
  EXPECT_EQ(k4.min_degree, 3);
  EXPECT_EQ(k4.max_degree, 3);
  EXPECT_TRUE(k4.cubic);
  EXPECT_FALSE(k4.quasi_cubic);
  const DegreeSummary c5 = degree_summary(named::cycle(5));
  EXPECT_EQ(c5.min_degree, 2);
  EXPECT_EQ(c5.max_degree, 2);
  EXPECT_FALSE(c5.cubic);
  EXPECT_FALSE(c5.quasi_cubic);
  const DegreeSummary p = degree_summary(named::petersen());
  EXPECT_TRUE(p.cubic);
  EXPECT_FALSE(p.quasi_cubic);
}

TEST(NamedGraphs, Shapes) {
  EXPECT_EQ(named::petersen().m(), 15);
  EXPECT_EQ(named::heawood().m(), 21);
  EXPECT_TRUE(degree_summary(named::heawood()).cubic);
  EXPECT_EQ(named::path(5).m(), 4);
  EXPECT_EQ(named::disjoint_union(named::complete(3), named::cycle(4)).n(), 7);
  // Heawood has girth 6: no vertex pair at distance <= 2 shares two neighbours.
  EXPECT_TRUE(is_c4_free(named::heawood()));
  EXPECT_TRUE(is_c4_free(named::petersen()));
}

TEST(FourCycles, Examples) {
  EXPECT_EQ(four_cycles(named::cycle(4)).size(), 1U);
  EXPECT_EQ(four_cycles(named::complete(4)).size(), 3U);
  EXPECT_TRUE(four_cycles(named::petersen()).empty());
}

namespace {

// Every 4-cycle as its least rotation/reflection, by brute force over
// ordered quadruples.
std::set<std::array<int, 4>> brute_four_cycles(const Graph& g) {
  const auto a = t::adjacency_matrix(g);
  std::set<std::array<int, 4>> out;
  const int n = g.n();
  auto adj = [&](int x, int y) { return a[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]; };
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q)
      for (int r = 0; r < n; ++r)
        for (int s = 0; s < n; ++s) {
          if (p == q || p == r || p == s || q == r || q == s || r == s) continue;
          if (!(adj(p, q) && adj(q, r) && adj(r, s) && adj(s, p))) continue;
          std::array<int, 4> best{p, q, r, s};
          const std::array<int, 4> cyc{p, q, r, s};
          for (int rot = 0; rot < 4; ++rot) {
            std::array<int, 4> fwd{}, bwd{};
            for (int i = 0; i < 4; ++i) {
              fwd[static_cast<std::size_t>(i)] = cyc[static_cast<std::size_t>((rot + i) % 4)];
              bwd[static_cast<std::size_t>(i)] = cyc[static_cast<std::size_t>((rot - i + 4) % 4)];
            }
            best = std::min({best, fwd, bwd});
          }
          out.insert(best);
        }
  return out;
}

}  // namespace

TEST(FourCycles, MatchesQuadrupleBruteForce) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 8);
    const Graph g = t::random_graph(rng, n, 0.15 + 0.7 * static_cast<double>(rng() % 100) / 100.0);
    const auto found = four_cycles(g);
    std::set<std::array<int, 4>> mine(found.begin(), found.end());
    ASSERT_EQ(mine.size(), found.size()) << "duplicate cycle";
    ASSERT_EQ(mine, brute_four_cycles(g));
    ASSERT_EQ(is_c4_free(g), found.empty());
  }
}

TEST(Twins, Examples) {
  const auto c4 = twin_pairs(named::cycle(4));
  EXPECT_EQ(c4, (std::vector<TwinPair>{{0, 2, TwinKind::open}, {1, 3, TwinKind::open}}));
  const auto k4 = twin_pairs(named::complete(4));
  EXPECT_EQ(k4.size(), 6U);
  for (const TwinPair& p : k4) EXPECT_EQ(p.kind, TwinKind::closed);
  EXPECT_TRUE(twin_pairs(named::petersen()).empty());
}

TEST(DistanceTwo, Examples) {
  EXPECT_EQ(pairs_within_distance_two(named::path(4)), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}));
  EXPECT_EQ(pairs_within_distance_two(named::complete(4)).size(), 6U);
  const Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_EQ(pairs_within_distance_two(two), (std::vector<Edge>{{0, 1}, {2, 3}}));
}

TEST(DistanceTwo, AgreesWithFloydWarshall) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 50);
    const Graph g = t::random_graph(rng, n, 2.5 / n);
    const auto a = t::adjacency_matrix(g);
    const int inf = 1 << 20;
    std::vector<std::vector<int>> d(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), inf));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 0;
        else if (a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = 1;
      }
    }
    for (int k = 0; k < n; ++k)
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
              std::min(d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)],
                       d[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)] + d[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]);
    std::vector<Edge> expected;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] <= 2) expected.emplace_back(i, j);
    ASSERT_EQ(pairs_within_distance_two(g), expected);
    for (int s = 0; s < n; ++s) {
      const auto bfs = bfs_distances(g, s);
      for (int v = 0; v < n; ++v) {
        const int want = d[static_cast<std::size_t>(s)][static_cast<std::size_t>(v)];
        ASSERT_EQ(bfs[static_cast<std::size_t>(v)], want == inf ? -1 : want);
      }
    }
  }
}

TEST(EdgePredicates, Triangle) {
  EXPECT_TRUE(edge_in_triangle(named::complete(3), {0, 1}));
  EXPECT_FALSE(edge_in_triangle(named::cycle(4), {0, 1}));
  EXPECT_FALSE(edge_in_triangle(named::cycle(5), {2, 3}));
  EXPECT_THROW(edge_in_triangle(named::cycle(5), {0, 2}), std::invalid_argument);
}

TEST(EdgePredicates, P5Terminal) {
  EXPECT_TRUE(edges_are_p5_terminal(named::path(5), {0, 1}, {3, 4}));
  EXPECT_TRUE(edges_are_p5_terminal(named::cycle(6), {0, 1}, {3, 4}));
  const Graph two = Graph::from_edges(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(edges_are_p5_terminal(two, {0, 1}, {2, 3}));
  EXPECT_THROW(edges_are_p5_terminal(named::path(5), {0, 1}, {1, 2}), std::invalid_argument);
  EXPECT_THROW(edges_are_p5_terminal(named::path(5), {0, 1}, {0, 4}), std::invalid_argument);
}

TEST(Graph, PermutedPreservesStructure) {
  std::mt19937_64 rng(2);
  const Graph g = named::petersen();
  const auto perm = t::random_permutation(rng, g.n());
  const Graph h = g.permuted(perm);
  EXPECT_EQ(h.m(), g.m());
  for (const Edge& e : g.edges()) EXPECT_TRUE(h.has_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]));
}

TEST(Graph, AdjacencyIsSymmetricAndHandshake) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = t::random_graph(rng, 1 + static_cast<int>(rng() % 40), 0.2);
    int degree_sum = 0;
    for (int u = 0; u < g.n(); ++u) {
      degree_sum += g.degree(u);
      EXPECT_EQ(g.neighbors(u).count(), g.degree(u));
      for (int v : g.neighbors(u)) EXPECT_TRUE(g.has_edge(v, u));
      EXPECT_EQ(std::set<int>(g.neighbors(u).begin(), g.neighbors(u).end()), t::neighbour_set(g, u));
    }
    EXPECT_EQ(degree_sum, 2 * g.m());
  }
}
