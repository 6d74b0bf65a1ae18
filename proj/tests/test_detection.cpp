#include <gtest/gtest.h>

#include <random>

#include "errold/detection.hpp"
#include "errold/extremal.hpp"
#include "errold/named_graphs.hpp"
#include "support.hpp"

using namespace errold;
namespace t = errold::testing;

TEST(Kinds, ParametersAndNames) {
  EXPECT_EQ(parse_kind("old"), (DetectionKind{1, 1, DistinguishMode::symmetric}));
  EXPECT_EQ(parse_kind("redold"), (DetectionKind{2, 2, DistinguishMode::symmetric}));
  EXPECT_EQ(parse_kind("detold"), (DetectionKind{2, 2, DistinguishMode::one_sided}));
  EXPECT_EQ(parse_kind("err"), (DetectionKind{3, 3, DistinguishMode::symmetric}));
  EXPECT_THROW(parse_kind("ERR"), std::invalid_argument);
}

TEST(Dominators, Examples) {
  const Graph c5 = named::cycle(5);
  EXPECT_EQ(dominators(c5, VertexSet(5, {0, 1, 2}), 0), VertexSet(5, {1}));
  EXPECT_TRUE(dominators(named::petersen(), VertexSet(10), 3).empty());
  EXPECT_EQ(dominators(named::complete(4), VertexSet::full(4), 0), VertexSet(4, {1, 2, 3}));
}

TEST(DistinguishingValue, Examples) {
  const Graph c4 = named::cycle(4);
  EXPECT_EQ(distinguishing_value(c4, VertexSet::full(4), 0, 2, DistinguishMode::symmetric), 0);
  EXPECT_EQ(distinguishing_value(named::complete(4), VertexSet::full(4), 0, 1, DistinguishMode::symmetric), 2);
  const Graph p6 = named::path(6);
  EXPECT_EQ(distinguishing_value(p6, VertexSet::full(6), 1, 4, DistinguishMode::symmetric), p6.degree(1) + p6.degree(4));
  EXPECT_THROW(distinguishing_value(c4, VertexSet::full(4), 1, 1, DistinguishMode::symmetric), std::invalid_argument);
}

TEST(DistinguishingValue, OneSidedIsLargerDifference) {
  // N_S(0) = {1, 3, 4}, N_S(2) = {1, 3}: sides 1 and 0.
  const Graph g = Graph::from_edges(5, {{0, 1}, {0, 3}, {0, 4}, {2, 1}, {2, 3}});
  const VertexSet s = VertexSet::full(5);
  EXPECT_EQ(distinguishing_value(g, s, 0, 2, DistinguishMode::one_sided), 1);
  EXPECT_EQ(distinguishing_value(g, s, 0, 2, DistinguishMode::symmetric), 1);
}

TEST(Verify, Examples) {
  const Graph p = named::petersen();
  EXPECT_TRUE(verify(p, VertexSet::full(10), kErrOld).pass);
  EXPECT_FALSE(verify(p, VertexSet::full(10), kErrOld).failure_witness.has_value());

  const Verdict k4 = verify(named::complete(4), VertexSet::full(4), kErrOld);
  ASSERT_FALSE(k4.pass);
  const auto* pair = std::get_if<PairWitness>(&*k4.failure_witness);
  ASSERT_NE(pair, nullptr);
  EXPECT_EQ(pair->value, 2);
  EXPECT_EQ(pair->u, 0);
  EXPECT_EQ(pair->v, 1);

  VertexSet s = VertexSet::full(10);
  s.erase(0);
  const Verdict minus = verify(p, s, kErrOld);
  ASSERT_FALSE(minus.pass);
  const auto* vertex = std::get_if<VertexWitness>(&*minus.failure_witness);
  ASSERT_NE(vertex, nullptr);
  EXPECT_TRUE(p.has_edge(0, vertex->vertex));
  EXPECT_EQ(vertex->domination, 2);
}

TEST(Verify, WitnessIsLeastViolation) {
  // Vertex 0 isolated, 1..4 a C4: vertex 0 fails first.
  const Graph g = Graph::from_edges(5, {{1, 2}, {2, 3}, {3, 4}, {4, 1}});
  const Verdict v = verify(g, VertexSet::full(5), kOld);
  ASSERT_FALSE(v.pass);
  EXPECT_EQ(std::get<VertexWitness>(*v.failure_witness).vertex, 0);
}

TEST(Verify, PrunedMatchesNaiveExhaustivelyUpToSeven) {
  for (int n = 1; n <= 7; ++n) {
    const auto graphs = enumerate_graphs(n, std::nullopt, [](const Graph&) { return true; });
    for (const CanonicalGraph& c : graphs) {
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) {
          if ((mask >> v) & 1U) s.insert(v);
        }
        for (const DetectionKind& kind : kAllKinds) {
          const Verdict a = verify(c.graph, s, kind, VerifyStrategy::pruned);
          const Verdict b = verify(c.graph, s, kind, VerifyStrategy::naive);
          ASSERT_EQ(a.pass, b.pass);
          if (!a.pass && std::holds_alternative<VertexWitness>(*b.failure_witness)) {
            ASSERT_EQ(std::get<VertexWitness>(*a.failure_witness).vertex, std::get<VertexWitness>(*b.failure_witness).vertex);
          }
        }
      }
    }
  }
}

TEST(Verify, PrunedMatchesNaiveOnRandomGraphs) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 29);
    const Graph g = t::random_graph(rng, n, 0.1 + 0.5 * static_cast<double>(rng() % 100) / 100.0);
    const VertexSet s = t::random_subset(rng, n, 0.5 + 0.5 * static_cast<double>(rng() % 100) / 100.0);
    for (const DetectionKind& kind : kAllKinds) {
      ASSERT_EQ(verify(g, s, kind).pass, verify(g, s, kind, VerifyStrategy::naive).pass);
    }
  }
}

TEST(RedOldRemoval, Examples) {
  EXPECT_FALSE(verify_red_old_by_removal(named::petersen(), VertexSet(10)));
  EXPECT_FALSE(verify(named::petersen(), VertexSet(10), kRedOld).pass);
  EXPECT_EQ(verify_red_old_by_removal(named::petersen(), VertexSet::full(10)),
            verify(named::petersen(), VertexSet::full(10), kRedOld).pass);
  // K4: dom 3 and every pair differs in 2, so all of V is RED:OLD.
  EXPECT_TRUE(verify_red_old_by_removal(named::complete(4), VertexSet::full(4)));
  EXPECT_FALSE(verify_red_old_by_removal(named::cycle(4), VertexSet::full(4)));
}

TEST(RedOldRemoval, AgreesWithCharacterisationExhaustivelyUpToSix) {
  for (int n = 1; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t gm = 0; gm < (std::uint64_t{1} << pairs); ++gm) {
      const Graph g = t::graph_from_mask(n, gm);
      for (std::uint32_t sm = 0; sm < (1U << n); sm += 1 + (gm % 3)) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v) {
          if ((sm >> v) & 1U) s.insert(v);
        }
        ASSERT_EQ(verify_red_old_by_removal(g, s), verify(g, s, kRedOld).pass);
      }
    }
  }
}

TEST(RedOldRemoval, AgreesWithCharacterisationOnRandomGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 9);
    const Graph g = t::random_graph(rng, n, 0.3 + 0.6 * static_cast<double>(rng() % 100) / 100.0);
    const VertexSet s = t::random_subset(rng, n, 0.8);
    ASSERT_EQ(verify_red_old_by_removal(g, s), verify(g, s, kRedOld).pass && is_open_dominating(g, s));
  }
}

TEST(Existence, Examples) {
  const ExistenceResult k4 = exists_err_old(named::complete(4));
  ASSERT_FALSE(k4.exists);
  const auto& cyc = std::get<FourCycleWitness>(*k4.witness);
  EXPECT_EQ(cyc.value, 2);
  const ExistenceResult c7 = exists_err_old(named::cycle(7));
  ASSERT_FALSE(c7.exists);
  EXPECT_EQ(std::get<LowDegreeWitness>(*c7.witness).degree, 2);
  EXPECT_TRUE(exists_err_old(named::petersen()).exists);
  EXPECT_TRUE(verify(named::petersen(), VertexSet::full(10), kErrOld).pass);
}

TEST(Existence, MatchesVerifyOnFullSetExhaustivelyUpToSix) {
  for (int n = 0; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t gm = 0; gm < (std::uint64_t{1} << pairs); ++gm) {
      const Graph g = t::graph_from_mask(n, gm);
      ASSERT_EQ(exists_err_old(g).exists, verify(g, g.all_vertices(), kErrOld).pass);
    }
  }
}

TEST(Existence, TwinsRuleOutErrOld) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 10);
    const Graph g = t::random_graph(rng, n, 0.6);
    if (!twin_pairs(g).empty()) { ASSERT_FALSE(exists_err_old(g).exists); }
  }
}

TEST(Forced, Examples) {
  EXPECT_EQ(forced_detectors(named::petersen()), VertexSet::full(10));
  EXPECT_EQ(forced_detectors(named::heawood()), VertexSet::full(14));
  EXPECT_TRUE(forced_detectors(named::complete(6)).empty());
  for (const CanonicalGraph& c : quasi_cubic_graphs(7)) EXPECT_EQ(forced_detectors(c.graph), c.graph.all_vertices());
}

TEST(Forced, EveryValidSetContainsForcedVertices) {
  std::mt19937_64 rng(13);
  int checked = 0;
  for (int trial = 0; trial < 20000; ++trial) {
    const int n = 4 + static_cast<int>(rng() % 9);
    const Graph g = t::random_graph(rng, n, 0.3 + 0.5 * static_cast<double>(rng() % 100) / 100.0);
    const VertexSet s = t::random_subset(rng, n, 0.9);
    for (const DetectionKind& kind : kAllKinds) {
      if (verify(g, s, kind).pass) {
        ASSERT_TRUE(forced_detectors(g, kind).is_subset_of(s));
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 100);
}

TEST(Forced, CubicDetOldMatchesErrOldExistence) {
  for (int n = 4; n <= 10; n += 2) {
    for (const CanonicalGraph& c : cubic_graphs(n)) {
      EXPECT_EQ(exists_err_old(c.graph).exists, verify(c.graph, c.graph.all_vertices(), kDetOld).pass);
    }
  }
}

TEST(Forced, CubicErrOldMatchesC4Free) {
  for (int n = 4; n <= 10; n += 2) {
    for (const CanonicalGraph& c : cubic_graphs(n)) EXPECT_EQ(exists_err_old(c.graph).exists, is_c4_free(c.graph));
  }
}

TEST(Forced, FourRegularDetOldMatchesErrOldExistence) {
  for (int n = 5; n <= 10; ++n) {
    EnumerationQuery q;
    q.n = n;
    q.min_degree = 4;
    q.max_degree = 4;
    for (const CanonicalGraph& c : enumerate_graphs(q, [](const Graph&) { return true; })) {
      EXPECT_EQ(exists_err_old(c.graph).exists, verify(c.graph, c.graph.all_vertices(), kDetOld).pass);
    }
  }
}
