#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sumperfect/sumperfect.hpp"

namespace {

using namespace sumperfect;

TEST(Recognition, C5IsItsOwnWitness) {
  const Witness w = is_sum_perfect(cycle_graph(5));
  EXPECT_FALSE(w.verdict);
  ASSERT_NE(w.forbidden_copy(), nullptr);
  EXPECT_EQ(w.forbidden_copy()->index, 1);
  EXPECT_EQ(w.forbidden_copy()->embedding.map, (std::vector<Vertex>{0, 1, 2, 3, 4}));
  EXPECT_TRUE(witness_valid(cycle_graph(5), w));
}

TEST(Recognition, SmallPositiveExamples) {
  EXPECT_TRUE(is_sum_perfect(complete_graph(5)).verdict);
  EXPECT_TRUE(is_sum_perfect(Graph::empty(0)).verdict);
  EXPECT_TRUE(is_sum_perfect(Graph::empty(30)).verdict);
  const Witness w = is_sum_perfect(complete_bipartite(2, 5), {.certify_positive = true});
  EXPECT_TRUE(w.verdict);
  EXPECT_TRUE(std::holds_alternative<StableCliquePair>(w.evidence));
  EXPECT_TRUE(witness_valid(complete_bipartite(2, 5), w));
}

TEST(Recognition, FindsEachMemberInsideALargerHost) {
  std::mt19937_64 rng(41);
  for (const auto& m : forbidden_family().members()) {
    // Pad with isolated vertices, then shuffle labels.
    const Graph host = disjoint_union(m.graph, Graph::empty(5)).relabel(oracle::random_permutation(rng, m.graph.order() + 5));
    const Witness w = is_sum_perfect(host);
    EXPECT_FALSE(w.verdict) << m.name;
    EXPECT_TRUE(witness_valid(host, w)) << m.name;
  }
}

TEST(Recognition, AgreesWithDefinitionOnAllGraphsUpTo7) {
  for (int n = 0; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const Witness w = is_sum_perfect(g);
      ASSERT_EQ(w.verdict, is_sum_perfect_definitional(g)) << emit_graph6(g);
      ASSERT_TRUE(witness_valid(g, w));
      const Witness d = is_sum_perfect_by_definition(g);
      ASSERT_EQ(d.verdict, w.verdict);
      ASSERT_TRUE(witness_valid(g, d));
    }
}

TEST(Recognition, AgreesWithSubsetOracleOnRandomGraphs) {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 300; ++i) {
    const Graph g = oracle::random_graph(rng, 8 + i % 5, 0.2 + 0.6 * (i % 5) / 4.0);
    ASSERT_EQ(is_sum_perfect(g).verdict, oracle::max_deficiency(g) <= 0) << emit_graph6(g);
  }
}

TEST(Recognition, TwentyVertexSplitGraph) {
  std::mt19937_64 rng(43);
  const Graph g = oracle::random_split(rng, 20, 9, 0.5);
  ASSERT_TRUE(is_split(g).has_value());
  EXPECT_TRUE(is_sum_perfect(g).verdict);
  VertexSet s;
  for (Vertex v : oracle::random_permutation(rng, 20))
    if (s.size() < 16) s.insert(v);
  EXPECT_TRUE(is_sum_perfect_definitional(g.induced_subgraph(s)));
}

TEST(Recognition, WitnessesOnLargeHosts) {
  std::mt19937_64 rng(44);
  for (int i = 0; i < 20; ++i) {
    const Graph g = oracle::random_graph(rng, 30, 0.5);
    const Witness w = is_sum_perfect(g);
    EXPECT_TRUE(witness_valid(g, w));
  }
}

TEST(Recognition, AllCopiesAreValidAndDistinct) {
  const Graph g = disjoint_copies(cycle_graph(5), 2);
  const auto copies = all_forbidden_copies(g);
  std::set<VertexSet, decltype([](VertexSet a, VertexSet b) { return a.bits() < b.bits(); })> images;
  for (const auto& c : copies) {
    EXPECT_TRUE(witness_valid(g, Witness{false, c}));
    images.insert(c.embedding.image());
  }
  EXPECT_EQ(images.size(), copies.size());
  // Two C5 copies, plus 6-vertex members such as 3K2 and P4+K2 spread across both cycles.
  EXPECT_GT(copies.size(), 2U);
}

TEST(Recognition, InvalidWitnessesAreRejected) {
  const Graph c5 = cycle_graph(5);
  Witness bad{false, ForbiddenCopy{1, Embedding{{0, 2, 1, 3, 4}}}};
  EXPECT_FALSE(witness_valid(c5, bad));
  EXPECT_FALSE(witness_valid(c5, Witness{false, DeficientSubgraph{VertexSet{0, 1, 2}}}));
  EXPECT_FALSE(witness_valid(c5, Witness{true, StableCliquePair{VertexSet{0, 2}, VertexSet{0, 1}}}));
}

TEST(Threshold, Examples) {
  EXPECT_TRUE(is_threshold(complete_graph(6)));
  EXPECT_FALSE(is_threshold(path_graph(4)));
  EXPECT_FALSE(is_threshold(cycle_graph(4)));
  EXPECT_FALSE(is_threshold(disjoint_copies(path_graph(2), 2)));
  EXPECT_TRUE(is_threshold(complete_bipartite(1, 3)));
  EXPECT_TRUE(is_threshold(Graph::empty(0)));
  EXPECT_TRUE(check_threshold_theorem(Graph::empty(1)));
  EXPECT_FALSE(check_threshold_theorem(path_graph(4)));
}

TEST(Threshold, AgreesWithOrderingOracle) {
  for (int n = 0; n <= 6; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const bool t = oracle::threshold_by_ordering(g);
      EXPECT_EQ(is_threshold(g), t) << emit_graph6(g);
      EXPECT_EQ(is_p4_c4_2k2_free(g), t) << emit_graph6(g);
      if (n > 0) {
        EXPECT_EQ(check_threshold_theorem(g), t) << emit_graph6(g);
      }
    }
}

TEST(Threshold, RandomThresholdGraphsAreSumPerfect) {
  std::mt19937_64 rng(45);
  for (int i = 0; i < 100; ++i) {
    const Graph g = oracle::random_threshold(rng, 1 + i % 24);
    EXPECT_TRUE(is_threshold(g));
    EXPECT_TRUE(is_sum_perfect(g).verdict);
    EXPECT_TRUE(is_apex_threshold(g).has_value());
    if (g.order() <= kSubsetScanEnvelope) {
      EXPECT_EQ(max_deficiency(g), -1);
    }
  }
}

TEST(Split, Examples) {
  auto k3 = is_split(complete_graph(3));
  ASSERT_TRUE(k3.has_value());
  EXPECT_EQ(k3->clique, (VertexSet{0, 1, 2}));
  EXPECT_TRUE(k3->stable.empty());
  EXPECT_FALSE(is_split(cycle_graph(5)).has_value());
  EXPECT_FALSE(is_split(cycle_graph(4)).has_value());
  EXPECT_FALSE(is_split(disjoint_copies(path_graph(2), 2)).has_value());
}

TEST(Split, AgreesWithPartitionOracle) {
  for (int n = 0; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      auto p = is_split(g);
      ASSERT_EQ(p.has_value(), oracle::split_by_partition(g)) << emit_graph6(g);
      if (!p) continue;
      EXPECT_TRUE(is_clique(g, p->clique));
      EXPECT_TRUE(is_stable(g, p->stable));
      EXPECT_EQ(p->clique | p->stable, g.vertices());
    }
}

TEST(ApexThreshold, Examples) {
  EXPECT_TRUE(is_apex_threshold(cycle_graph(4)).has_value());
  EXPECT_FALSE(is_apex_threshold(disjoint_copies(complete_graph(3), 2)).has_value());
  EXPECT_FALSE(is_apex_threshold(cycle_graph(5)).has_value());
}

TEST(Containment, SubclassesOfSumPerfectUpTo7) {
  for (int n = 1; n <= 7; ++n)
    for (const Graph& g : enumerate_graphs(n)) {
      const bool sp = is_sum_perfect(g).verdict;
      if (is_split(g)) {
        EXPECT_TRUE(sp) << emit_graph6(g);
      }
      if (is_apex_threshold(g)) {
        EXPECT_TRUE(sp) << emit_graph6(g);
      }
      if (sp) {
        EXPECT_TRUE(is_perfect_lovasz(g)) << emit_graph6(g);
      }
    }
}

}  // namespace
