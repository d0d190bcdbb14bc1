#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "sumperfect/sumperfect.hpp"

namespace {

using namespace sumperfect;

TEST(Family, HasTwentySevenPairwiseDistinctMembers) {
  const auto& f = forbidden_family();
  ASSERT_EQ(f.size(), 27U);
  std::set<std::string> classes;
  for (int i = 1; i <= 27; ++i) {
    EXPECT_EQ(f.member(i).index, i);
    EXPECT_EQ(f.member(i).key, canonical_key(f.member(i).graph));
    classes.insert(oracle::canonical(f.member(i).graph));
  }
  EXPECT_EQ(classes.size(), 27U);
}

TEST(Family, NamedMembers) {
  const auto& f = forbidden_family();
  EXPECT_EQ(f.member(1).graph, cycle_graph(5));
  EXPECT_EQ(f.member(13).graph.edge_count(), 9);
  EXPECT_TRUE(is_isomorphic(f.member(13).graph, complete_bipartite(3, 3)));
  EXPECT_TRUE(is_isomorphic(f.member(8).graph, cycle_graph(6)));
  EXPECT_TRUE(is_isomorphic(f.member(6).graph, path_graph(6)));
  EXPECT_EQ(f.member(26).graph.order(), 7);
  EXPECT_EQ(f.member(26).graph.edge_count(), 10);
  EXPECT_THROW(f.member(0), std::out_of_range);
  EXPECT_THROW(f.member(28), std::out_of_range);
}

TEST(Family, StructureOfMembers) {
  const auto& f = forbidden_family();
  for (int i = 2; i <= 13; ++i) {
    const Graph& g = f.member(i).graph;
    EXPECT_EQ(g.order(), 6);
    EXPECT_TRUE(detail::is_bipartite(g)) << i;
    EXPECT_EQ(oracle::matching_number(g), 3) << i;
  }
  for (int i = 14; i <= 25; ++i) EXPECT_TRUE(is_isomorphic(f.member(i).graph, f.member(i - 12).graph.complement()));
  EXPECT_TRUE(is_isomorphic(f.member(27).graph, f.member(26).graph.complement()));
}

TEST(Family, ClosedUnderComplement) {
  const auto& f = forbidden_family();
  std::set<CanonicalKey> keys;
  for (const auto& m : f.members()) keys.insert(m.key);
  for (const auto& m : f.members()) EXPECT_TRUE(keys.contains(canonical_key(m.graph.complement()))) << m.name;
}

TEST(Family, DisconnectedMembersAreTheFourUnions) {
  auto connected = [](const Graph& g) {
    VertexSet seen{0}, frontier{0};
    while (!frontier.empty()) {
      VertexSet next;
      for (Vertex v : frontier) next |= g.neighbors(v);
      frontier = next - seen;
      seen |= next;
    }
    return seen == g.vertices();
  };
  std::set<CanonicalKey> disconnected;
  for (const auto& m : forbidden_family().members())
    if (!connected(m.graph)) disconnected.insert(m.key);
  const Graph k2 = path_graph(2);
  const std::set<CanonicalKey> expected = {
      canonical_key(disjoint_copies(k2, 3)), canonical_key(disjoint_union(path_graph(4), k2)),
      canonical_key(disjoint_union(cycle_graph(4), k2)), canonical_key(disjoint_copies(complete_graph(3), 2))};
  EXPECT_EQ(disconnected, expected);
}

TEST(Family, EveryMemberIsMinimallyNonSumPerfect) {
  for (const auto& m : forbidden_family().members()) {
    EXPECT_EQ(oracle::max_deficiency(m.graph), 1) << m.name;
    EXPECT_EQ(m.graph.order() - oracle::alpha(m.graph) - oracle::omega(m.graph), 1) << m.name;
    for (Vertex v : m.graph.vertices()) EXPECT_LE(oracle::max_deficiency(m.graph.delete_vertex(v)), 0) << m.name;
  }
}

TEST(Family, VerifyFamilyPassesEveryMember) {
  const FamilyReport r = verify_family(forbidden_family());
  ASSERT_EQ(r.members.size(), 27U);
  for (const auto& c : r.members) {
    EXPECT_TRUE(c.passed()) << c.name;
    EXPECT_LE(std::max(c.alpha, c.omega), 3);
  }
  EXPECT_TRUE(r.passed());
}

TEST(Family, ConjectureSubfamily) {
  const auto b = build_conjecture_family();
  ASSERT_EQ(b.size(), 24U);
  for (const auto& m : b) {
    EXPECT_FALSE(is_isomorphic(m.graph, cycle_graph(5)));
    EXPECT_NE(m.index, 26);
    EXPECT_NE(m.index, 27);
  }
  EXPECT_EQ(b.front().index, 2);
  EXPECT_EQ(b.back().index, 25);
}

TEST(Family, BipartitePerfectMatchingGraphs) {
  // Oracle: every labeled 6-vertex graph, bipartite by partition scan, perfect matching by edge subsets.
  std::set<std::string> brute;
  for (std::uint64_t mask = 0; mask < (1U << 15); ++mask) {
    const Graph g = oracle::from_mask(6, mask);
    bool bipartite = false;
    for (std::uint32_t s = 0; s < 64 && !bipartite; ++s) bipartite = oracle::stable(g, s) && oracle::stable(g, 63 & ~s);
    if (bipartite && oracle::matching_number(g) == 3) brute.insert(oracle::canonical(g));
  }
  EXPECT_EQ(brute.size(), 12U);

  const auto found = enumerate_bipartite_pm6();
  ASSERT_EQ(found.size(), 12U);
  std::set<std::string> got, members;
  for (const auto& g : found) got.insert(oracle::canonical(g));
  for (int i = 2; i <= 13; ++i) members.insert(oracle::canonical(forbidden_family().member(i).graph));
  EXPECT_EQ(got, brute);
  EXPECT_EQ(got, members);
}

}  // namespace
