#pragma once

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "sumperfect/graph.hpp"
#include "sumperfect/invariants.hpp"
#include "sumperfect/isomorphism.hpp"

namespace sumperfect {

struct FamilyMember {
  int index = 0;  // 1-based, H1..H27
  std::string name;
  Graph graph;
  CanonicalKey key;
};

/// The 27 minimal obstructions to sum-perfection, in figure order.
class ForbiddenFamily {
 public:
  explicit ForbiddenFamily(std::vector<FamilyMember> members) : members_(std::move(members)) {}

  const std::vector<FamilyMember>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  const FamilyMember& member(int index) const {
    if (index < 1 || index > static_cast<int>(members_.size())) throw std::out_of_range("family index");
    return members_[index - 1];
  }

 private:
  std::vector<FamilyMember> members_;
};

namespace detail {

struct DrawnGraph {
  const char* name;
  int order;
  std::vector<Edge> edges;
};

// Edge lists as printed in the figure, vertex labels unchanged.
inline const std::vector<DrawnGraph>& drawn_graphs() {
  static const std::vector<DrawnGraph> drawn = {
      {"C5", 5, {{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}}},
      {"3K2", 6, {{0, 3}, {1, 4}, {2, 5}}},
      {"P4+K2", 6, {{0, 3}, {0, 5}, {1, 4}, {2, 5}}},
      {"S_{1,2,2}", 6, {{0, 3}, {0, 5}, {1, 4}, {1, 5}, {2, 5}}},
      {"C4+K2", 6, {{0, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}}},
      {"P6", 6, {{0, 3}, {0, 5}, {1, 4}, {1, 5}, {2, 4}}},
      {"H7", 6, {{0, 3}, {0, 5}, {1, 4}, {1, 5}, {2, 4}, {2, 5}}},
      {"C6", 6, {{0, 3}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {2, 5}}},
      {"H9", 6, {{0, 3}, {0, 4}, {0, 5}, {1, 4}, {1, 5}, {2, 5}}},
      {"H10", 6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 5}, {2, 4}, {2, 5}}},
      {"H11", 6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 5}}},
      {"K3,3-e", 6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 4}, {2, 5}}},
      {"K3,3", 6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}}},
  };
  return drawn;
}

inline const DrawnGraph& drawn_h26() {
  static const DrawnGraph h26 = {
      "H26", 7, {{0, 3}, {0, 5}, {0, 6}, {1, 4}, {1, 5}, {2, 4}, {2, 6}, {4, 5}, {4, 6}, {5, 6}}};
  return h26;
}

inline FamilyMember make_member(int index, std::string name, Graph g) {
  CanonicalKey key = canonical_key(g);
  return FamilyMember{index, std::move(name), std::move(g), std::move(key)};
}

}  // namespace detail

/// H1..H13 and H26 from their drawings; H14..H25 and H27 as complements of H2..H13 and H26.
inline ForbiddenFamily build_family() {
  const auto& drawn = detail::drawn_graphs();
  std::vector<FamilyMember> members;
  members.reserve(27);
  for (std::size_t i = 0; i < drawn.size(); ++i)
    members.push_back(detail::make_member(static_cast<int>(i) + 1, drawn[i].name,
                                          Graph::from_edge_list(drawn[i].order, drawn[i].edges)));
  for (int i = 14; i <= 25; ++i)
    members.push_back(detail::make_member(i, "H" + std::to_string(i), members[i - 13].graph.complement()));
  const auto& h26 = detail::drawn_h26();
  Graph g26 = Graph::from_edge_list(h26.order, h26.edges);
  Graph g27 = g26.complement();
  members.push_back(detail::make_member(26, h26.name, std::move(g26)));
  members.push_back(detail::make_member(27, "H27", std::move(g27)));
  return ForbiddenFamily(std::move(members));
}

/// Shared immutable instance.
inline const ForbiddenFamily& forbidden_family() {
  static const ForbiddenFamily family = build_family();
  return family;
}

/// H2..H25: the family without C5 and the two 7-vertex members.
inline std::vector<FamilyMember> build_conjecture_family() {
  const auto& all = forbidden_family().members();
  return {all.begin() + 1, all.begin() + 25};
}

/// All 6-vertex bipartite graphs with a perfect matching, grown from 3K2 on sides {0,1,2}, {3,4,5}.
inline std::vector<Graph> enumerate_bipartite_pm6() {
  const std::vector<Edge> matching = {{0, 3}, {1, 4}, {2, 5}};
  std::vector<Edge> extra;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (i != j) extra.emplace_back(i, 3 + j);

  std::vector<Graph> out;
  std::set<CanonicalKey> seen;
  for (unsigned mask = 0; mask < (1U << extra.size()); ++mask) {
    std::vector<Edge> edges = matching;
    for (std::size_t b = 0; b < extra.size(); ++b)
      if (mask & (1U << b)) edges.push_back(extra[b]);
    Graph g = Graph::from_edge_list(6, edges);
    if (!is_bipartite(g) || matching_number(g) != 3) continue;
    if (seen.insert(canonical_key(g)).second) out.push_back(std::move(g));
  }
  return out;
}

struct MemberCheck {
  int index = 0;
  std::string name;
  int alpha = 0;
  int omega = 0;
  bool deficit_is_one = false;
  bool deletions_sum_perfect = false;
  bool alpha_omega_deletion_invariant = false;
  bool alpha_omega_at_most_three = false;

  bool passed() const {
    return deficit_is_one && deletions_sum_perfect && alpha_omega_deletion_invariant && alpha_omega_at_most_three;
  }
};

struct FamilyReport {
  std::vector<MemberCheck> members;
  bool passed() const {
    return std::all_of(members.begin(), members.end(), [](const MemberCheck& m) { return m.passed(); });
  }
};

inline MemberCheck check_member(const FamilyMember& m) {
  MemberCheck c;
  c.index = m.index;
  c.name = m.name;
  c.alpha = alpha(m.graph);
  c.omega = omega(m.graph);
  c.deficit_is_one = m.graph.order() - c.alpha - c.omega == 1;
  c.deletions_sum_perfect = true;
  c.alpha_omega_deletion_invariant = true;
  for (Vertex v : m.graph.vertices()) {
    const Graph h = m.graph.delete_vertex(v);
    c.deletions_sum_perfect = c.deletions_sum_perfect && is_sum_perfect_definitional(h);
    c.alpha_omega_deletion_invariant = c.alpha_omega_deletion_invariant && alpha(h) == c.alpha && omega(h) == c.omega;
  }
  c.alpha_omega_at_most_three = std::max(c.alpha, c.omega) <= 3;
  return c;
}

/// Per-member minimality checks: deficit 1, sum-perfect deletions, deletion-stable alpha and
/// omega, and max(alpha, omega) <= 3.
inline FamilyReport verify_family(const ForbiddenFamily& f) {
  FamilyReport r;
  for (const auto& m : f.members()) r.members.push_back(check_member(m));
  return r;
}

}  // namespace sumperfect
