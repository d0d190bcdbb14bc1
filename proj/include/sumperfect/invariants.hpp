#pragma once

#include <array>
#include <bit>
#include <functional>
#include <optional>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "sumperfect/graph.hpp"

namespace sumperfect {

/// Size of an optimum vertex set together with the lexicographically least optimal set.
struct SetResult {
  int size = 0;
  VertexSet witness;
};

struct StableCliquePair {
  VertexSet stable;
  VertexSet clique;
};

struct InvariantReport {
  int n = 0;
  int alpha = 0;
  int omega = 0;
  int tau = 0;
  int nu = 0;
  long triangles = 0;
  int deficit = 0;
  bool operator==(const InvariantReport&) const = default;
};

inline constexpr int kSubsetScanEnvelope = 20;
inline constexpr int kProductScanEnvelope = 16;

namespace detail {

using Rows = std::array<std::uint64_t, kMaxVertices>;

inline Rows rows_of(const Graph& g) {
  Rows r{};
  for (int v = 0; v < g.order(); ++v) r[v] = g.row(v);
  return r;
}

inline Rows complement_rows(const Graph& g) { return rows_of(g.complement()); }

// Maximum clique inside `mask` by branch and bound with greedy colour bounds.
class CliqueSearch {
 public:
  explicit CliqueSearch(const Rows& adj) : adj_(adj) {}

  int solve(std::uint64_t mask, int lower_bound = 0) {
    best_ = lower_bound;
    best_set_ = 0;
    if (std::popcount(mask) < 8) {
      enumerate(mask);
    } else {
      expand(0, 0, mask);
    }
    return best_;
  }

  std::uint64_t best_set() const { return best_set_; }

 private:
  void enumerate(std::uint64_t mask) {
    // Submasks of `mask`, checked directly for the clique property.
    for (std::uint64_t s = mask;; s = (s - 1) & mask) {
      const int sz = std::popcount(s);
      if (sz > best_) {
        bool clique = true;
        for (std::uint64_t r = s; r && clique; r &= r - 1) {
          const int v = std::countr_zero(r);
          clique = (s & ~(std::uint64_t{1} << v) & ~adj_[v]) == 0;
        }
        if (clique) {
          best_ = sz;
          best_set_ = s;
        }
      }
      if (s == 0) break;
    }
  }

  void expand(std::uint64_t current, int current_size, std::uint64_t cand) {
    std::array<int, kMaxVertices> order;
    std::array<int, kMaxVertices> colour;
    int count = 0;
    std::uint64_t uncoloured = cand;
    for (int k = 1; uncoloured; ++k) {
      std::uint64_t q = uncoloured;
      while (q) {
        const int v = std::countr_zero(q);
        q &= ~adj_[v] & ~(std::uint64_t{1} << v);
        uncoloured &= ~(std::uint64_t{1} << v);
        order[count] = v;
        colour[count++] = k;
      }
    }
    for (int i = count - 1; i >= 0; --i) {
      if (current_size + colour[i] <= best_) return;
      const int v = order[i];
      const std::uint64_t vb = std::uint64_t{1} << v;
      const std::uint64_t next = cand & adj_[v];
      if (next == 0) {
        if (current_size + 1 > best_) {
          best_ = current_size + 1;
          best_set_ = current | vb;
        }
      } else {
        expand(current | vb, current_size + 1, next);
      }
      cand &= ~vb;
    }
  }

  const Rows& adj_;
  int best_ = 0;
  std::uint64_t best_set_ = 0;
};

inline int max_clique_in(const Rows& adj, std::uint64_t mask) { return CliqueSearch(adj).solve(mask); }

// Lexicographically least maximum clique inside `mask`.
inline SetResult least_max_clique(const Rows& adj, std::uint64_t mask) {
  SetResult r;
  r.size = max_clique_in(adj, mask);
  std::uint64_t cand = mask;
  int need = r.size;
  while (need > 0) {
    const int v = std::countr_zero(cand);
    const std::uint64_t rest = cand & adj[v] & ~((std::uint64_t{2} << v) - 1);
    if (1 + max_clique_in(adj, rest) >= need) {
      r.witness.insert(v);
      cand = rest;
      --need;
    } else {
      cand &= ~(std::uint64_t{1} << v);
    }
  }
  return r;
}

inline bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> stack;
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v)) {
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        } else if (side[u] == side[v]) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace detail

inline bool is_bipartite(const Graph& g) { return detail::is_bipartite(g); }

inline SetResult clique_number(const Graph& g) {
  return detail::least_max_clique(detail::rows_of(g), g.vertices().bits());
}

inline SetResult stability_number(const Graph& g) {
  return detail::least_max_clique(detail::complement_rows(g), g.vertices().bits());
}

/// Size-only variants for hot loops.
inline int omega(const Graph& g) { return detail::max_clique_in(detail::rows_of(g), g.vertices().bits()); }
inline int alpha(const Graph& g) { return detail::max_clique_in(detail::complement_rows(g), g.vertices().bits()); }

inline int vertex_cover_number(const Graph& g) { return g.order() - alpha(g); }

namespace detail {

inline int bipartite_matching(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex u : g.neighbors(v))
        if (side[u] < 0) {
          side[u] = 1 - side[v];
          stack.push_back(u);
        }
    }
  }
  std::vector<int> mate(g.order(), -1);
  std::vector<char> seen;
  std::function<bool(Vertex)> augment = [&](Vertex v) {
    for (Vertex u : g.neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = 1;
      if (mate[u] < 0 || augment(mate[u])) {
        mate[u] = v;
        return true;
      }
    }
    return false;
  };
  int size = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (side[v] != 0) continue;
    seen.assign(g.order(), 0);
    if (augment(v)) ++size;
  }
  return size;
}

inline int general_matching(const Graph& g) {
  std::unordered_map<std::uint64_t, int> memo;
  std::function<int(std::uint64_t)> best = [&](std::uint64_t mask) -> int {
    // Drop vertices with no neighbour left in the mask.
    std::uint64_t live = 0;
    for (std::uint64_t r = mask; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (g.row(v) & mask) live |= std::uint64_t{1} << v;
    }
    if (std::popcount(live) < 2) return 0;
    if (auto it = memo.find(live); it != memo.end()) return it->second;
    const int v = std::countr_zero(live);
    const std::uint64_t rest = live & ~(std::uint64_t{1} << v);
    int result = best(rest);
    if (result < std::popcount(live) / 2) {
      for (std::uint64_t r = g.row(v) & rest; r; r &= r - 1) {
        const int u = std::countr_zero(r);
        result = std::max(result, 1 + best(rest & ~(std::uint64_t{1} << u)));
        if (result == std::popcount(live) / 2) break;
      }
    }
    memo.emplace(live, result);
    return result;
  };
  return best(g.vertices().bits());
}

}  // namespace detail

/// Maximum matching size; augmenting paths on bipartite graphs, memoized branching otherwise.
inline int matching_number(const Graph& g) {
  return detail::is_bipartite(g) ? detail::bipartite_matching(g) : detail::general_matching(g);
}

inline long triangle_count(const Graph& g) {
  long t = 0;
  for (int u = 0; u < g.order(); ++u) {
    const std::uint64_t above_u = g.row(u) & ~VertexSet::range(u + 1).bits();
    for (std::uint64_t r = above_u; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      t += std::popcount(above_u & g.row(v) & ~VertexSet::range(v + 1).bits());
    }
  }
  return t;
}

/// n - alpha - omega; never below -1.
inline int deficit(const Graph& g) { return g.order() - alpha(g) - omega(g); }

inline InvariantReport invariant_report(const Graph& g) {
  InvariantReport r;
  r.n = g.order();
  r.alpha = alpha(g);
  r.omega = omega(g);
  r.tau = r.n - r.alpha;
  r.nu = matching_number(g);
  r.triangles = triangle_count(g);
  r.deficit = r.n - r.alpha - r.omega;
  return r;
}

namespace detail {

// Depth-first scan of vertex subsets, largest first, each visited once (deletions in increasing
// vertex order). Any T within S has deficit at most min(tau(S), |S| - omega(S)) - 1, which
// bounds whole subtrees.
class DeficitScan {
 public:
  explicit DeficitScan(const Graph& g) : adj_(rows_of(g)), co_(complement_rows(g)), n_(g.order()) {}

  // Largest deficit over non-empty subsets. With `stop_above` set, returns as soon as some
  // deficit exceeds it, and otherwise only a value no larger than it is guaranteed.
  int run(std::optional<int> stop_above = std::nullopt) {
    stop_above_ = stop_above.value_or(kMaxVertices);
    floor_ = stop_above.value_or(-1);
    best_ = -1;
    best_set_ = 0;
    if (n_ > 0) visit(VertexSet::range(n_).bits(), 0);
    return best_;
  }

  std::uint64_t best_set() const { return best_set_; }

 private:
  bool visit(std::uint64_t s, int from) {
    const int size = std::popcount(s);
    const int a = max_clique_in(co_, s);
    const int w = max_clique_in(adj_, s);
    const int d = size - a - w;
    if (d > best_) {
      best_ = d;
      best_set_ = s;
      if (best_ > stop_above_) return true;
    }
    if (std::min(size - a, size - w) - 1 <= std::max(best_, floor_) || size <= 1) return false;
    for (std::uint64_t r = s & ~((std::uint64_t{1} << from) - 1); r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if (visit(s & ~(std::uint64_t{1} << v), v + 1)) return true;
    }
    return false;
  }

  Rows adj_, co_;
  int n_;
  int stop_above_ = 0;
  int floor_ = -1;
  int best_ = -1;
  std::uint64_t best_set_ = 0;
};

inline void check_envelope(const Graph& g, int limit, const char* what) {
  if (g.order() > limit)
    throw std::invalid_argument(std::string(what) + " limited to " + std::to_string(limit) + " vertices");
}

}  // namespace detail

/// Largest deficit over all non-empty induced subgraphs (-1 for the 0-vertex graph).
inline int max_deficiency(const Graph& g) {
  detail::check_envelope(g, kSubsetScanEnvelope, "max_deficiency");
  return detail::DeficitScan(g).run();
}

/// Some induced subgraph with positive deficit, if there is one.
inline std::optional<VertexSet> find_deficient_subgraph(const Graph& g) {
  detail::check_envelope(g, kSubsetScanEnvelope, "deficient subgraph scan");
  detail::DeficitScan scan(g);
  if (scan.run(0) > 0) return VertexSet(scan.best_set());
  return std::nullopt;
}

inline bool is_sum_perfect_definitional(const Graph& g) { return !find_deficient_subgraph(g).has_value(); }

/// Every non-empty induced subgraph H satisfies alpha(H) * omega(H) >= |V(H)|.
inline bool is_perfect_lovasz(const Graph& g) {
  detail::check_envelope(g, kProductScanEnvelope, "is_perfect_lovasz");
  const auto adj = detail::rows_of(g);
  const auto co = detail::complement_rows(g);
  const std::uint64_t all = g.vertices().bits();
  for (std::uint64_t s = all; s; s = (s - 1) & all) {
    const int size = std::popcount(s);
    if (detail::max_clique_in(adj, s) * detail::max_clique_in(co, s) < size) return false;
  }
  return true;
}

inline bool validate_pair(const Graph& g, const StableCliquePair& p) {
  if (!p.stable.subset_of(g.vertices()) || !p.clique.subset_of(g.vertices())) return false;
  return is_stable(g, p.stable) && is_clique(g, p.clique) && (p.stable & p.clique).size() <= 1;
}

}  // namespace sumperfect
