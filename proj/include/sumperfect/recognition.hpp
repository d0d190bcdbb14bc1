#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "sumperfect/family.hpp"
#include "sumperfect/graph.hpp"
#include "sumperfect/invariants.hpp"
#include "sumperfect/isomorphism.hpp"

namespace sumperfect {

struct ForbiddenCopy {
  int index = 0;  // family member H_index
  Embedding embedding;
};

struct DeficientSubgraph {
  VertexSet vertices;
};

/// Re-checkable certificate for a sum-perfection verdict.
struct Witness {
  bool verdict = true;
  std::variant<std::monostate, ForbiddenCopy, DeficientSubgraph, StableCliquePair> evidence;

  const ForbiddenCopy* forbidden_copy() const { return std::get_if<ForbiddenCopy>(&evidence); }
};

struct RecognitionOptions {
  bool certify_positive = false;  // attach a stable set and clique with |S| + |M| >= n
};

namespace detail {

// Edge count, degree histogram and triangle count of a graph on at most 7 vertices.
inline std::uint64_t small_fingerprint(std::span<const std::uint64_t> rows) {
  const int k = static_cast<int>(rows.size());
  std::uint64_t fp = 0;
  int twice_edges = 0;
  int triangles = 0;
  for (int i = 0; i < k; ++i) {
    const int d = std::popcount(rows[i]);
    twice_edges += d;
    fp += std::uint64_t{1} << (3 * d);
    for (std::uint64_t r = rows[i] & ~((std::uint64_t{2} << i) - 1); r; r &= r - 1) {
      const int j = std::countr_zero(r);
      triangles += std::popcount(rows[i] & rows[j] & ~((std::uint64_t{2} << j) - 1));
    }
  }
  return fp | (static_cast<std::uint64_t>(twice_edges / 2) << 24) | (static_cast<std::uint64_t>(triangles) << 32);
}

struct PatternBucket {
  int order = 0;
  std::unordered_map<std::uint64_t, std::vector<int>> by_fingerprint;  // -> family indices
  std::unordered_map<CanonicalKey, int> by_key;
};

class FamilyIndex {
 public:
  explicit FamilyIndex(const std::vector<FamilyMember>& members) {
    std::map<int, PatternBucket> buckets;
    for (const auto& m : members) {
      auto& b = buckets[m.graph.order()];
      b.order = m.graph.order();
      std::vector<std::uint64_t> rows(m.graph.order());
      for (int v = 0; v < m.graph.order(); ++v) rows[v] = m.graph.row(v);
      b.by_fingerprint[small_fingerprint(rows)].push_back(m.index);
      b.by_key.emplace(m.key, m.index);
      graphs_.emplace(m.index, m.graph);
    }
    for (auto& [order, b] : buckets) buckets_.push_back(std::move(b));
  }

  const std::vector<PatternBucket>& buckets() const { return buckets_; }
  const Graph& pattern(int index) const { return graphs_.at(index); }

 private:
  std::vector<PatternBucket> buckets_;
  std::map<int, Graph> graphs_;
};

// Scans k-subsets of `g` in lexicographic order for induced copies of the bucket's patterns.
// `on_hit(index, subset_vertices)` returns true to stop.
// With `through_last`, only subsets containing vertex n-1 are scanned.
template <typename OnHit>
bool scan_bucket(const Graph& g, const PatternBucket& bucket, bool through_last, OnHit&& on_hit) {
  const int k = bucket.order;
  if (k > g.order() || k == 0) return false;
  const int n = g.order();
  std::array<Vertex, kMaxVertices> chosen{};
  std::array<std::uint64_t, kMaxVertices> rows{};
  bool stop = false;
  auto rec = [&](auto&& self, int depth, Vertex from) -> void {
    if (depth == k) {
      auto it = bucket.by_fingerprint.find(small_fingerprint(std::span(rows.data(), k)));
      if (it == bucket.by_fingerprint.end()) return;
      const Graph sub = Graph::from_rows(k, std::span<const std::uint64_t>(rows.data(), k));
      auto hit = bucket.by_key.find(canonical_key(sub));
      if (hit == bucket.by_key.end()) return;
      stop = on_hit(hit->second, std::span<const Vertex>(chosen.data(), k));
      return;
    }
    Vertex lo = from, hi = n - (k - depth);
    if (through_last) {
      if (depth == k - 1) lo = n - 1;
      else hi = std::min(hi, n - 2);
    }
    for (Vertex v = lo; v <= hi && !stop; ++v) {
      std::uint64_t row = 0;
      for (int i = 0; i < depth; ++i) {
        if (g.adjacent(v, chosen[i])) {
          row |= std::uint64_t{1} << i;
          rows[i] |= std::uint64_t{1} << depth;
        } else {
          rows[i] &= ~(std::uint64_t{1} << depth);
        }
      }
      rows[depth] = row;
      chosen[depth] = v;
      self(self, depth + 1, v + 1);
    }
  };
  rec(rec, 0, 0);
  return stop;
}

inline ForbiddenCopy make_copy(const Graph& g, const Graph& pattern, int index, std::span<const Vertex> subset) {
  VertexSet s;
  for (Vertex v : subset) s.insert(v);
  auto iso = find_isomorphism(pattern, g.induced_subgraph(s));
  assert(iso.has_value());
  ForbiddenCopy c;
  c.index = index;
  for (Vertex p : *iso) c.embedding.map.push_back(subset[p]);
  return c;
}

inline const FamilyIndex& full_family_index() {
  static const FamilyIndex index(forbidden_family().members());
  return index;
}

}  // namespace detail

/// First induced copy of any listed member (smaller members first, then lexicographic subsets).
/// With `through_last`, only copies using vertex n-1 are considered.
inline std::optional<ForbiddenCopy> find_member_copy(const Graph& g, const detail::FamilyIndex& index,
                                                     bool through_last = false) {
  std::optional<ForbiddenCopy> found;
  for (const auto& bucket : index.buckets()) {
    detail::scan_bucket(g, bucket, through_last, [&](int i, std::span<const Vertex> subset) {
      found = detail::make_copy(g, index.pattern(i), i, subset);
      return true;
    });
    if (found) break;
  }
  return found;
}

/// Every induced copy of every listed member, one per vertex subset.
inline std::vector<ForbiddenCopy> find_all_member_copies(const Graph& g, const detail::FamilyIndex& index) {
  std::vector<ForbiddenCopy> out;
  for (const auto& bucket : index.buckets())
    detail::scan_bucket(g, bucket, false, [&](int i, std::span<const Vertex> subset) {
      out.push_back(detail::make_copy(g, index.pattern(i), i, subset));
      return false;
    });
  return out;
}

/// Sum-perfection by searching for an induced member of the 27-graph family; O(n^7).
inline Witness is_sum_perfect(const Graph& g, RecognitionOptions opts = {}) {
  Witness w;
  if (auto copy = find_member_copy(g, detail::full_family_index())) {
    w.verdict = false;
    w.evidence = std::move(*copy);
    return w;
  }
  if (opts.certify_positive) w.evidence = StableCliquePair{stability_number(g).witness, clique_number(g).witness};
  return w;
}

inline std::vector<ForbiddenCopy> all_forbidden_copies(const Graph& g) {
  return find_all_member_copies(g, detail::full_family_index());
}

/// Definitional route: the witness names an induced subgraph with positive deficit.
inline Witness is_sum_perfect_by_definition(const Graph& g) {
  Witness w;
  if (auto s = find_deficient_subgraph(g)) {
    w.verdict = false;
    w.evidence = DeficientSubgraph{*s};
  }
  return w;
}

/// Checks that a witness certifies its verdict for `g`.
inline bool witness_valid(const Graph& g, const Witness& w) {
  return std::visit(
      [&](const auto& e) -> bool {
        using T = std::decay_t<decltype(e)>;
        if constexpr (std::is_same_v<T, ForbiddenCopy>) {
          if (w.verdict || e.index < 1 || e.index > 27) return false;
          const Graph& h = forbidden_family().member(e.index).graph;
          if (e.embedding.map.size() != static_cast<std::size_t>(h.order())) return false;
          if (e.embedding.image().size() != h.order()) return false;
          for (int i = 0; i < h.order(); ++i)
            for (int j = 0; j < i; ++j)
              if (h.adjacent(i, j) != g.adjacent(e.embedding.map[i], e.embedding.map[j])) return false;
          return true;
        } else if constexpr (std::is_same_v<T, DeficientSubgraph>) {
          return !w.verdict && e.vertices.subset_of(g.vertices()) && deficit(g.induced_subgraph(e.vertices)) > 0;
        } else if constexpr (std::is_same_v<T, StableCliquePair>) {
          return w.verdict && validate_pair(g, e) && e.stable.size() + e.clique.size() >= g.order();
        } else {
          return w.verdict;
        }
      },
      w.evidence);
}

/// {P4, C4, 2K2}-freeness.
inline bool is_p4_c4_2k2_free(const Graph& g) {
  static const std::vector<Graph> patterns = {path_graph(4), cycle_graph(4), disjoint_copies(path_graph(2), 2)};
  return std::none_of(patterns.begin(), patterns.end(),
                      [&](const Graph& p) { return contains_induced(g, p).has_value(); });
}

/// Elimination test: repeatedly strip an isolated or dominating vertex.
inline bool is_threshold(const Graph& g) {
  VertexSet rest = g.vertices();
  bool progress = true;
  while (!rest.empty() && progress) {
    progress = false;
    for (Vertex v : rest) {
      const VertexSet nb = g.neighbors(v) & rest;
      if (nb.empty() || nb == rest.without(v)) {
        rest.erase(v);
        progress = true;
        break;
      }
    }
  }
  const bool threshold = rest.empty();
  assert(threshold == is_p4_c4_2k2_free(g));
  return threshold;
}

struct SplitPartition {
  VertexSet clique;
  VertexSet stable;
};

/// Clique/stable partition from the degree-sequence splittance test, if the graph is split.
inline std::optional<SplitPartition> is_split(const Graph& g) {
  const int n = g.order();
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  int m = 0;
  for (int i = 0; i < n; ++i)
    if (g.degree(order[i]) >= i) m = i + 1;
  long head = 0, tail = 0;
  for (int i = 0; i < n; ++i) (i < m ? head : tail) += g.degree(order[i]);
  if (head != static_cast<long>(m) * (m - 1) + tail) return std::nullopt;
  SplitPartition p;
  for (int i = 0; i < n; ++i) (i < m ? p.clique : p.stable).insert(order[i]);
  return p;
}

/// Some vertex whose deletion leaves a threshold graph.
inline std::optional<Vertex> is_apex_threshold(const Graph& g) {
  for (Vertex v : g.vertices())
    if (is_threshold(g.delete_vertex(v))) return v;
  return std::nullopt;
}

/// Every non-empty induced subgraph attains alpha + omega = |V| + 1.
inline bool check_threshold_theorem(const Graph& g) {
  detail::check_envelope(g, kProductScanEnvelope, "check_threshold_theorem");
  const auto adj = detail::rows_of(g);
  const auto co = detail::complement_rows(g);
  const std::uint64_t all = g.vertices().bits();
  for (std::uint64_t s = all; s; s = (s - 1) & all)
    if (detail::max_clique_in(adj, s) + detail::max_clique_in(co, s) != std::popcount(s) + 1) return false;
  return true;
}

}  // namespace sumperfect
