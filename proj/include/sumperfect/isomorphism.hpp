#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sumperfect/graph.hpp"
#include "sumperfect/io.hpp"

namespace sumperfect {

/// Largest order accepted by canonical_key / is_isomorphic.
inline constexpr int kCanonicalEnvelope = 12;

/// Isomorphism-invariant byte string: the graph6 encoding (order prefix, upper-triangle bits)
/// of the lexicographically least relabeling reachable by the refinement search.
class CanonicalKey {
 public:
  CanonicalKey() = default;
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}

  const std::string& bytes() const { return bytes_; }
  int order() const { return bytes_.empty() ? 0 : bytes_[0] - 63; }
  Graph graph() const { return parse_graph6(bytes_); }

  auto operator<=>(const CanonicalKey&) const = default;

 private:
  std::string bytes_;
};

struct CanonicalForm {
  CanonicalKey key;
  std::vector<Vertex> label;  // label[v] = position of v in the canonical ordering
};

namespace detail {

// Ordered partition of the vertex set; cell order is derived from labeling-free data only,
// so it is preserved by every isomorphism.
using Partition = std::vector<VertexSet>;

inline void refine(const Graph& g, Partition& cells) {
  std::vector<std::uint32_t> sig;
  std::vector<Vertex> members;
  for (bool changed = true; changed;) {
    changed = false;
    const Partition snapshot = cells;
    const std::size_t k = snapshot.size();
    Partition next;
    next.reserve(g.order());
    for (const VertexSet cell : snapshot) {
      if (cell.size() == 1) {
        next.push_back(cell);
        continue;
      }
      members = cell.to_vector();
      sig.assign(members.size() * k, 0);
      for (std::size_t i = 0; i < members.size(); ++i)
        for (std::size_t c = 0; c < k; ++c)
          sig[i * k + c] = static_cast<std::uint32_t>((g.neighbors(members[i]) & snapshot[c]).size());
      std::vector<std::size_t> order(members.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      auto sig_less = [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(sig.begin() + a * k, sig.begin() + (a + 1) * k,
                                            sig.begin() + b * k, sig.begin() + (b + 1) * k);
      };
      std::stable_sort(order.begin(), order.end(), sig_less);
      VertexSet group;
      for (std::size_t i = 0; i < order.size(); ++i) {
        if (i > 0 && sig_less(order[i - 1], order[i])) {
          next.push_back(group);
          group = VertexSet();
          changed = true;
        }
        group.insert(members[order[i]]);
      }
      next.push_back(group);
    }
    cells = std::move(next);
  }
}

inline bool twins(const Graph& g, Vertex u, Vertex v) {
  return g.neighbors(u).without(v) == g.neighbors(v).without(u);
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    Partition root{g_.vertices()};
    if (n_ == 0) root.clear();
    refine(g_, root);
    search(root);
    CanonicalForm out;
    out.label = best_label_;
    out.key = CanonicalKey(emit_graph6(g_.relabel(best_label_)));
    return out;
  }

 private:
  void search(const Partition& cells) {
    if (cells.size() == static_cast<std::size_t>(n_)) {
      leaf(cells);
      return;
    }
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i)
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) target = i;

    std::vector<Vertex> tried;
    for (Vertex v : cells[target]) {
      if (std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twins(g_, u, v); })) continue;
      tried.push_back(v);
      Partition child;
      child.reserve(cells.size() + 1);
      child.insert(child.end(), cells.begin(), cells.begin() + target);
      child.push_back(VertexSet{v});
      child.push_back(cells[target].without(v));
      child.insert(child.end(), cells.begin() + target + 1, cells.end());
      refine(g_, child);
      search(child);
    }
  }

  void leaf(const Partition& cells) {
    std::vector<Vertex> inv(n_);
    for (int i = 0; i < n_; ++i) inv[i] = cells[i].first();
    // Column j holds adjacency of label j to labels 0..j-1, label 0 most significant.
    std::vector<std::uint64_t> code(n_);
    for (int j = 1; j < n_; ++j) {
      std::uint64_t col = 0;
      for (int i = 0; i < j; ++i) col = (col << 1) | (g_.adjacent(inv[i], inv[j]) ? 1U : 0U);
      code[j] = col;
    }
    if (best_label_.empty() || code < best_code_) {
      best_code_ = std::move(code);
      best_label_.assign(n_, 0);
      for (int i = 0; i < n_; ++i) best_label_[inv[i]] = i;
    }
  }

  const Graph& g_;
  int n_;
  std::vector<std::uint64_t> best_code_;
  std::vector<Vertex> best_label_;
};

}  // namespace detail

/// Canonical relabeling by individualization-refinement over an equitable partition,
/// pruning twin branches. Defined for every order; public entry points enforce the envelope.
inline CanonicalForm canonical_form_unchecked(const Graph& g) { return detail::CanonicalSearch(g).run(); }

inline CanonicalForm canonical_form(const Graph& g) {
  if (g.order() > kCanonicalEnvelope)
    throw std::invalid_argument("canonical form limited to " + std::to_string(kCanonicalEnvelope) + " vertices");
  return canonical_form_unchecked(g);
}

inline CanonicalKey canonical_key(const Graph& g) { return canonical_form(g).key; }

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.edge_count() != b.edge_count()) {
    if (a.order() > kCanonicalEnvelope || b.order() > kCanonicalEnvelope)
      throw std::invalid_argument("graph exceeds canonical envelope");
    return false;
  }
  return canonical_key(a) == canonical_key(b);
}

/// Lexicographically least vertex map a -> b preserving adjacency and non-adjacency.
inline std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  const int n = a.order();
  if (n != b.order() || a.edge_count() != b.edge_count() || a.degree_sequence() != b.degree_sequence())
    return std::nullopt;
  std::vector<Vertex> map(n, -1);
  VertexSet used;
  std::function<bool(int)> extend = [&](int i) {
    if (i == n) return true;
    for (Vertex c : b.vertices() - used) {
      if (b.degree(c) != a.degree(i)) continue;
      bool ok = true;
      for (int j = 0; j < i && ok; ++j) ok = a.adjacent(i, j) == b.adjacent(c, map[j]);
      if (!ok) continue;
      map[i] = c;
      used.insert(c);
      if (extend(i + 1)) return true;
      used.erase(c);
    }
    return false;
  };
  if (!extend(0)) return std::nullopt;
  return map;
}

/// Injective map from pattern vertices into host vertices inducing a copy of the pattern.
struct Embedding {
  std::vector<Vertex> map;

  VertexSet image() const {
    VertexSet s;
    for (Vertex v : map) s.insert(v);
    return s;
  }
  bool operator==(const Embedding&) const = default;
};

/// First induced copy of `pattern` in `host`, scanning vertex subsets in lexicographic order.
inline std::optional<Embedding> contains_induced(const Graph& host, const Graph& pattern) {
  const int k = pattern.order();
  if (k > host.order()) return std::nullopt;
  const int pattern_edges = pattern.edge_count();
  const int pattern_non_edges = k * (k - 1) / 2 - pattern_edges;
  const std::vector<int> pattern_degrees = pattern.degree_sequence();

  std::optional<Embedding> found;
  std::vector<Vertex> chosen;
  std::function<void(Vertex, VertexSet, int, int)> scan = [&](Vertex from, VertexSet s, int edges, int non_edges) {
    if (found) return;
    if (static_cast<int>(chosen.size()) == k) {
      const Graph sub = host.induced_subgraph(s);
      if (sub.degree_sequence() != pattern_degrees) return;
      if (auto iso = find_isomorphism(pattern, sub)) {
        Embedding e;
        for (Vertex p : *iso) e.map.push_back(chosen[p]);
        found = std::move(e);
      }
      return;
    }
    const int remaining = k - static_cast<int>(chosen.size());
    for (Vertex v = from; v <= host.order() - remaining && !found; ++v) {
      const int inside = (host.neighbors(v) & s).size();
      const int e = edges + inside;
      const int ne = non_edges + s.size() - inside;
      if (e > pattern_edges || ne > pattern_non_edges) continue;
      chosen.push_back(v);
      scan(v + 1, s.with(v), e, ne);
      chosen.pop_back();
    }
  };
  scan(0, VertexSet(), 0, 0);
  return found;
}

}  // namespace sumperfect

template <>
struct std::hash<sumperfect::CanonicalKey> {
  std::size_t operator()(const sumperfect::CanonicalKey& k) const noexcept {
    return std::hash<std::string>{}(k.bytes());
  }
};
