#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sumperfect/vertex_set.hpp"

namespace sumperfect {

using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1, n <= 64, one adjacency word per vertex.
///
/// Instances are immutable; every transformation returns a new graph.
class Graph {
 public:
  Graph() = default;

  static Graph empty(int n) {
    check_order(n);
    Graph g;
    g.n_ = n;
    return g;
  }

  static Graph from_edge_list(int n, std::span<const Edge> edges) {
    Graph g = empty(n);
    for (auto [u, v] : edges) {
      if (u < 0 || v < 0 || u >= n || v >= n) {
        throw std::out_of_range("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") out of range for n=" + std::to_string(n));
      }
      if (u == v) throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
      g.adj_[u] |= VertexSet::bit(v);
      g.adj_[v] |= VertexSet::bit(u);
    }
    return g;
  }
  static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  /// Rows must already be symmetric, loop-free and confined to the first n bits.
  static Graph from_rows(int n, std::span<const std::uint64_t> rows) {
    check_order(n);
    if (rows.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("row count differs from n");
    Graph g;
    g.n_ = n;
    const std::uint64_t inside = VertexSet::range(n).bits();
    for (int v = 0; v < n; ++v) {
      if (rows[v] & ~inside) throw std::invalid_argument("adjacency bit outside vertex range");
      if ((rows[v] >> v) & 1U) throw std::invalid_argument("loop at vertex " + std::to_string(v));
      g.adj_[v] = rows[v];
    }
    for (int v = 0; v < n; ++v)
      for (Vertex u : VertexSet(rows[v]))
        if (!((rows[u] >> v) & 1U)) throw std::invalid_argument("adjacency is not symmetric");
    return g;
  }

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex v) const { return VertexSet(adj_[v]); }
  VertexSet closed_neighbors(Vertex v) const { return neighbors(v).with(v); }
  std::uint64_t row(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return neighbors(v).size(); }
  bool adjacent(Vertex u, Vertex v) const { return (adj_[u] >> v) & 1U; }

  int edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += std::popcount(adj_[v]);
    return twice / 2;
  }

  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
      for (Vertex v : VertexSet(adj_[u] & ~VertexSet::range(u + 1).bits())) out.emplace_back(u, v);
    return out;
  }

  std::vector<int> degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
  }

  Graph complement() const {
    Graph g;
    g.n_ = n_;
    const std::uint64_t all = VertexSet::range(n_).bits();
    for (int v = 0; v < n_; ++v) g.adj_[v] = ~adj_[v] & all & ~VertexSet::bit(v);
    return g;
  }

  /// Vertices of `s` are relabeled 0..|s|-1 in ascending original order.
  Graph induced_subgraph(VertexSet s) const {
    if (!s.subset_of(vertices())) throw std::out_of_range("vertex set exceeds graph order");
    Graph g;
    g.n_ = s.size();
    int i = 0;
    for (Vertex v : s) g.adj_[i++] = compress(adj_[v], s.bits());
    return g;
  }

  Graph delete_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return induced_subgraph(vertices().without(v));
  }

  /// Appends vertex n adjacent to `nbrs`.
  Graph add_vertex(VertexSet nbrs) const {
    if (n_ >= kMaxVertices) throw std::length_error("vertex capacity exceeded");
    if (!nbrs.subset_of(vertices())) throw std::out_of_range("neighborhood exceeds graph order");
    Graph g = *this;
    for (Vertex u : nbrs) g.adj_[u] |= VertexSet::bit(n_);
    g.adj_[n_] = nbrs.bits();
    ++g.n_;
    return g;
  }

  /// Relabels vertex v as perm[v].
  Graph relabel(std::span<const Vertex> perm) const {
    if (perm.size() != static_cast<std::size_t>(n_)) throw std::invalid_argument("permutation size differs from n");
    Graph g;
    g.n_ = n_;
    for (int v = 0; v < n_; ++v)
      for (Vertex u : neighbors(v)) g.adj_[perm[v]] |= VertexSet::bit(perm[u]);
    return g;
  }

  friend Graph disjoint_union(const Graph& a, const Graph& b) {
    if (a.n_ + b.n_ > kMaxVertices) throw std::length_error("disjoint union exceeds 64 vertices");
    Graph g = a;
    g.n_ = a.n_ + b.n_;
    for (int v = 0; v < b.n_; ++v) g.adj_[a.n_ + v] = b.adj_[v] << a.n_;
    return g;
  }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && std::equal(adj_.begin(), adj_.begin() + n_, o.adj_.begin());
  }

 private:
  static void check_order(int n) {
    if (n < 0 || n > kMaxVertices) throw std::length_error("graph order " + std::to_string(n) + " outside [0, 64]");
  }

  // Gathers the bits of `word` selected by `mask` into the low bits (software pext).
  static std::uint64_t compress(std::uint64_t word, std::uint64_t mask) {
    std::uint64_t out = 0;
    int k = 0;
    for (std::uint64_t m = mask; m; m &= m - 1, ++k)
      if (word & (m & -m)) out |= std::uint64_t{1} << k;
    return out;
  }

  int n_ = 0;
  std::array<std::uint64_t, kMaxVertices> adj_{};
};

inline Graph complement(const Graph& g) { return g.complement(); }
inline Graph induced_subgraph(const Graph& g, VertexSet s) { return g.induced_subgraph(s); }
inline Graph delete_vertex(const Graph& g, Vertex v) { return g.delete_vertex(v); }

inline bool is_stable(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (!(g.neighbors(v) & s).empty()) return false;
  return true;
}

inline bool is_clique(const Graph& g, VertexSet s) {
  for (Vertex v : s)
    if (!s.without(v).subset_of(g.neighbors(v))) return false;
  return true;
}

// Named constructors used throughout the tests and the family module.

inline Graph complete_graph(int n) { return Graph::empty(n).complement(); }

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e);
}

inline Graph cycle_graph(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, e);
}

inline Graph complete_bipartite(int a, int b) {
  std::vector<Edge> e;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) e.emplace_back(i, a + j);
  return Graph::from_edge_list(a + b, e);
}

inline Graph disjoint_copies(const Graph& g, int copies) {
  Graph out = Graph::empty(0);
  for (int i = 0; i < copies; ++i) out = disjoint_union(out, g);
  return out;
}

}  // namespace sumperfect
