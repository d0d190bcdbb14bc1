#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sumperfect/family.hpp"
#include "sumperfect/graph.hpp"
#include "sumperfect/invariants.hpp"
#include "sumperfect/io.hpp"
#include "sumperfect/isomorphism.hpp"
#include "sumperfect/recognition.hpp"

namespace sumperfect {

/// Largest order produced by the built-in enumerator.
inline constexpr int kEnumerationEnvelope = 10;

// ---------------------------------------------------------------------------------------------
// Enumeration by canonical augmentation

namespace detail {

// Children of `parent` (one new vertex n over every neighbourhood) whose new vertex passes the
// canonical-deletion test, deduplicated and sorted by key.
inline std::vector<std::pair<CanonicalKey, Graph>> canonical_children(const Graph& parent,
                                                                      const CanonicalKey& parent_key) {
  const int k = parent.order();
  std::map<CanonicalKey, Graph> accepted;
  for (std::uint64_t nbrs = 0; nbrs < (std::uint64_t{1} << k); ++nbrs) {
    Graph child = parent.add_vertex(VertexSet(nbrs));
    CanonicalForm form = canonical_form_unchecked(child);
    if (accepted.count(form.key)) continue;
    const Vertex last = static_cast<Vertex>(std::find(form.label.begin(), form.label.end(), k) - form.label.begin());
    if (last != k) {
      if (child.degree(last) != child.degree(k)) continue;
      if (canonical_form_unchecked(child.delete_vertex(last)).key != parent_key) continue;
    }
    accepted.emplace(std::move(form.key), std::move(child));
  }
  return {std::make_move_iterator(accepted.begin()), std::make_move_iterator(accepted.end())};
}

template <typename Visit>
void augment_dfs(const Graph& g, const CanonicalKey& key, int max_n, Visit& visit) {
  if (!visit(g, key) || g.order() >= max_n) return;
  for (const auto& [child_key, child] : canonical_children(g, key)) augment_dfs(child, child_key, max_n, visit);
}

inline void check_enumeration_order(int max_n) {
  if (max_n < 0 || max_n > kEnumerationEnvelope)
    throw std::invalid_argument("built-in enumeration limited to " + std::to_string(kEnumerationEnvelope) +
                                " vertices; supply a graph6 stream for larger orders");
}

}  // namespace detail

/// Visits one representative of every isomorphism class with 1..max_n vertices, depth first.
/// `visit(graph, key)` returns false to skip the graph's descendants; pruning is sound whenever
/// the skipped property is hereditary, since every class is reached from its canonical parent.
template <typename Visit>
void for_each_graph(int max_n, Visit visit) {
  detail::check_enumeration_order(max_n);
  if (max_n == 0) return;
  const Graph k1 = Graph::empty(1);
  detail::augment_dfs(k1, canonical_key(k1), max_n, visit);
}

/// All non-isomorphic graphs on exactly n vertices, sorted by canonical key.
inline std::vector<Graph> enumerate_graphs(int n) {
  detail::check_enumeration_order(n);
  if (n == 0) return {Graph::empty(0)};
  std::vector<std::pair<CanonicalKey, Graph>> found;
  for_each_graph(n, [&](const Graph& g, const CanonicalKey& key) {
    if (g.order() == n) found.emplace_back(key, g);
    return true;
  });
  std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

// ---------------------------------------------------------------------------------------------
// Batched, checkpointable runs

/// Output of one batch: graphs it reported, and how many graphs it visited per order.
struct BatchResult {
  std::vector<Graph> graphs;
  std::map<int, long> visited;
  std::map<std::string, long> counters;

  void merge(const BatchResult& o) {
    graphs.insert(graphs.end(), o.graphs.begin(), o.graphs.end());
    for (auto [k, v] : o.visited) visited[k] += v;
    for (const auto& [k, v] : o.counters) counters[k] += v;
  }
};

struct RunOptions {
  int jobs = 1;
  std::string checkpoint;  // empty: no checkpointing
};

namespace detail {

// Checkpoint file: "#job <descriptor>", "#cursor <next batch>", "#visited <order> <count>",
// "#counter <name> <count>", then one graph6 line per reported graph from completed batches.
struct Checkpoint {
  std::string job;
  std::size_t cursor = 0;
  BatchResult done;

  static std::optional<Checkpoint> load(const std::string& path, const std::string& job) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    Checkpoint c;
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      std::istringstream ls(line);
      std::string tag;
      if (line[0] == '#') {
        ls >> tag;
        if (tag == "#job") {
          std::getline(ls >> std::ws, c.job);
        } else if (tag == "#cursor") {
          ls >> c.cursor;
        } else if (tag == "#visited") {
          int order = 0;
          long count = 0;
          ls >> order >> count;
          c.done.visited[order] = count;
        } else if (tag == "#counter") {
          std::string name;
          long count = 0;
          ls >> name >> count;
          c.done.counters[name] = count;
        }
      } else {
        c.done.graphs.push_back(parse_graph6(line));
      }
    }
    if (c.job != job) throw std::runtime_error("checkpoint " + path + " belongs to a different job: " + c.job);
    return c;
  }

  void save(const std::string& path) const {
    const std::string tmp = path + ".tmp";
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << "#job " << job << '\n' << "#cursor " << cursor << '\n';
      for (auto [order, count] : done.visited) out << "#visited " << order << ' ' << count << '\n';
      for (const auto& [name, count] : done.counters) out << "#counter " << name << ' ' << count << '\n';
      for (const auto& g : done.graphs) out << emit_graph6(g) << '\n';
      if (!out) throw std::runtime_error("failed to write checkpoint " + tmp);
    }
    std::filesystem::rename(tmp, path);
  }
};

}  // namespace detail

/// Depth-first enumeration to `max_n`, split into batches rooted at the graphs of order
/// `split_order`. `visit(graph, key, result)` must be safe to call from several threads on
/// distinct `result` objects. Batch results are merged in batch order, so output does not depend
/// on the worker count.
template <typename Visit>
BatchResult run_batched(const std::string& job, int max_n, const RunOptions& opts, Visit visit) {
  detail::check_enumeration_order(max_n);
  BatchResult prefix;
  std::vector<std::pair<CanonicalKey, Graph>> roots;
  const int split_order = std::max(1, std::min(max_n, max_n - 2));
  if (max_n == 0) return prefix;

  for_each_graph(split_order, [&](const Graph& g, const CanonicalKey& key) {
    const bool descend = visit(g, key, prefix);
    if (descend && g.order() == split_order && split_order < max_n) roots.emplace_back(key, g);
    return descend;
  });

  detail::Checkpoint state;
  state.job = job;
  if (!opts.checkpoint.empty()) {
    if (auto loaded = detail::Checkpoint::load(opts.checkpoint, job)) state = std::move(*loaded);
  }

  std::vector<std::optional<BatchResult>> results(roots.size());
  std::atomic<std::size_t> next{state.cursor};
  std::mutex mu;
  std::exception_ptr failure;

  auto advance_cursor = [&] {
    // Caller holds `mu`.
    bool moved = false;
    while (state.cursor < results.size() && results[state.cursor]) {
      state.done.merge(*results[state.cursor]);
      results[state.cursor].reset();
      ++state.cursor;
      moved = true;
    }
    if (moved && !opts.checkpoint.empty()) state.save(opts.checkpoint);
  };

  auto worker = [&] {
    for (std::size_t i = next++; i < roots.size(); i = next++) {
      BatchResult r;
      try {
        auto bound = [&](const Graph& g, const CanonicalKey& key) { return visit(g, key, r); };
        const auto& [key, root] = roots[i];
        for (const auto& [child_key, child] : detail::canonical_children(root, key))
          detail::augment_dfs(child, child_key, max_n, bound);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!failure) failure = std::current_exception();
        next = roots.size();
        return;
      }
      std::lock_guard lock(mu);
      results[i] = std::move(r);
      advance_cursor();
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
  {
    std::lock_guard lock(mu);
    advance_cursor();
  }
  prefix.merge(state.done);
  return prefix;
}

// ---------------------------------------------------------------------------------------------
// Hereditary classes

/// A hereditary class given by a condition every induced subgraph H must meet.
struct ClassPredicate {
  std::string name;
  std::function<bool(int n, int alpha, int omega)> local;
  std::function<bool(const Graph&)> whole;

  bool operator()(const Graph& g) const { return whole(g); }
};

inline ClassPredicate deficiency_class(int c) {
  if (c < 0) throw std::invalid_argument("deficiency parameter must be non-negative");
  return {"deficiency:" + std::to_string(c), [c](int n, int a, int w) { return n - a - w <= c; },
          [c](const Graph& g) {
            detail::check_envelope(g, kSubsetScanEnvelope, "deficiency class");
            return detail::DeficitScan(g).run(c) <= c;
          }};
}

inline ClassPredicate sum_perfect_class() {
  ClassPredicate p = deficiency_class(0);
  p.name = "sum-perfect";
  return p;
}

inline ClassPredicate threshold_class() {
  return {"threshold", [](int n, int a, int w) { return a + w == n + 1; },
          [](const Graph& g) { return is_threshold(g); }};
}

inline ClassPredicate perfect_class() {
  return {"perfect", [](int n, int a, int w) { return a * w >= n; },
          [](const Graph& g) { return is_perfect_lovasz(g); }};
}

/// Parses `sum-perfect`, `threshold`, `perfect` or `deficiency:C`.
inline ClassPredicate parse_class(const std::string& name) {
  if (name == "sum-perfect") return sum_perfect_class();
  if (name == "threshold") return threshold_class();
  if (name == "perfect") return perfect_class();
  if (name.starts_with("deficiency:")) {
    const std::string arg = name.substr(11);
    std::size_t used = 0;
    int c = -1;
    try {
      c = std::stoi(arg, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != arg.size() || arg.empty() || c < 0) throw std::invalid_argument("bad deficiency parameter: " + arg);
    return deficiency_class(c);
  }
  throw std::invalid_argument("unknown class: " + name);
}

/// Class membership through the hereditary recursion p(G) = local(G) and p(G - v) for all v,
/// memoized by canonical key. Safe to share between threads.
class HereditaryOracle {
 public:
  explicit HereditaryOracle(ClassPredicate p, int memo_limit = kEnumerationEnvelope)
      : p_(std::move(p)), memo_limit_(memo_limit) {}

  bool local(const Graph& g) const { return p_.local(g.order(), alpha(g), omega(g)); }

  bool contains(const Graph& g) {
    if (g.order() == 0) return true;
    if (g.order() == 1) return p_.local(1, 1, 1);
    if (g.order() > memo_limit_) return compute(g);
    CanonicalKey key = canonical_form_unchecked(g).key;
    {
      std::lock_guard lock(mu_);
      if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    }
    const bool verdict = compute(g);
    std::lock_guard lock(mu_);
    memo_.emplace(std::move(key), verdict);
    return verdict;
  }

  bool all_deletions_in_class(const Graph& g) {
    for (Vertex v : g.vertices())
      if (!contains(g.delete_vertex(v))) return false;
    return true;
  }

  const ClassPredicate& predicate() const { return p_; }

 private:
  bool compute(const Graph& g) { return local(g) && all_deletions_in_class(g); }

  ClassPredicate p_;
  int memo_limit_;
  std::mutex mu_;
  std::unordered_map<CanonicalKey, bool> memo_;
};

/// Outside the class while every single-vertex deletion is inside.
inline bool is_minimal_forbidden(const ClassPredicate& p, const Graph& g) {
  if (p(g)) return false;
  for (Vertex v : g.vertices())
    if (!p(g.delete_vertex(v))) return false;
  return true;
}

struct Certificate {
  CanonicalKey key;
  Graph graph;
};

struct MineResult {
  std::string class_name;
  int max_n = 0;
  std::map<int, long> counts_by_order;
  std::vector<Certificate> certificates;  // by order, then canonical key
  std::map<int, long> visited_by_order;
  double seconds = 0;

  long total() const { return static_cast<long>(certificates.size()); }
};

namespace detail {

inline void sort_certificates(std::vector<Certificate>& certs) {
  std::sort(certs.begin(), certs.end(), [](const Certificate& a, const Certificate& b) {
    if (a.graph.order() != b.graph.order()) return a.graph.order() < b.graph.order();
    return a.key < b.key;
  });
  certs.erase(std::unique(certs.begin(), certs.end(), [](const Certificate& a, const Certificate& b) { return a.key == b.key; }),
              certs.end());
}

inline MineResult collect(const ClassPredicate& p, int max_n, const BatchResult& r,
                          std::chrono::steady_clock::time_point start) {
  MineResult out;
  out.class_name = p.name;
  out.max_n = max_n;
  for (const auto& g : r.graphs) out.certificates.push_back({canonical_form_unchecked(g).key, g});
  sort_certificates(out.certificates);
  for (const auto& c : out.certificates) ++out.counts_by_order[c.graph.order()];
  out.visited_by_order = r.visited;
  out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

}  // namespace detail

/// Minimal forbidden induced subgraphs of order <= max_n. Only class members are extended, since a
/// minimal forbidden graph's canonical parent lies in the class.
inline MineResult mine_forbidden(const ClassPredicate& p, int max_n, const RunOptions& opts = {}) {
  detail::check_enumeration_order(max_n);
  const auto start = std::chrono::steady_clock::now();
  HereditaryOracle oracle(p, std::max(1, max_n - 1));
  auto visit = [&](const Graph& g, const CanonicalKey&, BatchResult& r) {
    ++r.visited[g.order()];
    if (!oracle.all_deletions_in_class(g)) return false;
    if (oracle.local(g)) return true;
    r.graphs.push_back(g);
    return false;
  };
  const BatchResult r = run_batched("mine " + p.name + " " + std::to_string(max_n), max_n, opts, visit);
  return detail::collect(p, max_n, r, start);
}

/// Minimal forbidden graphs among an external stream of graphs.
inline MineResult mine_forbidden_from(const ClassPredicate& p, const std::vector<Graph>& graphs) {
  const auto start = std::chrono::steady_clock::now();
  BatchResult r;
  int max_n = 0;
  for (const auto& g : graphs) {
    ++r.visited[g.order()];
    max_n = std::max(max_n, g.order());
    if (is_minimal_forbidden(p, g)) r.graphs.push_back(g);
  }
  return detail::collect(p, max_n, r, start);
}

/// Number of minimal forbidden graphs of order <= max_n for "alpha + omega >= |V| - c".
inline long count_hc_forbidden(int c, int max_n, const RunOptions& opts = {}) {
  if (max_n > 9) throw std::invalid_argument("count_hc_forbidden limited to 9 vertices");
  return mine_forbidden(deficiency_class(c), max_n, opts).total();
}

// ---------------------------------------------------------------------------------------------
// Verification harnesses

struct VerificationReport {
  std::string target;
  int max_n = 0;
  bool passed = true;
  std::map<int, long> counts_by_order;   // target-specific, see each harness
  std::map<int, long> checked_by_order;  // graphs examined
  std::vector<Graph> counterexamples;
  std::vector<std::string> failures;

  void fail(std::string why) {
    passed = false;
    failures.push_back(std::move(why));
  }
};

/// Mines minimal non-sum-perfect graphs up to max_n, requires them to be exactly the 27-graph
/// family (orders 5, 6, 7 with 1, 24, 2 members, none larger), checks the structural lemmas on
/// every certificate, and cross-checks the two sum-perfect recognizers on every visited graph.
inline VerificationReport verify_theorem_27(int max_n, const RunOptions& opts = {}) {
  VerificationReport rep;
  rep.target = "theorem27";
  rep.max_n = max_n;
  if (max_n < 7) throw std::invalid_argument("theorem27 verification needs max_n >= 7");
  detail::check_enumeration_order(max_n);

  HereditaryOracle oracle(sum_perfect_class(), max_n - 1);
  auto visit = [&](const Graph& g, const CanonicalKey&, BatchResult& r) {
    ++r.visited[g.order()];
    const bool deletions_ok = oracle.all_deletions_in_class(g);
    const bool in_class = deletions_ok && oracle.local(g);
    if (in_class != is_sum_perfect(g).verdict) {
      ++r.counters["disagreements"];
      r.graphs.push_back(g);
    }
    if (deletions_ok && !in_class) {
      ++r.counters["certificates"];
      ++r.counters["order" + std::to_string(g.order())];
      const MemberCheck c = check_member(FamilyMember{0, "", g, {}});
      if (!c.passed()) ++r.counters["lemma_failures"];
    }
    return in_class;
  };
  const BatchResult r = run_batched("verify theorem27 " + std::to_string(max_n), max_n, opts, visit);
  rep.checked_by_order = r.visited;

  // Re-mine to get the certificate keys; the visit above only counts them.
  const MineResult mined = mine_forbidden(sum_perfect_class(), max_n, opts);
  rep.counts_by_order = mined.counts_by_order;
  std::set<CanonicalKey> mined_keys, family_keys;
  for (const auto& c : mined.certificates) mined_keys.insert(c.key);
  for (const auto& m : forbidden_family().members()) family_keys.insert(m.key);

  if (mined_keys != family_keys) rep.fail("mined obstructions differ from the 27-graph family");
  const std::map<int, long> expected = {{5, 1}, {6, 24}, {7, 2}};
  if (mined.counts_by_order != expected) rep.fail("per-order counts differ from {5:1, 6:24, 7:2}");
  for (const auto& c : mined.certificates)
    if (c.graph.order() > 7) rep.counterexamples.push_back(c.graph);
  auto counter = [&](const char* name) {
    auto it = r.counters.find(name);
    return it == r.counters.end() ? 0L : it->second;
  };
  if (counter("disagreements") > 0) {
    rep.fail("definitional and family-free recognizers disagree on " + std::to_string(counter("disagreements")) +
             " graphs");
    rep.counterexamples.insert(rep.counterexamples.end(), r.graphs.begin(), r.graphs.end());
  }
  if (counter("lemma_failures") > 0) rep.fail("a mined obstruction violates the minimality lemmas");
  if (counter("certificates") != mined.total()) rep.fail("certificate counts differ between runs");
  return rep;
}

/// Every graph with no member of H2..H25 as an induced subgraph has deficit at most 1.
inline VerificationReport verify_conjecture(int max_n, const RunOptions& opts = {}) {
  VerificationReport rep;
  rep.target = "conjecture";
  rep.max_n = max_n;
  static const detail::FamilyIndex conjecture_index(build_conjecture_family());
  auto visit = [&](const Graph& g, const CanonicalKey&, BatchResult& r) {
    // The parent is free of the family, so any copy must use the newest vertex.
    if (find_member_copy(g, conjecture_index, g.order() > 1).has_value()) return false;
    ++r.visited[g.order()];
    if (deficit(g) > 1) r.graphs.push_back(g);
    return true;
  };
  const BatchResult r = run_batched("verify conjecture " + std::to_string(max_n), max_n, opts, visit);
  rep.checked_by_order = r.visited;
  rep.counts_by_order = r.visited;
  rep.counterexamples = r.graphs;
  if (!r.graphs.empty()) rep.fail(std::to_string(r.graphs.size()) + " family-free graphs with deficit above 1");
  return rep;
}

/// Elimination-order threshold, {P4, C4, 2K2}-freeness and "every induced subgraph has
/// alpha + omega = |V| + 1" agree on every graph up to max_n.
inline VerificationReport verify_threshold(int max_n, const RunOptions& opts = {}) {
  VerificationReport rep;
  rep.target = "threshold";
  rep.max_n = max_n;
  auto visit = [&](const Graph& g, const CanonicalKey&, BatchResult& r) {
    ++r.visited[g.order()];
    const bool by_elimination = is_threshold(g);
    if (by_elimination) ++r.counters["threshold" + std::to_string(g.order())];
    if (by_elimination != is_p4_c4_2k2_free(g) || by_elimination != check_threshold_theorem(g)) r.graphs.push_back(g);
    return true;
  };
  const BatchResult r = run_batched("verify threshold " + std::to_string(max_n), max_n, opts, visit);
  rep.checked_by_order = r.visited;
  for (int n = 1; n <= max_n; ++n) {
    auto it = r.counters.find("threshold" + std::to_string(n));
    rep.counts_by_order[n] = it == r.counters.end() ? 0 : it->second;
  }
  rep.counterexamples = r.graphs;
  if (!r.graphs.empty()) rep.fail(std::to_string(r.graphs.size()) + " graphs where the threshold tests disagree");
  return rep;
}

}  // namespace sumperfect
