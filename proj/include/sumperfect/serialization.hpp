#pragma once

#include <json.hpp>

#include "sumperfect/family.hpp"
#include "sumperfect/invariants.hpp"
#include "sumperfect/miner.hpp"
#include "sumperfect/recognition.hpp"

namespace sumperfect {

inline nlohmann::json to_json(VertexSet s) { return s.to_vector(); }

/// Flat object with fields n, alpha, omega, tau, nu, triangles, deficit.
inline nlohmann::json to_json(const InvariantReport& r) {
  return {{"n", r.n},     {"alpha", r.alpha},         {"omega", r.omega},    {"tau", r.tau},
          {"nu", r.nu},   {"triangles", r.triangles}, {"deficit", r.deficit}};
}

inline InvariantReport report_from_json(const nlohmann::json& j) {
  InvariantReport r;
  r.n = j.at("n");
  r.alpha = j.at("alpha");
  r.omega = j.at("omega");
  r.tau = j.at("tau");
  r.nu = j.at("nu");
  r.triangles = j.at("triangles");
  r.deficit = j.at("deficit");
  return r;
}

/// {verdict, witness_kind, witness_vertices, forbidden_index, forbidden_name}; a forbidden copy
/// lists host vertices in pattern-vertex order, a stable/clique certificate adds `stable` and `clique`.
inline nlohmann::json to_json(const Witness& w) {
  nlohmann::json j = {{"verdict", w.verdict},
                      {"witness_kind", "none"},
                      {"witness_vertices", nlohmann::json::array()},
                      {"forbidden_index", nullptr},
                      {"forbidden_name", nullptr}};
  if (const auto* c = std::get_if<ForbiddenCopy>(&w.evidence)) {
    j["witness_kind"] = "forbidden_copy";
    j["witness_vertices"] = c->embedding.map;
    j["forbidden_index"] = c->index;
    j["forbidden_name"] = forbidden_family().member(c->index).name;
  } else if (const auto* d = std::get_if<DeficientSubgraph>(&w.evidence)) {
    j["witness_kind"] = "deficient_subgraph";
    j["witness_vertices"] = to_json(d->vertices);
  } else if (const auto* p = std::get_if<StableCliquePair>(&w.evidence)) {
    j["witness_kind"] = "stable_clique_pair";
    j["witness_vertices"] = to_json(p->stable | p->clique);
    j["stable"] = to_json(p->stable);
    j["clique"] = to_json(p->clique);
  }
  return j;
}

inline nlohmann::json to_json(const ForbiddenCopy& c) {
  return {{"forbidden_index", c.index},
          {"forbidden_name", forbidden_family().member(c.index).name},
          {"witness_vertices", c.embedding.map}};
}

inline nlohmann::json counts_json(const std::map<int, long>& counts) {
  nlohmann::json j = nlohmann::json::object();
  for (auto [order, count] : counts) j[std::to_string(order)] = count;
  return j;
}

/// Mining summary {class, max_n, counts_by_order, total}.
inline nlohmann::json summary_json(const MineResult& r) {
  return {{"class", r.class_name}, {"max_n", r.max_n}, {"counts_by_order", counts_json(r.counts_by_order)},
          {"total", r.total()}};
}

inline nlohmann::json to_json(const VerificationReport& r) {
  nlohmann::json cex = nlohmann::json::array();
  for (const auto& g : r.counterexamples) cex.push_back(emit_graph6(g));
  return {{"target", r.target},
          {"max_n", r.max_n},
          {"passed", r.passed},
          {"counts_by_order", counts_json(r.counts_by_order)},
          {"checked_by_order", counts_json(r.checked_by_order)},
          {"counterexamples", cex},
          {"failures", r.failures}};
}

}  // namespace sumperfect
