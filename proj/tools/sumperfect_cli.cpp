// Command-line front end: analyze, family, recognize, mine, verify.
//
// Exit codes: 0 clean / pass, 1 mathematical counterexample, 2 usage or parse error.

#include <CLI11.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <string>
#include <thread>

#include "sumperfect/sumperfect.hpp"

namespace {

using namespace sumperfect;
using nlohmann::json;

constexpr int kExitClean = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;

struct InputOptions {
  std::string path = "-";
  std::string format = "auto";
};

InputFormat input_format(const std::string& name) {
  if (name == "graph6") return InputFormat::kGraph6;
  if (name == "edges") return InputFormat::kEdgeList;
  return InputFormat::kAuto;
}

class InputStream {
 public:
  explicit InputStream(const std::string& path) {
    if (path != "-") {
      file_ = std::make_unique<std::ifstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path);
    }
  }
  std::istream& get() { return file_ ? *file_ : std::cin; }

 private:
  std::unique_ptr<std::ifstream> file_;
};

// Runs `each(line, graph)` on every parsed graph; reports parse errors and keeps going.
template <typename Each>
int for_each_input(const InputOptions& in, Each each) {
  InputStream stream(in.path);
  GraphReader reader(stream.get(), input_format(in.format));
  int status = kExitClean;
  while (auto item = reader.next()) {
    if (!item->ok()) {
      std::cerr << in.path << ":" << item->line << ": " << item->error() << '\n';
      status = kExitUsage;
      continue;
    }
    each(item->line, item->graph());
  }
  return status;
}

std::string join(VertexSet s) {
  std::string out;
  for (Vertex v : s) out += (out.empty() ? "" : ",") + std::to_string(v);
  return out.empty() ? "-" : out;
}

// ---------------------------------------------------------------------------------------------

struct AnalyzeOptions {
  InputOptions input;
  std::string format = "text";
  bool witness = false;
};

json analysis_record(int line, const Graph& g) {
  const InvariantReport rep = invariant_report(g);
  json j = {{"id", line}};
  j.update(to_json(rep));
  j["max_deficiency"] = g.order() <= kSubsetScanEnvelope ? json(max_deficiency(g)) : json(nullptr);
  const Witness w = is_sum_perfect(g);
  j["sum_perfect"] = w.verdict;
  const json wj = to_json(w);
  for (const char* key : {"witness_kind", "witness_vertices", "forbidden_index", "forbidden_name"}) j[key] = wj[key];
  j["threshold"] = is_threshold(g);
  j["split"] = is_split(g).has_value();
  j["apex_threshold"] = is_apex_threshold(g).has_value();
  j["stable_set"] = to_json(stability_number(g).witness);
  j["clique"] = to_json(clique_number(g).witness);
  return j;
}

int cmd_analyze(const AnalyzeOptions& o) {
  bool header = false;
  return for_each_input(o.input, [&](int line, const Graph& g) {
    const json j = analysis_record(line, g);
    if (o.format == "json") {
      std::cout << j.dump() << '\n';
      return;
    }
    if (!header) {
      std::cout << "id\tn\talpha\tomega\ttau\tnu\ttriangles\tdeficit\tsum_perfect\tforbidden\tthreshold\tsplit\tapex";
      if (o.witness) std::cout << "\twitness\tstable\tclique";
      std::cout << '\n';
      header = true;
    }
    auto yes = [](const json& b) { return b.get<bool>() ? "yes" : "no"; };
    std::cout << line << '\t' << j["n"] << '\t' << j["alpha"] << '\t' << j["omega"] << '\t' << j["tau"] << '\t'
              << j["nu"] << '\t' << j["triangles"] << '\t' << j["deficit"] << '\t' << yes(j["sum_perfect"]) << '\t'
              << (j["forbidden_name"].is_null() ? std::string("-") : j["forbidden_name"].get<std::string>()) << '\t'
              << yes(j["threshold"]) << '\t' << yes(j["split"]) << '\t' << yes(j["apex_threshold"]);
    if (o.witness) {
      VertexSet wv, st, cl;
      for (int v : j["witness_vertices"]) wv.insert(v);
      for (int v : j["stable_set"]) st.insert(v);
      for (int v : j["clique"]) cl.insert(v);
      std::cout << '\t' << join(wv) << '\t' << join(st) << '\t' << join(cl);
    }
    std::cout << '\n';
  });
}

// ---------------------------------------------------------------------------------------------

struct FamilyOptions {
  std::string set = "F";
  std::string format = "graph6";
};

int cmd_family(const FamilyOptions& o) {
  const auto& all = forbidden_family().members();
  const std::vector<FamilyMember> members = o.set == "B" ? build_conjecture_family() : all;
  for (const auto& m : members) {
    if (o.format == "edges") {
      std::cout << "# H" << m.index << ' ' << m.name << '\n' << emit_edge_list(m.graph) << '\n';
    } else if (o.format == "json") {
      std::cout << json{{"index", m.index}, {"name", m.name}, {"graph6", emit_graph6(m.graph)}, {"edges", m.graph.edges()}}.dump()
                << '\n';
    } else {
      std::cout << m.index << '\t' << m.name << '\t' << emit_graph6(m.graph) << '\n';
    }
  }
  return kExitClean;
}

// ---------------------------------------------------------------------------------------------

struct RecognizeOptions {
  InputOptions input;
  bool witness = false;
  bool all_witnesses = false;
};

int cmd_recognize(const RecognizeOptions& o) {
  return for_each_input(o.input, [&](int line, const Graph& g) {
    const Witness w = is_sum_perfect(g, {.certify_positive = o.witness});
    json j = to_json(w);
    j["id"] = line;
    if (o.all_witnesses) {
      json copies = json::array();
      for (const auto& c : all_forbidden_copies(g)) copies.push_back(to_json(c));
      j["copies"] = std::move(copies);
    }
    std::cout << j.dump() << '\n';
  });
}

// ---------------------------------------------------------------------------------------------

struct MineOptions {
  std::string cls = "sum-perfect";
  int max_n = 7;
  std::string format = "graph6";
  std::string from;
  RunOptions run;
};

int cmd_mine(const MineOptions& o) {
  const ClassPredicate p = parse_class(o.cls);
  MineResult r;
  if (!o.from.empty()) {
    std::vector<Graph> graphs;
    const int status = for_each_input({o.from, "graph6"}, [&](int, const Graph& g) { graphs.push_back(g); });
    if (status != kExitClean) return status;
    r = mine_forbidden_from(p, graphs);
  } else {
    r = mine_forbidden(p, o.max_n, o.run);
  }
  for (const auto& c : r.certificates) {
    if (o.format == "json") {
      const Graph& g = c.graph;
      std::cout << json{{"graph6", emit_graph6(g)}, {"n", g.order()}, {"alpha", alpha(g)}, {"omega", omega(g)},
                        {"deficit", deficit(g)}}
                       .dump()
                << '\n';
    } else {
      std::cout << emit_graph6(c.graph) << '\n';
    }
  }
  std::cout << summary_json(r).dump() << '\n';
  return kExitClean;
}

// ---------------------------------------------------------------------------------------------

struct VerifyOptions {
  std::string target;
  int max_n = 8;
  RunOptions run;
};

int cmd_verify(const VerifyOptions& o) {
  VerificationReport rep;
  if (o.target == "theorem27") {
    rep = verify_theorem_27(o.max_n, o.run);
  } else if (o.target == "conjecture") {
    rep = verify_conjecture(o.max_n, o.run);
  } else {
    rep = verify_threshold(o.max_n, o.run);
  }
  std::cout << to_json(rep).dump() << '\n';
  if (rep.passed) {
    std::cerr << o.target << ": pass\n";
    return kExitClean;
  }
  std::cerr << o.target << ": FAIL";
  if (!rep.counterexamples.empty()) std::cerr << ", first counterexample " << emit_graph6(rep.counterexamples.front());
  std::cerr << '\n';
  return kExitCounterexample;
}

void add_input(CLI::App* cmd, InputOptions& in) {
  cmd->add_option("input", in.path, "graph file, '-' for stdin")->capture_default_str();
  cmd->add_option("--input-format", in.format, "input encoding")
      ->check(CLI::IsMember({"auto", "graph6", "edges"}))
      ->capture_default_str();
}

void add_run(CLI::App* cmd, RunOptions& run) {
  cmd->add_option("--jobs", run.jobs, "worker threads")->check(CLI::PositiveNumber)->capture_default_str();
  cmd->add_option("--checkpoint", run.checkpoint, "resume file (graph6 lines plus cursor)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact stability/clique invariants, sum-perfect recognition and obstruction mining"};
  app.require_subcommand(1);

  const int default_jobs = static_cast<int>(std::max(1U, std::thread::hardware_concurrency()));

  AnalyzeOptions analyze;
  auto* a = app.add_subcommand("analyze", "invariants and class memberships for each input graph");
  add_input(a, analyze.input);
  a->add_option("--format", analyze.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  a->add_flag("--witness", analyze.witness, "print witness vertex sets in text output");

  FamilyOptions family;
  auto* f = app.add_subcommand("family", "emit the forbidden family F or its subfamily B");
  f->add_option("--set", family.set)->check(CLI::IsMember({"F", "B"}))->capture_default_str();
  f->add_option("--format", family.format)
      ->check(CLI::IsMember({"graph6", "text", "edges", "json"}))
      ->capture_default_str();

  RecognizeOptions recognize;
  auto* r = app.add_subcommand("recognize", "sum-perfect recognition with witnesses (JSON lines)");
  add_input(r, recognize.input);
  r->add_flag("--witness", recognize.witness, "certify positive verdicts with a stable set and a clique");
  r->add_flag("--all-witnesses", recognize.all_witnesses, "list every induced forbidden copy");

  MineOptions mine;
  mine.run.jobs = default_jobs;
  auto* m = app.add_subcommand("mine", "minimal forbidden induced subgraphs of a hereditary class");
  m->add_option("--class", mine.cls, "sum-perfect, threshold, perfect or deficiency:C")->capture_default_str();
  m->add_option("--max-n", mine.max_n)->check(CLI::Range(1, kEnumerationEnvelope))->capture_default_str();
  m->add_option("--format", mine.format)->check(CLI::IsMember({"graph6", "json"}))->capture_default_str();
  m->add_option("--from", mine.from, "graph6 stream to mine instead of the built-in enumerator");
  add_run(m, mine.run);

  VerifyOptions verify;
  verify.run.jobs = default_jobs;
  auto* v = app.add_subcommand("verify", "exhaustive verification harnesses");
  v->add_option("target", verify.target)
      ->required()
      ->check(CLI::IsMember({"theorem27", "conjecture", "threshold"}));
  v->add_option("--max-n", verify.max_n)->capture_default_str();
  add_run(v, verify.run);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (a->parsed()) return cmd_analyze(analyze);
    if (f->parsed()) return cmd_family(family);
    if (r->parsed()) return cmd_recognize(recognize);
    if (m->parsed()) return cmd_mine(mine);
    if (v->parsed()) return cmd_verify(verify);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
