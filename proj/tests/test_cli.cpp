#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <json.hpp>

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

// Runs the CLI with `args`, feeding `input` on stdin; stderr is discarded.
CliRun run_cli(const std::string& args, const std::string& input = "") {
  const auto in_path = std::filesystem::temp_directory_path() / "sumperfect_cli_test.in";
  std::ofstream(in_path) << input;
  const std::string cmd = std::string(SUMPERFECT_CLI) + " " + args + " < " + in_path.string() + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);)
    if (!l.empty()) out.push_back(l);
  return out;
}

TEST(Cli, AnalyzeC5AsJson) {
  const CliRun r = run_cli("analyze --format json", "Dhc\n");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(lines(r.out).at(0));
  EXPECT_EQ(j["alpha"], 2);
  EXPECT_EQ(j["omega"], 2);
  EXPECT_EQ(j["deficit"], 1);
  EXPECT_EQ(j["sum_perfect"], false);
  EXPECT_EQ(j["forbidden_name"], "C5");
  EXPECT_EQ(j["forbidden_index"], 1);
}

TEST(Cli, AnalyzeK33FromEdgeList) {
  const CliRun r = run_cli("analyze --format json --input-format edges", "6\n0 3\n0 4\n0 5\n1 3\n1 4\n1 5\n2 3\n2 4\n2 5\n");
  ASSERT_EQ(r.status, 0);
  const auto j = nlohmann::json::parse(lines(r.out).at(0));
  EXPECT_EQ(j["alpha"], 3);
  EXPECT_EQ(j["omega"], 2);
  EXPECT_EQ(j["nu"], 3);
  EXPECT_EQ(j["sum_perfect"], false);
  EXPECT_EQ(j["forbidden_index"], 13);
}

TEST(Cli, AnalyzeTextTable) {
  const CliRun r = run_cli("analyze --witness", "Dhc\nC~\n");
  ASSERT_EQ(r.status, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3U);
  EXPECT_EQ(ls[0].rfind("id\tn\talpha", 0), 0U);
  EXPECT_NE(ls[1].find("C5"), std::string::npos);
}

TEST(Cli, EmptyInputGivesEmptyOutput) {
  const CliRun r = run_cli("analyze", "");
  EXPECT_EQ(r.status, 0);
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, ParseErrorsContinueAndExitTwo) {
  const CliRun r = run_cli("analyze --format json", "Dhc\nnot-a-graph\nC~\n");
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(lines(r.out).size(), 2U);
}

TEST(Cli, FamilyListings) {
  EXPECT_EQ(lines(run_cli("family --set F").out).size(), 27U);
  EXPECT_EQ(lines(run_cli("family --set B").out).size(), 24U);
  const auto first = lines(run_cli("family --set F").out).at(0);
  EXPECT_EQ(first, "1\tC5\tDhc");
  const auto js = lines(run_cli("family --format json").out);
  EXPECT_EQ(nlohmann::json::parse(js.at(25))["edges"].size(), 10U);
}

TEST(Cli, RecognizeEmitsWitnesses) {
  const CliRun r = run_cli("recognize --witness", "Dhc\nC~\n");
  ASSERT_EQ(r.status, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 2U);
  const auto a = nlohmann::json::parse(ls[0]);
  EXPECT_EQ(a["verdict"], false);
  EXPECT_EQ(a["witness_kind"], "forbidden_copy");
  EXPECT_EQ(a["witness_vertices"], nlohmann::json({0, 1, 2, 3, 4}));
  const auto b = nlohmann::json::parse(ls[1]);
  EXPECT_EQ(b["verdict"], true);
  EXPECT_EQ(b["witness_kind"], "stable_clique_pair");
}

TEST(Cli, MineThreshold) {
  const CliRun r = run_cli("mine --class threshold --max-n 5 --jobs 2");
  ASSERT_EQ(r.status, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4U);
  const auto summary = nlohmann::json::parse(ls.back());
  EXPECT_EQ(summary["total"], 3);
  EXPECT_EQ(summary["counts_by_order"]["4"], 3);
}

TEST(Cli, MineFromStream) {
  std::string input;
  for (const auto& l : lines(run_cli("family").out)) input += l.substr(l.rfind('\t') + 1) + "\n";
  input += "C~\n";
  const CliRun r = run_cli("mine --class sum-perfect --from -", input);
  ASSERT_EQ(r.status, 0);
  const auto summary = nlohmann::json::parse(lines(r.out).back());
  EXPECT_EQ(summary["total"], 27);
}

TEST(Cli, VerifyThresholdPasses) {
  const CliRun r = run_cli("verify threshold --max-n 6");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(nlohmann::json::parse(lines(r.out).at(0))["passed"], true);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli("").status, 2);
  EXPECT_EQ(run_cli("mine --max-n 11").status, 2);
  EXPECT_EQ(run_cli("mine --class nonsense --max-n 3").status, 2);
  EXPECT_EQ(run_cli("verify theorem27 --max-n 6").status, 2);
  EXPECT_EQ(run_cli("verify conjecture --max-n 12").status, 2);
}

}  // namespace
