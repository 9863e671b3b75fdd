#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

#include "matchlab/cli.hpp"
#include "matchlab/error.hpp"

using namespace matchlab;

namespace {

struct CliResult {
  int code = -1;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "matchlab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string temp_path(const std::string& name) { return std::string(MATCHLAB_TEST_TMPDIR) + "/" + name; }

std::string write_file(const std::string& name, const std::string& contents) {
  const std::string path = temp_path(name);
  std::ofstream(path) << contents;
  return path;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) out.push_back(line);
  return out;
}

}  // namespace

TEST(Cli, CountFromEdgeListFile) {
  const std::string path = write_file("k4.el", "# K_4\n4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
  const CliResult r = run({"count", "--file", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["pma"], "3");
  EXPECT_EQ(j["n"], 4);
}

TEST(Cli, AvoidanceOnK6) {
  const CliResult r = run({"avoidance", "--family", "complete", "-n", "6"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["exact"], "8/15");
  EXPECT_NEAR(j["reference"].get<double>(), 0.548811636094, 1e-12);
  EXPECT_EQ(j["n_edges"].size(), 3u);
}

TEST(Cli, AvoidanceOnMultipartiteUsesFirstPerfectMatching) {
  const CliResult r = run({"avoidance", "--family", "multipartite", "-a", "3", "-b", "2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["exact"], "1/2");
  EXPECT_DOUBLE_EQ(j["lambda"].get<double>(), 0.75);
}

TEST(Cli, ExpanderVerdicts) {
  const CliResult pass = run({"expander", "--family", "multipartite", "-a", "3", "-b", "2", "--nu", "0.1",
                        "--tau", "0.3"});
  ASSERT_EQ(pass.code, kExitOk) << pass.err;
  EXPECT_EQ(nlohmann::json::parse(pass.out)["verdict"], "Pass");

  const std::string path =
      write_file("triangles.el", "6 6\n0 1\n0 2\n1 2\n3 4\n3 5\n4 5\n");
  const CliResult fail = run({"expander", "--file", path, "--nu", "0.1", "--tau", "0.3"});
  ASSERT_EQ(fail.code, kExitOk) << fail.err;
  const auto j = nlohmann::json::parse(fail.out);
  EXPECT_EQ(j["verdict"], "Fail");
  EXPECT_FALSE(j["witness"].is_null());
}

TEST(Cli, WarnsWhenNuExceedsTau) {
  const CliResult r = run({"expander", "--family", "complete", "-n", "6", "--nu", "0.3", "--tau", "0.1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"count"}).code, kExitInputError);
  EXPECT_EQ(run({"count", "--family", "complete"}).code, kExitInputError);
  EXPECT_EQ(run({"count", "--file", temp_path("missing.el")}).code, kExitInputError);
  EXPECT_EQ(run({"nonsense"}).code, kExitInputError);
  EXPECT_EQ(run({"avoidance", "--family", "complete", "-n", "6", "--n-edges", "0-9"}).code,
            kExitInputError);

  const CliResult big = run({"count", "--family", "complete", "-n", "40"});
  EXPECT_EQ(big.code, kExitSizeError);
  EXPECT_NE(big.err.find("error"), std::string::npos);
  EXPECT_EQ(run({"disjoint", "--family", "complete", "-n", "12", "--r", "3"}).code, kExitSizeError);
}

TEST(Cli, CsvOutput) {
  const CliResult r = run({"pmf", "--family", "complete", "-n", "4", "--format", "csv"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 4u);
  EXPECT_EQ(ls[0], "k,exact,float,poisson");
  EXPECT_EQ(ls[1].substr(0, 12), "0,2/3,0.6666");
  EXPECT_EQ(ls[2].substr(0, 4), "1,0,");
}

TEST(Cli, SuiteMultipartiteHasDerangementRows) {
  const CliResult r = run({"suite-multipartite", "--max-n", "12"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  bool seen_k33 = false;
  bool seen_k66 = false;
  for (const auto& line : lines(r.out)) {
    if (line.rfind("2,3,", 0) == 0) {
      seen_k33 = true;
      EXPECT_NE(line.find(",1/3,"), std::string::npos) << line;
    }
    if (line.rfind("2,6,", 0) == 0) {
      seen_k66 = true;
      EXPECT_NE(line.find(",53/144,"), std::string::npos) << line;
    }
    if (line.rfind("6,1,", 0) == 0) {
      EXPECT_NE(line.find(",8/15,"), std::string::npos) << line;
    }
  }
  EXPECT_TRUE(seen_k33);
  EXPECT_TRUE(seen_k66);
}

TEST(Cli, SuiteTvEmptyNGivesZero) {
  const CliResult r = run({"suite-tv", "--sizes", "4,6", "--empty-n", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  for (const auto& row : j["rows"]) EXPECT_EQ(row["tv"]["value"].get<double>(), 0.0);
}

TEST(Cli, SuiteTvFlagsSingleEdge) {
  const CliResult r = run({"suite-tv", "--sizes", "2", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["rows"][0]["degenerate"].get<bool>());
}

TEST(Cli, OutputIsByteDeterministic) {
  const std::vector<std::string> args{"disjoint", "--family", "complete", "-n", "8", "--mode",
                                      "montecarlo", "--samples", "2000", "--seed", "7"};
  const CliResult a = run(args);
  const CliResult b = run(args);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, b.out);

  const CliResult g1 = run({"generate", "--family", "random_regular", "-n", "10", "-d", "3", "--seed", "4"});
  const CliResult g2 = run({"generate", "--family", "random_regular", "-n", "10", "-d", "3", "--seed", "4"});
  ASSERT_EQ(g1.code, kExitOk) << g1.err;
  EXPECT_EQ(g1.out, g2.out);
}

TEST(Cli, OutFileAndGenerateRoundTrip) {
  const std::string el = temp_path("k33.el");
  ASSERT_EQ(run({"generate", "--family", "multipartite", "-a", "2", "-b", "3", "--out", el}).code,
            kExitOk);
  const CliResult bip = run({"expander", "--file", el, "--bipartite", "--nu", "0.1", "--tau", "0.2"});
  ASSERT_EQ(bip.code, kExitOk) << bip.err;
  EXPECT_EQ(nlohmann::json::parse(bip.out)["mode"], "bipartite");

  const std::string report = temp_path("count.json");
  ASSERT_EQ(run({"count", "--file", el, "--out", report}).code, kExitOk);
  std::ifstream in(report);
  EXPECT_EQ(nlohmann::json::parse(in)["pma"], "6");
}

TEST(Cli, SwitchingAndWalksReports) {
  const CliResult s = run({"switching", "--family", "complete", "-n", "6"});
  ASSERT_EQ(s.code, kExitOk) << s.err;
  const auto sj = nlohmann::json::parse(s.out);
  EXPECT_TRUE(sj["double_count_holds"].get<bool>());

  const CliResult w = run({"walks", "--family", "complete", "-n", "6", "--ell", "3", "--nu", "0.2"});
  ASSERT_EQ(w.code, kExitOk) << w.err;
  const auto wj = nlohmann::json::parse(w.out);
  EXPECT_EQ(wj["power"], 2);
  EXPECT_TRUE(wj["mixing"]["holds"].get<bool>());
  EXPECT_TRUE(wj["walks"]["holds"].get<bool>());
}

TEST(ParseEdgeSpec, Examples) {
  EXPECT_EQ(parse_edge_spec("0-1, 3-2"), EdgeSet({{0, 1}, {2, 3}}));
  EXPECT_EQ(parse_edge_spec("none").size(), 0u);
  EXPECT_EQ(parse_edge_spec("").size(), 0u);
  for (const char* bad : {"0", "0-", "-1", "a-b", "0-1-2", "1-x"}) {
    EXPECT_THROW(parse_edge_spec(bad), Error) << bad;
  }
  EXPECT_THROW(parse_edge_spec("2-2"), Error);
}
