#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "rstem/generators.hpp"
#include "rstem/graph.hpp"
#include "rstem/tree.hpp"

namespace rstem {
namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(RSTEM_CLI_PATH) + " " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("rstem_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::remove_all(dir_);
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

std::string value_of(const std::string& out, const std::string& key) {
  std::istringstream in(out);
  std::string line;
  while (std::getline(in, line))
    if (line.rfind(key + "=", 0) == 0) return line.substr(key.size() + 1);
  return "<missing>";
}

TEST_F(Cli, GenThenOracleOnFirstSharpnessGraph) {
  auto gen = run("gen H --m 1");
  ASSERT_EQ(gen.code, 0);
  EXPECT_EQ(parse_graph(gen.out), example_H({1}));
  const auto file = write("h1.txt", gen.out);
  auto orc = run("oracle " + file);
  ASSERT_EQ(orc.code, 0);
  EXPECT_EQ(value_of(orc.out, "min_c0"), "3");
  EXPECT_EQ(value_of(orc.out, "exact"), "1");
  EXPECT_EQ(value_of(orc.out, "matrix_tree"), "1");
}

TEST_F(Cli, StatsReportsDegreeSum) {
  const auto file = write("h1.txt", run("gen H --m 1").out);
  auto r = run("stats --p 7 --m-dist 2 " + file);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(value_of(r.out, "sigma"), "9");
  EXPECT_EQ(value_of(r.out, "k14free"), "1");
  EXPECT_EQ(value_of(r.out, "connected"), "1");
  EXPECT_EQ(value_of(r.out, "exact"), "1");
}

TEST_F(Cli, VerifySecondSharpnessGraph) {
  const auto file = write("g11.txt", run("gen G --l 1 --m 1").out);
  auto r = run("verify --theorem 2 --k 3 " + file);
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("theorem,k,n,m,", 0), 0u);
  EXPECT_NE(r.out.find("HYPOTHESIS_FAILS"), std::string::npos);
}

TEST_F(Cli, GenRoundTripsAndIsByteStable) {
  for (const std::string args : {"gen random --n 9 --p 0.4 --seed 3", "gen line-tree --n 8 --seed 5",
                                 "gen k14free --n 8 --p 0.5 --seed 1", "gen G --l 2 --m 1"}) {
    auto a = run(args), b = run(args);
    ASSERT_EQ(a.code, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    Graph g = parse_graph(a.out);
    EXPECT_EQ(format_graph(g), a.out.substr(a.out.find('\n', a.out.rfind('#')) + 1)) << args;
  }
  EXPECT_EQ(parse_graph(run("gen line-tree --n 8 --seed 5").out).n(), 8);
}

TEST_F(Cli, OptimizeWritesTreeAndClaims) {
  const auto file = write("k6.txt", format_graph(complete_graph(6)));
  const auto claims = path("claims.csv");
  auto r = run("optimize --strategy bfs --claims-out " + claims + " " + file);
  ASSERT_EQ(r.code, 0);
  Graph k6 = complete_graph(6);
  SpanningTree t = parse_tree(r.out, k6);
  EXPECT_EQ(t.edges().size(), 5u);
  EXPECT_NE(r.out.find("# c0=0"), std::string::npos);
  std::ifstream in(claims);
  std::string header;
  std::getline(in, header);
  EXPECT_EQ(header, "claim,status,witness,detail");
  EXPECT_EQ(run("optimize --restarts " + file).code, 0);
  EXPECT_EQ(run("optimize --max-steps 0 " + file).code, 2);
}

TEST_F(Cli, ScanIsDeterministicAcrossJobs) {
  const std::string args = "scan --generator line-tree:nmin=4,nmax=8 --trials 12 --seed 4";
  auto a = run(args + " --jobs 1"), b = run(args + " --jobs 3");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out.rfind("n,m,k14free,sigma,threshold,verdict,c0,steps\n", 0), 0u);
  EXPECT_EQ(std::count(a.out.begin(), a.out.end(), '\n'), 13);
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run("").code, 1);
  EXPECT_EQ(run("frobnicate").code, 1);
  EXPECT_EQ(run("stats " + path("missing.txt")).code, 1);
  EXPECT_EQ(run("stats " + write("loop.txt", "2 1\n0 0\n")).code, 1);
  EXPECT_EQ(run("optimize " + write("split.txt", "4 2\n0 1\n2 3\n")).code, 1);
  EXPECT_EQ(run("gen H --m 0").code, 1);
  EXPECT_EQ(run("scan --generator nope").code, 1);
  const auto k7 = write("k7.txt", format_graph(complete_graph(7)));
  EXPECT_EQ(run("oracle --max-trees 10 " + k7).code, 0);
  EXPECT_EQ(run("oracle --count --max-trees 10 " + k7).code, 2);
  EXPECT_EQ(run("stats --sigma-budget 1 --p 2 " + write("p30.txt", format_graph(path_graph(30)))).code, 2);
}

}  // namespace
}  // namespace rstem
