#include <gtest/gtest.h>

#include <sstream>

#include "ringlab/cli/cli.hpp"
#include "ringlab/config.hpp"

using namespace ringlab;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CheckReportsVerdicts) {
  const auto r = run({"check", "T(2,Zmod(2))", "lnzs,semicommutative", "--format", "json"});
  ASSERT_EQ(r.code, cli::ok) << r.err;
  const auto j = cli::Json::parse(r.out);
  EXPECT_EQ(j["ring"], "T(2,Zmod(2))");
  EXPECT_EQ(j["results"][0]["holds"], true);
  EXPECT_EQ(j["results"][1]["holds"], false);
  EXPECT_TRUE(j["results"][0]["witness"].is_null());
  EXPECT_EQ(j["results"][1]["witness"]["w"], "[[1,0],[0,0]]");
}

TEST(Cli, ReducedWitness) {
  const auto j = cli::Json::parse(run({"check", "Zmod(4)", "reduced", "--format", "json"}).out);
  EXPECT_EQ(j["results"][0]["holds"], false);
  EXPECT_EQ(j["results"][0]["witness"]["a"], "2");
}

TEST(Cli, ExpectControlsExitCode) {
  EXPECT_EQ(run({"check", "T(3,Zmod(2))", "lnzs", "--expect", "false"}).code, cli::ok);
  EXPECT_EQ(run({"check", "T(3,Zmod(2))", "lnzs", "--expect", "true"}).code, cli::mismatch);
  EXPECT_EQ(run({"check", "T(2,Zmod(2))", "--props", "lnzs,semicommutative", "--expect", "true,false"}).code, cli::ok);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"check", "T(0,Zmod(2))", "lnzs"}).code, cli::parse_error);
  EXPECT_EQ(run({"check", "T(2,"}).code, cli::parse_error);
  EXPECT_EQ(run({"check", "Zmod(4)", "bogus"}).code, cli::usage_error);
  EXPECT_EQ(run({"frobnicate"}).code, cli::usage_error);
  EXPECT_EQ(run({"check", "Zmod(4)", "--format", "xml"}).code, cli::usage_error);
  EXPECT_EQ(run({"search", "--require", "bogus"}).code, cli::usage_error);
  EXPECT_EQ(run({"verify-paper", "--suite", "NOPE"}).code, cli::usage_error);
  const auto saved = max_carrier();
  set_max_carrier(1000);
  EXPECT_EQ(run({"check", "T(3,Zmod(4))", "lnzs"}).code, cli::resource_limit);
  set_max_carrier(saved);
}

TEST(Cli, SpecFromStdin) {
  const auto r = run({"check", "-", "reduced"}, "Fp(5)\n");
  EXPECT_EQ(r.code, cli::ok) << r.err;
  EXPECT_NE(r.out.find("reduced: true"), std::string::npos);
}

TEST(Cli, MarkdownAndText) {
  EXPECT_NE(run({"check", "Zmod(4)", "reduced", "--format", "md"}).out.find("| reduced | false |"), std::string::npos);
  const auto v = run({"verify-paper", "--suite", "T3,R4"});
  EXPECT_EQ(v.code, cli::ok);
  EXPECT_NE(v.out.find("PASS T3"), std::string::npos);
  EXPECT_NE(v.out.find("EF = [[0,1,1,2],[0,0,0,1],[0,0,0,1],[0,0,0,0]]"), std::string::npos);
}

TEST(Cli, SearchPrintsRecipes) {
  const auto r = run({"search", "--require", "lnzs", "--forbid", "semicommutative"});
  EXPECT_EQ(r.out.substr(0, 13), "T(2,Zmod(2))\n");
  const auto n = run({"search", "--require", "reduced", "--forbid", "lnzs"});
  EXPECT_EQ(n.out.substr(0, 5), "none\n");
}

TEST(Cli, JsonIsDeterministicAcrossThreadCounts) {
  const std::vector<std::string> cmd = {"check", "TrivExt(T(2,Zmod(2)))", "--format", "json"};
  auto a = cmd, b = cmd;
  a.insert(a.end(), {"--threads", "1"});
  b.insert(b.end(), {"--threads", "8"});
  EXPECT_EQ(run(a).out, run(b).out);
  set_thread_count(1);
}

TEST(Cli, TimingOnlyWhenAsked) {
  EXPECT_EQ(run({"check", "Zmod(4)", "--format", "json"}).out.find("seconds"), std::string::npos);
  EXPECT_NE(run({"check", "Zmod(4)", "--format", "json", "--timing"}).out.find("seconds"), std::string::npos);
}
