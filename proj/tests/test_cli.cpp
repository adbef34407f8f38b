#include <gtest/gtest.h>

#include <sstream>

#include "redword/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "redword");
  std::vector<const char*> argv;
  for (const auto& a : args)
    argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = redword::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

} // namespace

TEST(Cli, Words) {
  const auto r = invoke({"words", "[25314]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "12432\n14232\n14323\n41232\n41323\n43123\n");
  const auto j = redword::json::parse(invoke({"words", "2 5 3 1 4", "--format", "json"}).out);
  EXPECT_EQ(j["count"], 6);
}

TEST(Cli, Classes) {
  const auto r = invoke({"classes", "[25314]", "--kind", "commutation"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "C1: 12432 14232 41232\nC2: 14323 41323 43123\n");
  EXPECT_EQ(invoke({"classes", "[25314]"}).out,
            "B1: 12432\nB2: 14232 14323\nB3: 41232 41323\nB4: 43123\n");
}

TEST(Cli, Table) {
  const auto r = invoke({"table", "[25314]", "--format", "csv"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, ",C1,C2\nB1,12432,\nB2,14232,14323\nB3,41232,41323\nB4,,43123\n");
}

TEST(Cli, GraphDefaultsToDot) {
  const auto r = invoke({"graph", "[25314]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("graph G {", 0), 0u);
  EXPECT_NE(r.out.find("[style=dashed]"), std::string::npos);
  const auto g = invoke({"graph", "[25314]", "--which", "gamma"});
  EXPECT_NE(g.out.find("\"B1\" -- \"C1\" [label=\"12432\"]"), std::string::npos);
  const auto j = invoke({"graph", "[25314]", "--which", "gb", "--format", "json"});
  EXPECT_EQ(j.code, 0);
  EXPECT_NO_THROW(redword::json::parse(j.out));
}

TEST(Cli, Check) {
  const auto r = invoke({"check", "[4132]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("achieves_lower            true"), std::string::npos);
  EXPECT_NE(r.out.find("wid                       2"), std::string::npos);
  const auto j = redword::json::parse(invoke({"check", "[25314]", "--format", "json"}).out);
  EXPECT_EQ(j["r"], 6);
  EXPECT_EQ(j["b"], 4);
  EXPECT_EQ(j["c"], 2);
}

TEST(Cli, Interval) {
  const auto r = invoke({"interval", "[4132]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("width        2"), std::string::npos);
  EXPECT_NE(r.out.find("support      3 {1,2,3}"), std::string::npos);
}

TEST(Cli, Counts) {
  EXPECT_EQ(invoke({"counts", "--n", "5"}).out, "n 5  catalan 42  upper 45  lower 65\n");
  const auto csv = invoke({"counts", "--n", "3", "--range", "--format", "csv"});
  EXPECT_EQ(csv.out, "n,catalan,upper,lower\n1,1,1,1\n2,2,2,2\n3,5,6,6\n");
}

TEST(Cli, ScanAndConjecture) {
  const auto s = invoke({"scan", "--n", "4", "--workers", "2"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("23 (closed form 23, match yes)"), std::string::npos);
  const auto c = invoke({"conjecture", "--n", "4"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "n 4: checked 24, agree 24, counterexamples 0, skipped 0\n");
}

TEST(Cli, UsageErrorsExitOne) {
  EXPECT_EQ(invoke({}).code, 1);
  EXPECT_EQ(invoke({"words"}).code, 1);
  EXPECT_EQ(invoke({"words", "[2234]"}).code, 1);
  EXPECT_EQ(invoke({"words", "[12345678901]"}).code, 1);  // above --max-n
  EXPECT_EQ(invoke({"scan", "--n", "11"}).code, 1);
  EXPECT_EQ(invoke({"table", "[21]", "--format", "xml"}).code, 1);
}

TEST(Cli, CapSkipIsDistinct) {
  const auto lax = invoke({"words", "[54321]", "--cap", "10"});
  EXPECT_EQ(lax.code, 0);
  EXPECT_NE(lax.err.find("skipped"), std::string::npos);
  EXPECT_EQ(invoke({"words", "[54321]", "--cap", "10", "--strict"}).code, 3);
  EXPECT_EQ(invoke({"check", "[54321]", "--cap", "10", "--strict"}).code, 3);
  EXPECT_EQ(invoke({"scan", "--n", "4", "--cap", "5", "--strict"}).code, 3);
}
