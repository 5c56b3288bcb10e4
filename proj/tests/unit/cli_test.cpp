#include <gtest/gtest.h>

#include <cstdlib>
#include <random>
#include <sstream>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = powfree::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(POWFREE_FIXTURE_DIR) + "/" + name; }

}  // namespace

TEST(Cli, SpecExamples) {
  EXPECT_EQ(run({"check", "--alpha", "2+", "--word", "01101001"}).code, 0);
  const auto power = run({"power", "--r", "1234", "--alpha", "7/4"});
  EXPECT_EQ(power.code, 0);
  EXPECT_EQ(power.out, "1234123\n");
  EXPECT_EQ(run({"exponent", "--word", "abab"}).out, "2 r=ab [0,4)\n");
}

TEST(Cli, CheckVerdicts) {
  const auto bad = run({"check", "--alpha", "2", "--word", "abab"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out, "not-free 2 r=ab [0,4)\n");
  EXPECT_EQ(run({"check", "--alpha", "2+", "--stream", "tm:0,1", "--from", "0", "--to", "5000"}).code, 0);
  const auto left = run({"check", "--alpha", "2", "--stream", "rev(tm:0,1)+00", "--from", "-6", "--to", "0"});
  EXPECT_EQ(left.code, 1);
  EXPECT_EQ(run({"check", "--alpha", "2", "--stream", "tm:0,1"}).code, 2);
}

TEST(Cli, PowerFeedsExponent) {
  const auto power = run({"power", "--r", "0121", "--alpha", "9/4"});
  std::string word = power.out.substr(0, power.out.size() - 1);
  const auto exp = run({"exponent", "--word", word});
  EXPECT_EQ(exp.out.substr(0, 4), "9/4 ");
}

TEST(Cli, TmAndEnumerate) {
  EXPECT_EQ(run({"tm", "--length", "8", "--letters", "ab"}).out, "abbabaab\n");
  const auto e = run({"enumerate", "--alpha", "2", "--k", "3", "--max-len", "5", "--workers", "3"});
  EXPECT_EQ(e.code, 0);
  EXPECT_EQ(e.out, "1\t3\n2\t6\n3\t12\n4\t18\n5\t30\n");
}

TEST(Cli, EnumerateBudgetFromEnvironment) {
  setenv("POWFREE_BUDGET", "50", 1);
  const auto e = run({"enumerate", "--alpha", "2", "--max-len", "10"});
  unsetenv("POWFREE_BUDGET");
  EXPECT_EQ(e.code, 3);
}

TEST(Cli, GlueAndNonrecur) {
  const auto g = run({"glue", "--fixture", fixture("g1.delta"), "--steps", "50"});
  EXPECT_EQ(g.code, 0) << g.err;
  EXPECT_NE(g.out.find("j=2 y=2 pi_size=1 case=A eta_len_before=30 eta_len_after=27"), std::string::npos);
  EXPECT_NE(g.out.find("verdict: free\n"), std::string::npos);
  EXPECT_EQ(run({"glue", "--fixture", fixture("g1.delta"), "--stream", "tm:0,1"}).code, 2);

  const auto n = run({"nonrecur", "--fixture", fixture("nonrecur.bi"), "--window", "512"});
  EXPECT_EQ(n.code, 0) << n.err;
  EXPECT_NE(n.out.find("case_taken: glue\n"), std::string::npos);
  EXPECT_EQ(run({"nonrecur", "--fixture", fixture("nonrecur.bi"), "--alpha", "4"}).code, 2);
  const auto wide = run({"nonrecur", "--fixture", fixture("nonrecur.bi"), "--word", "0110100", "--max-eta", "1000"});
  EXPECT_EQ(wide.code, 2);
  EXPECT_NE(wide.err.find("warning"), std::string::npos);
}

TEST(Cli, VerifyLemmas) {
  const auto r = run({"verify-lemmas", "--seed", "3", "--count", "20"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("verdict: pass"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args = {"glue", "--fixture", fixture("g1.delta"), "--steps", "200"};
  EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"check", "--word", "01"}).code, 2);
  EXPECT_EQ(run({"check", "--alpha", "x", "--word", "01"}).code, 2);
  EXPECT_EQ(run({"exponent", "--word", "AB"}).code, 2);
  EXPECT_EQ(run({"power", "--r", "abc", "--alpha", "3/2"}).code, 2);
  EXPECT_EQ(run({"tm", "--length", "-3"}).code, 2);
  EXPECT_EQ(run({"glue", "--fixture", "/nonexistent"}).code, 2);
  EXPECT_EQ(run({"check", "--help"}).code, 0);
}

TEST(Cli, FuzzedFlagsNeverCrash) {
  const std::vector<std::string> pool = {"check", "exponent", "power", "tm", "enumerate", "glue", "nonrecur",
                                         "verify-lemmas", "--alpha", "--word", "--stream", "--from", "--to", "--r",
                                         "--length", "--k", "--max-len", "--fixture", "--steps", "--seed", "--count",
                                         "2", "5/2", "0/0", "-1", "", "abab", "rev(", "tm:0,1", "999999999999999999999"};
  std::mt19937 rng(17);
  for (int iter = 0; iter < 400; ++iter) {
    std::vector<std::string> args;
    const int n = 1 + static_cast<int>(rng() % 6);
    for (int i = 0; i < n; ++i) args.push_back(pool[rng() % pool.size()]);
    const auto r = run(args);
    EXPECT_TRUE(r.code >= 0 && r.code <= 3);
  }
}
