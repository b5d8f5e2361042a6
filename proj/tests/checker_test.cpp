// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "vsv/checker.hpp"
#include "vsv/smv.hpp"
#include "vsv/system_io.hpp"
#include "vsv/translator.hpp"

namespace vsv {
namespace {

std::vector<SpecRequest> flag_reset() { return parse_spec_requests(gen::fixture("flag_reset.json")); }

TransitionSystem movie(const std::string& file, bool encode = false) {
  return translate(parse_graph(gen::fixture(file)), builtin_registry(), flag_reset(), {encode});
}

TransitionSystem coin() {
  TransitionSystem ts;
  ts.variables = {{"x", {"a", "b"}, {"a"}, VarRole::kScript}};
  ts.rules = {{"x", RuleList{{}, ValueChoice::of({"a", "b"})}}};
  return ts;
}

TEST(CheckerTest, SwitchStateSpace) {
  const auto k = build_state_space(parse_system(gen::fixture("sw.json")));
  EXPECT_EQ(k.size(), 2u);
  EXPECT_EQ(k.initial().size(), 2u);
  auto [b, e] = k.successors(0);
  ASSERT_EQ(e - b, 1);
  EXPECT_EQ(k.assignment(*b).at("sw"), "off");
}

TEST(CheckerTest, EmptySystem) {
  const auto r = reachable_stats(TransitionSystem{});
  EXPECT_EQ(r.count, 1u);
  EXPECT_EQ(r.formatted, "2^0.0000");
  EXPECT_TRUE(check(TransitionSystem{}, parse_ctl("AG TRUE")).holds);
}

TEST(CheckerTest, FrozenCounts) {
  EXPECT_EQ(reachable_stats(movie("movie_skip.json")).count, 16u);
  EXPECT_EQ(reachable_stats(movie("movie_skip.json", true)).count, 14u);
  EXPECT_EQ(reachable_stats(movie("movie_skip.json")).formatted, "2^4.0000");
  EXPECT_EQ(reachable_stats(movie("movie_skip.json", true)).formatted, "2^3.8074");
}

TEST(CheckerTest, StateCap) {
  try {
    reachable_stats(movie("movie_skip.json"), CheckerOptions{10});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kStateCap);
    EXPECT_NE(std::string(e.what()).find("--engine nusmv"), std::string::npos);
  }
  EXPECT_NO_THROW(reachable_stats(movie("movie_skip.json"), CheckerOptions{16}));
}

TEST(CheckerTest, SwitchSpecFailsWithLasso) {
  const auto v = check_all(parse_system(gen::fixture("sw.json")));
  ASSERT_EQ(v.size(), 1u);
  EXPECT_FALSE(v[0].holds);
  ASSERT_TRUE(v[0].counterexample);
  EXPECT_EQ(v[0].counterexample->prefix, (std::vector<Assignment>{{{"sw", "on"}}}));
  EXPECT_EQ(v[0].counterexample->loop, (std::vector<Assignment>{{{"sw", "off"}}}));
}

TEST(CheckerTest, MovieSkipFlagReset) {
  const auto broken = check_all(movie("movie_skip.json"));
  const auto fixed = check_all(movie("movie_skip_fixed.json"));
  EXPECT_FALSE(broken[0].holds);
  EXPECT_TRUE(fixed[0].holds);
  ASSERT_TRUE(broken[0].counterexample);
  EXPECT_TRUE(gen::replay(*broken[0].counterexample, movie("movie_skip.json")).empty());
  EXPECT_EQ(broken[0].counterexample->loop.back().at("EventMode"), "true");
}

TEST(CheckerTest, EncodingKeepsVerdicts) {
  EXPECT_FALSE(check_all(movie("movie_skip.json", true))[0].holds);
  EXPECT_TRUE(check_all(movie("movie_skip_fixed.json", true))[0].holds);
}

TEST(CheckerTest, FairnessPrunesPaths) {
  TransitionSystem ts = coin();
  EXPECT_FALSE(check(ts, parse_ctl("AF x = b")).holds);
  EXPECT_TRUE(check(ts, parse_ctl("EG x = a")).holds);
  ts.fairness = {Guard::atom("x", "b")};
  EXPECT_TRUE(check(ts, parse_ctl("AF x = b")).holds);
  EXPECT_FALSE(check(ts, parse_ctl("EG x = a")).holds);
}

TEST(CheckerTest, FairnessMattersForMovieClip) {
  TransitionSystem ts = movie("movie_skip_fixed.json");
  EXPECT_TRUE(check_all(ts)[0].holds);
  ts.fairness.clear();
  const auto v = check_all(ts);
  EXPECT_FALSE(v[0].holds);
  ASSERT_TRUE(v[0].counterexample);
  EXPECT_EQ(v[0].counterexample->loop.front().at("MovieClip3State"), "Playing");
}

TEST(CheckerTest, NoFairStatesMakesEverythingVacuous) {
  TransitionSystem ts = coin();
  ts.fairness = {Guard::never()};
  const auto k = build_state_space(ts);
  FairCtlChecker c(k);
  EXPECT_EQ(c.fair(), StateSet(k.size(), 0));
  EXPECT_TRUE(c.check(parse_ctl("FALSE")).holds);
}

TEST(CheckerTest, CounterexamplesForEachShape) {
  const TransitionSystem ts = coin();
  for (const char* f : {"AG x = a", "AF x = b", "AX x = b", "A [ x = a U x = b ]", "x = a -> AG x = b",
                        "!(EF x = b)"}) {
    const Verdict v = check(ts, parse_ctl(f));
    EXPECT_FALSE(v.holds) << f;
    ASSERT_TRUE(v.counterexample) << f;
    EXPECT_TRUE(gen::replay(*v.counterexample, ts).empty()) << f;
  }
}

TEST(CheckerTest, BranchingFailureHasNoTrace) {
  const Verdict v = check(coin(), parse_ctl("EG x = a -> AG x = b"));
  EXPECT_FALSE(v.holds);
  EXPECT_FALSE(v.counterexample);
}

TEST(CheckerTest, AgreesWithOracle) {
  for (int seed = 0; seed < 40; ++seed) {
    gen::Rng r(31337 + seed);
    const TransitionSystem ts = gen::random_system(r, seed % 2 == 1);
    const oracle::Model m = oracle::parse_smv(emit_smv(ts));
    const oracle::Graph g = oracle::enumerate(m);
    const oracle::Evaluator ev(m, g);
    const auto k = build_state_space(ts);
    ASSERT_EQ(k.size(), g.states.size()) << seed;
    FairCtlChecker c(k);
    for (const auto& f : gen::battery(gen::random_atom(r, ts), gen::random_atom(r, ts))) {
      const Verdict v = c.check(f);
      EXPECT_EQ(v.holds, ev.check(f)) << seed << " " << to_string(f);
      if (v.counterexample) {
        EXPECT_TRUE(gen::replay(*v.counterexample, ts).empty()) << seed << " " << to_string(f);
      }
    }
  }
}

TEST(CheckerTest, FormatLog2) {
  EXPECT_EQ(format_log2(13.24291), "2^13.2429");
  EXPECT_EQ(format_log2(0), "2^0.0000");
}

}  // namespace
}  // namespace vsv
