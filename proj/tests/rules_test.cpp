// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "vsv/rules.hpp"

namespace vsv {
namespace {

TEST(GuardTest, TruthConstants) {
  EXPECT_TRUE(Guard::always().is_true());
  EXPECT_FALSE(Guard::always().is_false());
  EXPECT_TRUE(Guard::never().is_false());
  EXPECT_FALSE(Guard::never().eval({}));
  EXPECT_TRUE(Guard::always().eval({}));
}

TEST(GuardTest, DisjunctionDropsDuplicateTerms) {
  Guard g = Guard::atom("a", "x");
  g.or_with(Guard::atom("b", "y")).or_with(Guard::atom("a", "x"));
  ASSERT_EQ(g.terms().size(), 2u);
  EXPECT_EQ(g.terms()[0][0].lhs, "a");
  EXPECT_EQ(g.terms()[1][0].lhs, "b");
}

TEST(GuardTest, Eval) {
  const Guard g = Guard::conj({{"a", "x"}, {"b", "y"}}).or_with(Guard::atom("c", "z"));
  EXPECT_TRUE(g.eval({{"a", "x"}, {"b", "y"}, {"c", "w"}}));
  EXPECT_FALSE(g.eval({{"a", "x"}, {"b", "n"}, {"c", "w"}}));
  EXPECT_TRUE(g.eval({{"a", "n"}, {"b", "n"}, {"c", "z"}}));
}

TEST(GuardTest, EvalUnknownVariableThrows) {
  try {
    Guard::atom("q", "x").eval({{"a", "x"}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnknownSymbol);
  }
}

TEST(GuardTest, ExpandDistributes) {
  // (s = A & i = go) with s = A rewritten to (o = 1 | o = 2)
  const Guard g = Guard::conj({{"s", "A"}, {"i", "go"}});
  const Guard e = g.expand([](const Atom& a) {
    if (a.lhs == "s") return Guard::atom("o", "1").or_with(Guard::atom("o", "2"));
    return Guard::atom(a.lhs, a.value);
  });
  ASSERT_EQ(e.terms().size(), 2u);
  EXPECT_EQ(e.terms()[0], (Term{{"o", "1"}, {"i", "go"}}));
  EXPECT_EQ(e.terms()[1], (Term{{"o", "2"}, {"i", "go"}}));
}

TEST(GuardTest, ExpandToFalseDropsTerm) {
  const Guard g = Guard::atom("s", "A").or_with(Guard::atom("t", "B"));
  const Guard e = g.expand([](const Atom& a) { return a.lhs == "s" ? Guard::never() : Guard::atom(a.lhs, a.value); });
  ASSERT_EQ(e.terms().size(), 1u);
  EXPECT_EQ(e.terms()[0][0].lhs, "t");
}

TEST(GuardTest, Rename) {
  const Guard g = Guard::atom("in", "Start").rename({{"in", "MovieClip3In"}});
  EXPECT_EQ(g, Guard::atom("MovieClip3In", "Start"));
  EXPECT_TRUE(g.references("MovieClip3In"));
  EXPECT_FALSE(g.references("in"));
}

TEST(RuleListTest, FirstMatchWins) {
  RuleList r;
  r.cases.push_back({Guard::atom("a", "x"), ValueChoice::one("first")});
  r.cases.push_back({Guard::always(), ValueChoice::one("second")});
  r.fallback = ValueChoice::one("none");
  EXPECT_EQ(r.select({{"a", "x"}}).values, std::vector<std::string>{"first"});
  EXPECT_EQ(r.select({{"a", "y"}}).values, std::vector<std::string>{"second"});
}

TEST(RuleListTest, FallbackHoldsByDefault) {
  RuleList r;
  EXPECT_TRUE(r.select({}).hold);
  EXPECT_TRUE(ValueChoice::keep().deterministic());
  EXPECT_FALSE(ValueChoice::of({"a", "b"}).deterministic());
}

}  // namespace
}  // namespace vsv
