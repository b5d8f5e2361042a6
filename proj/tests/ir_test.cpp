// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "vsv/ir.hpp"

namespace vsv {
namespace {

TransitionSystem two_vars() {
  TransitionSystem ts;
  ts.variables = {{"a", {"0", "1"}, {"0", "1"}, VarRole::kScript}, {"b", {"x", "y", "z"}, {"x"}, VarRole::kScript}};
  RuleList ra;
  ra.fallback = ValueChoice::of({"1", "0"});
  RuleList rb;
  rb.cases.push_back({Guard::atom("a", "1"), ValueChoice::of({"z", "y"})});
  ts.rules = {{"a", ra}, {"b", rb}};
  return ts;
}

TEST(IrTest, InitialAssignmentsIsProduct) {
  const auto init = initial_assignments(two_vars());
  ASSERT_EQ(init.size(), 2u);
  EXPECT_EQ(init[0], (Assignment{{"a", "0"}, {"b", "x"}}));
  EXPECT_EQ(init[1], (Assignment{{"a", "1"}, {"b", "x"}}));
}

TEST(IrTest, SuccessorsFirstVariableMostSignificant) {
  const TransitionSystem ts = two_vars();
  const auto next = successors(ts, {{"a", "1"}, {"b", "x"}});
  ASSERT_EQ(next.size(), 4u);
  EXPECT_EQ(next[0], (Assignment{{"a", "1"}, {"b", "z"}}));
  EXPECT_EQ(next[1], (Assignment{{"a", "1"}, {"b", "y"}}));
  EXPECT_EQ(next[2], (Assignment{{"a", "0"}, {"b", "z"}}));
  EXPECT_EQ(next[3], (Assignment{{"a", "0"}, {"b", "y"}}));
}

TEST(IrTest, SuccessorsHold) {
  const auto next = successors(two_vars(), {{"a", "0"}, {"b", "y"}});
  ASSERT_EQ(next.size(), 2u);
  EXPECT_EQ(next[0].at("b"), "y");
  EXPECT_EQ(next[1].at("b"), "y");
}

TEST(IrTest, EmptySystemHasOneState) {
  const TransitionSystem ts;
  EXPECT_NO_THROW(check_well_formed(ts));
  EXPECT_EQ(initial_assignments(ts).size(), 1u);
  EXPECT_EQ(successors(ts, {}).size(), 1u);
}

ErrorKind problem(TransitionSystem ts) {
  try {
    check_well_formed(ts);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "system accepted";
  return ErrorKind::kSyntax;
}

TEST(IrTest, WellFormedness) {
  TransitionSystem ts = two_vars();
  EXPECT_NO_THROW(check_well_formed(ts));

  ts = two_vars();
  ts.variables[1].name = "a";
  EXPECT_EQ(problem(ts), ErrorKind::kDuplicateId);

  ts = two_vars();
  ts.variables[0].init = {"7"};
  EXPECT_EQ(problem(ts), ErrorKind::kUnknownSymbol);

  ts = two_vars();
  ts.rules.pop_back();
  EXPECT_EQ(problem(ts), ErrorKind::kSchema);

  ts = two_vars();
  ts.rules[1].rules.cases[0].guard = Guard::atom("ghost", "1");
  EXPECT_EQ(problem(ts), ErrorKind::kUnknownSymbol);

  ts = two_vars();
  ts.rules[1].rules.cases[0].choice = ValueChoice::one("w");
  EXPECT_EQ(problem(ts), ErrorKind::kUnknownSymbol);

  ts = two_vars();
  ts.specs.push_back(parse_ctl("AG b = q"));
  EXPECT_EQ(problem(ts), ErrorKind::kUnknownSymbol);

  ts = two_vars();
  ts.fairness.push_back(Guard::atom("c", "x"));
  EXPECT_EQ(problem(ts), ErrorKind::kUnknownSymbol);
}

}  // namespace
}  // namespace vsv
