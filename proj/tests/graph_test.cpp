// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include "support/generators.hpp"
#include "vsv/graph.hpp"

namespace vsv {
namespace {

ErrorKind kind_of(const std::string& text) {
  try {
    parse_graph(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for " << text;
  return ErrorKind::kSyntax;
}

TEST(GraphTest, ParsesMovieSkip) {
  const NodeGraph g = parse_graph(gen::fixture("movie_skip.json"));
  ASSERT_EQ(g.nodes.size(), 5u);
  ASSERT_EQ(g.edges.size(), 5u);
  EXPECT_EQ(g.nodes[2].id, "MovieClip3");
  EXPECT_EQ(g.nodes[2].kind, "MovieClip");
  EXPECT_EQ(g.edges[3].from, (PortRef{"MovieClip3", "Skipped"}));
  EXPECT_EQ(g.edges[3].to, (PortRef{"If5", "In"}));
  for (std::size_t i = 0; i < g.edges.size(); ++i) EXPECT_EQ(g.edges[i].order_index, i);
  EXPECT_EQ(g.index_of("If5"), 5u);
  EXPECT_EQ(g.index_of("Nope"), 0u);
  EXPECT_EQ(g.find_node("Nope"), nullptr);
}

TEST(GraphTest, SerializeRoundTrips) {
  const NodeGraph g = parse_graph(gen::fixture("movie_skip.json"));
  EXPECT_EQ(parse_graph(serialize_graph(g)), g);
}

TEST(GraphTest, ScriptVariables) {
  const NodeGraph g = parse_graph(R"({"nodes": [], "script_variables": [
      {"name": "Mode", "domain": ["a", "b"], "init": "b"}]})");
  ASSERT_EQ(g.script_variables.size(), 1u);
  EXPECT_EQ(g.script_variables[0].init, "b");
}

TEST(GraphTest, Errors) {
  EXPECT_EQ(kind_of("{"), ErrorKind::kSyntax);
  EXPECT_EQ(kind_of("[]"), ErrorKind::kSchema);
  EXPECT_EQ(kind_of(R"({"nodes": [{"id": "A"}]})"), ErrorKind::kSchema);
  EXPECT_EQ(kind_of(R"({"nodes": [{"id": "A", "kind": "If"}, {"id": "A", "kind": "If"}]})"),
            ErrorKind::kDuplicateId);
  EXPECT_EQ(kind_of(R"({"nodes": [{"id": "A", "kind": "If"}], "edges": [{"from": "A.True", "to": "B.In"}]})"),
            ErrorKind::kUnknownNode);
  EXPECT_EQ(kind_of(R"({"nodes": [{"id": "A", "kind": "If"}], "edges": [{"from": "A", "to": "A.In"}]})"),
            ErrorKind::kSchema);
  EXPECT_EQ(kind_of(R"({"script_variables": [{"name": "M", "domain": ["a"], "init": "z"}]})"),
            ErrorKind::kSchema);
  EXPECT_EQ(kind_of(R"({"script_variables": [{"name": "M", "domain": [], "init": "a"}]})"),
            ErrorKind::kSchema);
}

TEST(GraphTest, UnknownNodeMessageNamesNode) {
  try {
    parse_graph(R"({"nodes": [{"id": "A", "kind": "If"}], "edges": [{"from": "A.True", "to": "Ghost.In"}]})");
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("Ghost"), std::string::npos);
  }
}

}  // namespace
}  // namespace vsv
