// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

// Node graphs: the source language of the verifier.
//
// Graph documents are JSON:
//
//   {
//     "nodes": [{"id": "If5", "kind": "If"}, ...],
//     "edges": [{"from": "MovieClip3.Skipped", "to": "If5.In"}, ...],
//     "script_variables": [{"name": "EventMode",
//                           "domain": ["false", "true"], "init": "false"}]
//   }
//
// Port lists come from the semantics registry, not from the document.

#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "vsv/error.hpp"

namespace vsv {

struct PortRef {
  std::string node;
  std::string port;

  std::string str() const { return node + "." + port; }
  friend bool operator==(const PortRef&, const PortRef&) = default;
};

struct Node {
  std::string id;
  std::string kind;
  // Filled from the registry by resolve_ports(); empty after parsing.
  std::vector<std::string> input_ports;
  std::vector<std::string> output_ports;

  friend bool operator==(const Node&, const Node&) = default;
};

struct Edge {
  PortRef from;
  PortRef to;
  std::size_t order_index = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

struct ScriptVariableDecl {
  std::string name;
  std::vector<std::string> domain;
  std::string init;

  friend bool operator==(const ScriptVariableDecl&, const ScriptVariableDecl&) = default;
};

struct NodeGraph {
  std::vector<Node> nodes;
  std::vector<Edge> edges;
  std::vector<ScriptVariableDecl> script_variables;

  const Node* find_node(std::string_view id) const {
    for (const auto& n : nodes)
      if (n.id == id) return &n;
    return nullptr;
  }

  // 1-based position in declaration order, 0 when absent.
  std::size_t index_of(std::string_view id) const {
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (nodes[i].id == id) return i + 1;
    return 0;
  }

  void renumber_edges() {
    for (std::size_t i = 0; i < edges.size(); ++i) edges[i].order_index = i;
  }

  friend bool operator==(const NodeGraph&, const NodeGraph&) = default;
};

namespace graph_detail {

using nlohmann::json;

inline std::string require_string(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_string()) {
    throw Error(ErrorKind::kSchema, where + ": missing string field '" + key + "'");
  }
  std::string s = j.at(key).get<std::string>();
  if (s.empty()) {
    throw Error(ErrorKind::kSchema, where + ": field '" + key + "' is empty");
  }
  return s;
}

inline PortRef split_port(const std::string& s, const std::string& where) {
  const auto dot = s.rfind('.');
  if (dot == std::string::npos || dot == 0 || dot + 1 == s.size()) {
    throw Error(ErrorKind::kSchema, where + ": endpoint '" + s + "' is not of the form node.Port");
  }
  return PortRef{s.substr(0, dot), s.substr(dot + 1)};
}

inline json parse_json(std::string_view text, const char* what) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::kSyntax, std::string(what) + ": " + e.what());
  }
}

}  // namespace graph_detail

inline NodeGraph parse_graph(std::string_view text) {
  using graph_detail::json;
  const json doc = graph_detail::parse_json(text, "graph document");
  if (!doc.is_object()) throw Error(ErrorKind::kSchema, "graph document must be an object");

  NodeGraph g;
  std::set<std::string> ids;
  if (doc.contains("nodes")) {
    if (!doc.at("nodes").is_array()) throw Error(ErrorKind::kSchema, "'nodes' must be an array");
    std::size_t i = 0;
    for (const auto& jn : doc.at("nodes")) {
      const std::string where = "nodes[" + std::to_string(i++) + "]";
      Node n;
      n.id = graph_detail::require_string(jn, "id", where);
      n.kind = graph_detail::require_string(jn, "kind", where);
      if (!ids.insert(n.id).second) {
        throw Error(ErrorKind::kDuplicateId, "duplicate node id " + n.id);
      }
      g.nodes.push_back(std::move(n));
    }
  }
  if (doc.contains("edges")) {
    if (!doc.at("edges").is_array()) throw Error(ErrorKind::kSchema, "'edges' must be an array");
    for (const auto& je : doc.at("edges")) {
      const std::string where = "edges[" + std::to_string(g.edges.size()) + "]";
      Edge e;
      e.from = graph_detail::split_port(graph_detail::require_string(je, "from", where), where);
      e.to = graph_detail::split_port(graph_detail::require_string(je, "to", where), where);
      for (const PortRef* end : {&e.from, &e.to}) {
        if (ids.count(end->node) == 0) {
          throw Error(ErrorKind::kUnknownNode, where + ": unknown node " + end->node);
        }
      }
      e.order_index = g.edges.size();
      g.edges.push_back(std::move(e));
    }
  }
  if (doc.contains("script_variables")) {
    const json& vars = doc.at("script_variables");
    if (!vars.is_array()) throw Error(ErrorKind::kSchema, "'script_variables' must be an array");
    std::set<std::string> names;
    for (const auto& jv : vars) {
      const std::string where = "script_variables[" + std::to_string(g.script_variables.size()) + "]";
      ScriptVariableDecl d;
      d.name = graph_detail::require_string(jv, "name", where);
      if (!jv.contains("domain") || !jv.at("domain").is_array() || jv.at("domain").empty()) {
        throw Error(ErrorKind::kSchema, where + ": 'domain' must be a non-empty array");
      }
      for (const auto& v : jv.at("domain")) {
        if (!v.is_string()) throw Error(ErrorKind::kSchema, where + ": domain values must be strings");
        d.domain.push_back(v.get<std::string>());
      }
      d.init = graph_detail::require_string(jv, "init", where);
      if (std::find(d.domain.begin(), d.domain.end(), d.init) == d.domain.end()) {
        throw Error(ErrorKind::kSchema, where + ": init " + d.init + " not in domain");
      }
      if (!names.insert(d.name).second) {
        throw Error(ErrorKind::kDuplicateId, "duplicate script variable " + d.name);
      }
      g.script_variables.push_back(std::move(d));
    }
  }
  return g;
}

inline std::string serialize_graph(const NodeGraph& g) {
  using graph_detail::json;
  json doc = json::object();
  doc["nodes"] = json::array();
  for (const auto& n : g.nodes) doc["nodes"].push_back({{"id", n.id}, {"kind", n.kind}});
  doc["edges"] = json::array();
  for (const auto& e : g.edges) doc["edges"].push_back({{"from", e.from.str()}, {"to", e.to.str()}});
  if (!g.script_variables.empty()) {
    doc["script_variables"] = json::array();
    for (const auto& d : g.script_variables) {
      doc["script_variables"].push_back({{"name", d.name}, {"domain", d.domain}, {"init", d.init}});
    }
  }
  return doc.dump(2) + "\n";
}

}  // namespace vsv
