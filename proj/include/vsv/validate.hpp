// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vsv/graph.hpp"
#include "vsv/semantics.hpp"

namespace vsv {

enum class Severity { kWarning, kError };

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string node;                 // node id, when one is involved
  std::optional<std::size_t> edge;  // edge order_index, when one is involved
  std::string message;

  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

inline std::string to_string(const Diagnostic& d) {
  std::string s = d.severity == Severity::kError ? "error" : "warning";
  if (d.edge) s += " [edge " + std::to_string(*d.edge) + "]";
  if (!d.node.empty()) s += " [" + d.node + "]";
  return s + ": " + d.message;
}

// Errors that block translation: unknown node kinds and edges naming ports
// the resolved kind does not declare.
inline std::vector<Diagnostic> validate_graph(const NodeGraph& g, const SemanticsRegistry& reg) {
  std::vector<Diagnostic> out;
  auto has = [](const std::vector<std::string>& v, const std::string& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  for (const auto& n : g.nodes) {
    if (reg.find(n.kind) == nullptr) {
      out.push_back({Severity::kError, n.id, std::nullopt, "unknown node kind " + n.kind});
    }
  }
  for (const auto& e : g.edges) {
    const Node* from = g.find_node(e.from.node);
    const Node* to = g.find_node(e.to.node);
    if (from == nullptr || to == nullptr) {
      const std::string missing = from == nullptr ? e.from.node : e.to.node;
      out.push_back({Severity::kError, missing, e.order_index, "edge references unknown node " + missing});
      continue;
    }
    if (const NodeSemantics* s = reg.find(from->kind); s != nullptr && !has(s->output_ports, e.from.port)) {
      out.push_back({Severity::kError, from->id, e.order_index,
                     "node " + from->id + " (" + from->kind + ") has no output port " + e.from.port});
    }
    if (const NodeSemantics* s = reg.find(to->kind); s != nullptr && !has(s->input_ports, e.to.port)) {
      out.push_back({Severity::kError, to->id, e.order_index,
                     "node " + to->id + " (" + to->kind + ") has no input port " + e.to.port});
    }
  }
  for (const auto& d : g.script_variables) {
    if (std::find(d.domain.begin(), d.domain.end(), d.init) == d.domain.end()) {
      out.push_back({Severity::kError, {}, std::nullopt,
                     "script variable " + d.name + ": init " + d.init + " not in domain"});
    }
  }
  return out;
}

// Unconnected ports are legal; they are reported as warnings only.
inline std::vector<Diagnostic> unconnected_ports(const NodeGraph& g, const SemanticsRegistry& reg) {
  std::vector<Diagnostic> out;
  std::set<std::pair<std::string, std::string>> used_out, used_in;
  for (const auto& e : g.edges) {
    used_out.insert({e.from.node, e.from.port});
    used_in.insert({e.to.node, e.to.port});
  }
  for (const auto& n : g.nodes) {
    const NodeSemantics* s = reg.find(n.kind);
    if (s == nullptr) continue;
    for (const auto& p : s->input_ports) {
      if (used_in.count({n.id, p}) == 0)
        out.push_back({Severity::kWarning, n.id, std::nullopt, "input port " + n.id + "." + p + " is unconnected"});
    }
    for (const auto& p : s->output_ports) {
      if (used_out.count({n.id, p}) == 0)
        out.push_back({Severity::kWarning, n.id, std::nullopt, "output port " + n.id + "." + p + " is unconnected"});
    }
  }
  return out;
}

inline bool has_errors(const std::vector<Diagnostic>& ds) {
  return std::any_of(ds.begin(), ds.end(),
                     [](const Diagnostic& d) { return d.severity == Severity::kError; });
}

// Copies port lists from the registry onto every node.
inline NodeGraph resolve_ports(NodeGraph g, const SemanticsRegistry& reg) {
  for (auto& n : g.nodes) {
    const NodeSemantics& s = reg.at(n.kind);
    n.input_ports = s.input_ports;
    n.output_ports = s.output_ports;
  }
  return g;
}

}  // namespace vsv
