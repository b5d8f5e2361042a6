// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

// State-space reduction passes.
//
//  * remove_nose_nodes: drops side-effect-free single-output forwarding
//    nodes from the graph and reconnects their predecessors to their
//    successors.
//  * encode_state_into_output: folds a node's internal state into its output
//    variable through a bijection g between states and (possibly duplicated)
//    output values, so the output rule becomes g(f_state(in, g^-1(out))).

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "vsv/error.hpp"
#include "vsv/graph.hpp"
#include "vsv/semantics.hpp"

namespace vsv {

struct PassReport {
  std::vector<std::string> removed_nodes;
  std::vector<std::string> encoded_nodes;
  std::vector<std::pair<std::string, std::string>> not_applicable;  // node, reason

  std::string text() const {
    std::string s;
    s += "nose: removed " + std::to_string(removed_nodes.size()) + " node(s)";
    for (const auto& n : removed_nodes) s += (&n == &removed_nodes.front() ? ": " : ", ") + n;
    s += "\nencode: encoded " + std::to_string(encoded_nodes.size()) + " node(s)";
    for (const auto& n : encoded_nodes) s += (&n == &encoded_nodes.front() ? ": " : ", ") + n;
    s += "\n";
    for (const auto& [node, why] : not_applicable) s += "encode: skipped " + node + " (" + why + ")\n";
    return s;
  }
};

inline bool is_nose(const NodeSemantics& sem) {
  if (sem.cls != SemanticsClass::kSingleOutput) return false;
  if (!sem.var_rules.empty() || !sem.states.empty() || sem.input_ports.empty()) return false;
  bool only_inputs = true;
  for (const auto& c : sem.out_rules.cases)
    c.guard.for_each_atom([&](const Atom& a) { only_inputs = only_inputs && a.lhs == kInPlaceholder; });
  return only_inputs;
}

// Removes NoSE nodes one at a time, in declaration order, until none remain.
// Each incoming edge is replaced in place by one edge per outgoing target, so
// reconnected edges keep the incoming edge's position and then the order of
// the outgoing edges. Exact duplicate edges are dropped.
inline NodeGraph remove_nose_nodes(NodeGraph g, const SemanticsRegistry& reg,
                                   PassReport* report = nullptr) {
  while (true) {
    auto it = std::find_if(g.nodes.begin(), g.nodes.end(), [&](const Node& n) {
      const NodeSemantics* s = reg.find(n.kind);
      return s != nullptr && is_nose(*s);
    });
    if (it == g.nodes.end()) break;
    const std::string id = it->id;
    g.nodes.erase(it);
    if (report) report->removed_nodes.push_back(id);

    std::vector<PortRef> targets;
    for (const auto& e : g.edges)
      if (e.from.node == id) targets.push_back(e.to);

    std::vector<Edge> rebuilt;
    auto push = [&](PortRef from, PortRef to) {
      for (const auto& e : rebuilt)
        if (e.from == from && e.to == to) return;
      rebuilt.push_back(Edge{std::move(from), std::move(to), 0});
    };
    for (const auto& e : g.edges) {
      if (e.from.node == id) continue;
      if (e.to.node == id) {
        for (const auto& t : targets)
          if (t.node != id) push(e.from, t);
        continue;
      }
      push(e.from, e.to);
    }
    g.edges = std::move(rebuilt);
    g.renumber_edges();
  }
  return g;
}

struct OutBijection {
  // One entry per state, in state declaration order.
  std::vector<std::pair<std::string, std::string>> encoding;  // state -> value
  std::map<std::string, std::string> f_out;                   // state -> original output

  const std::string& encode(const std::string& state) const {
    for (const auto& [s, v] : encoding)
      if (s == state) return v;
    throw Error(ErrorKind::kUnknownSymbol, "state " + state + " has no encoding");
  }

  std::optional<std::string> decode(const std::string& value) const {
    for (const auto& [s, v] : encoding)
      if (v == value) return s;
    return std::nullopt;
  }

  friend bool operator==(const OutBijection&, const OutBijection&) = default;
};

// Reason the encoding cannot be applied to `sem`, or nullopt when it can.
inline std::optional<std::string> encoding_obstacle(const NodeSemantics& sem) {
  if (sem.states.empty()) return "no internal states";
  if (sem.output_ports.empty()) return "no output port";
  bool out_ok = true;
  for (const auto& c : sem.out_rules.cases) {
    c.guard.for_each_atom([&](const Atom& a) { out_ok = out_ok && a.lhs == kStatePlaceholder; });
    if (!c.choice.deterministic() || c.choice.hold) return "output is not a function of the state";
  }
  if (!out_ok) return "output guards reference more than the internal state";
  if (sem.out_rules.fallback.hold || sem.out_rules.fallback.values.size() != 1)
    return "output default is not a single value";
  bool reads_out = false;
  for (const auto& c : sem.state_rules.cases) reads_out = reads_out || c.guard.references(kOutPlaceholder);
  for (const auto& [var, cases] : sem.var_rules)
    for (const auto& c : cases) reads_out = reads_out || c.guard.references(kOutPlaceholder);
  if (reads_out) return "state or variable rules read the output signal";
  return std::nullopt;
}

inline std::optional<OutBijection> build_out_bijection(const NodeSemantics& sem) {
  if (encoding_obstacle(sem)) return std::nullopt;
  OutBijection bij;
  for (const auto& s : sem.states) {
    std::string out = sem.out_rules.fallback.values.front();
    for (const auto& c : sem.out_rules.cases) {
      bool matches = false;
      for (const auto& t : c.guard.terms()) {
        bool all = true;
        for (const auto& a : t) all = all && a.value == s;
        if (all) {
          matches = true;
          break;
        }
      }
      if (matches) {
        out = c.choice.values.front();
        break;
      }
    }
    bij.f_out[s] = out;
  }
  std::set<std::string> taken(sem.output_ports.begin(), sem.output_ports.end());
  taken.insert(kNone);
  std::map<std::string, int> uses;
  for (const auto& [s, v] : bij.f_out) ++uses[v];
  for (const auto& s : sem.states) {
    const std::string& out = bij.f_out.at(s);
    if (uses[out] == 1) {
      bij.encoding.emplace_back(s, out);
      continue;
    }
    std::string name = out + "_" + s;
    for (int k = 2; taken.count(name) != 0 || bij.decode(name); ++k) name = out + "_" + s + "_" + std::to_string(k);
    taken.insert(name);
    bij.encoding.emplace_back(s, name);
  }
  return bij;
}

inline NodeRelations encode_state_into_output(const NodeRelations& rel, const OutBijection& bij) {
  if (!rel.state_var || !rel.output_var) {
    throw Error(ErrorKind::kSchema, "node " + rel.node_id + " has no state/output pair to encode");
  }
  const std::string state_var = *rel.state_var;
  const std::string out_var = *rel.output_var;
  const Variable* sv = rel.find_variable(state_var);
  const Variable* ov = rel.find_variable(out_var);

  auto rewrite = [&](const Guard& g) {
    return g.expand([&](const Atom& a) {
      if (a.lhs == state_var) return Guard::atom(out_var, bij.encode(a.value));
      return Guard::atom(a.lhs, a.value);
    });
  };
  auto map_choice = [&](const ValueChoice& c) {
    if (c.hold) return c;
    ValueChoice r;
    for (const auto& v : c.values) r.values.push_back(bij.encode(v));
    return r;
  };

  NodeRelations out = rel;
  out.state_var.reset();
  out.encoded = true;

  std::vector<std::string> domain;
  std::set<std::string> range;
  for (const auto& [s, v] : bij.encoding) {
    domain.push_back(v);
    range.insert(v);
  }
  for (const auto& p : ov->domain) {
    if (p != kNone && range.count(p) == 0) domain.push_back(p);
  }
  std::vector<std::string> init;
  for (const auto& s : sv->init) init.push_back(bij.encode(s));

  out.variables.clear();
  for (const auto& v : rel.variables) {
    if (v.name == state_var) continue;
    if (v.name == out_var) {
      out.variables.push_back(Variable{out_var, domain, init, VarRole::kOutput});
    } else {
      out.variables.push_back(v);
    }
  }

  out.out_rules.cases.clear();
  for (const auto& c : rel.state_rules.cases) out.out_rules.cases.push_back({rewrite(c.guard), map_choice(c.choice)});
  out.out_rules.fallback = map_choice(rel.state_rules.fallback);
  out.state_rules = RuleList{};
  for (auto& [var, cases] : out.var_rules)
    for (auto& c : cases) c.guard = rewrite(c.guard);

  Guard fair;
  for (const auto& v : init) fair.or_with(Guard::atom(out_var, v));
  out.fairness = {fair};

  out.output_aliases.clear();
  for (const auto& v : ov->domain) {
    std::vector<std::string> aliases;
    for (const auto& [s, enc] : bij.encoding)
      if (bij.f_out.at(s) == v) aliases.push_back(enc);
    if (aliases.empty() && v != kNone) aliases.push_back(v);
    out.output_aliases[v] = aliases;
  }
  out.state_encoding.clear();
  out.output_labels.clear();
  for (const auto& [s, enc] : bij.encoding) {
    out.state_encoding[s] = enc;
    const std::string& orig = bij.f_out.at(s);
    out.output_labels[enc] = orig == kNone ? "internal:" + s : orig;
  }
  return out;
}

}  // namespace vsv
