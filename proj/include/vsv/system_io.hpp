// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

// JSON form of a bare transition system, for models written by hand rather
// than translated from a graph:
//
//   {"variables": [{"name": "sw", "domain": ["on", "off"], "init": ["on", "off"]}],
//    "rules": {"sw": {"cases": [{"when": [{"lhs": "sw", "rhs": "on"}], "then": "off"}],
//                     "default": "$hold"}},
//    "fairness": [[{"lhs": "sw", "rhs": "off"}]],
//    "specs": ["AG (AF sw = on)"]}

#pragma once

#include <string>
#include <string_view>

#include "vsv/ctl.hpp"
#include "vsv/graph.hpp"
#include "vsv/ir.hpp"
#include "vsv/semantics.hpp"

namespace vsv {

inline bool looks_like_system(std::string_view text) {
  const auto doc = nlohmann::json::parse(text, nullptr, false);
  return doc.is_object() && doc.contains("variables");
}

inline TransitionSystem parse_system(std::string_view text) {
  using namespace semantics_detail;
  const json doc = graph_detail::parse_json(text, "system document");
  if (!doc.is_object() || !doc.contains("variables") || !doc.at("variables").is_array()) {
    throw Error(ErrorKind::kSchema, "system document needs a 'variables' array");
  }
  TransitionSystem ts;
  for (const auto& jv : doc.at("variables")) {
    const std::string where = "variables[" + std::to_string(ts.variables.size()) + "]";
    Variable v;
    v.name = graph_detail::require_string(jv, "name", where);
    if (!jv.contains("domain")) throw Error(ErrorKind::kSchema, where + " needs a domain");
    v.domain = strings(jv.at("domain"), where + ".domain");
    if (!jv.contains("init")) throw Error(ErrorKind::kSchema, where + " needs init");
    v.init = jv.at("init").is_string() ? std::vector<std::string>{jv.at("init").get<std::string>()}
                                       : strings(jv.at("init"), where + ".init");
    ts.variables.push_back(std::move(v));
  }
  const json rules = doc.value("rules", json::object());
  if (!rules.is_object()) throw Error(ErrorKind::kSchema, "'rules' must be an object");
  for (const auto& v : ts.variables) {
    TransitionRule r{v.name, {}};
    if (rules.contains(v.name)) r.rules = parse_rules(rules.at(v.name), "rules." + v.name, ValueChoice::keep());
    ts.rules.push_back(std::move(r));
  }
  for (auto it = rules.begin(); it != rules.end(); ++it) {
    if (ts.find_variable(it.key()) == nullptr) {
      throw Error(ErrorKind::kUnknownSymbol, "rule for undeclared variable " + it.key());
    }
  }
  if (doc.contains("fairness")) {
    for (const auto& g : doc.at("fairness")) ts.fairness.push_back(parse_guard(g, "fairness"));
  }
  if (doc.contains("specs")) {
    for (const auto& s : doc.at("specs")) {
      if (!s.is_string()) throw Error(ErrorKind::kSchema, "specs must be CTL strings");
      ts.specs.push_back(parse_ctl(s.get<std::string>()));
    }
  }
  for (const auto& v : ts.variables) ts.provenance[v.name] = Provenance{{}, VarRole::kScript, {}, {}};
  check_well_formed(ts);
  return ts;
}

}  // namespace vsv
