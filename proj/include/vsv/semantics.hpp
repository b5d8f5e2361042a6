// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

// Node semantics: per-kind transition relations for output signal, internal
// state and script variables, and their instantiation for concrete nodes.

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "vsv/error.hpp"
#include "vsv/graph.hpp"
#include "vsv/ir.hpp"
#include "vsv/rules.hpp"

namespace vsv {

inline constexpr const char* kInPlaceholder = "in";
inline constexpr const char* kOutPlaceholder = "out";
inline constexpr const char* kStatePlaceholder = "state";

enum class SemanticsClass { kSingleOutput, kEntryPoint, kBranch, kStateTransition, kCustom };

inline const char* to_string(SemanticsClass c) {
  switch (c) {
    case SemanticsClass::kSingleOutput: return "SingleOutput";
    case SemanticsClass::kEntryPoint: return "EntryPoint";
    case SemanticsClass::kBranch: return "Branch";
    case SemanticsClass::kStateTransition: return "StateTransition";
    case SemanticsClass::kCustom: return "Custom";
  }
  return "?";
}

inline std::optional<SemanticsClass> parse_semantics_class(std::string_view s) {
  for (auto c : {SemanticsClass::kSingleOutput, SemanticsClass::kEntryPoint,
                 SemanticsClass::kBranch, SemanticsClass::kStateTransition,
                 SemanticsClass::kCustom}) {
    if (s == to_string(c)) return c;
  }
  return std::nullopt;
}

struct NodeSemantics {
  std::string kind;
  SemanticsClass cls = SemanticsClass::kCustom;
  std::vector<std::string> input_ports;
  std::vector<std::string> output_ports;
  std::vector<std::string> states;
  std::vector<std::string> initial_states;
  RuleList out_rules{{}, ValueChoice::one(kNone)};
  RuleList state_rules;
  // Script variable -> fragment of cases; unmatched fragments hold the value.
  std::vector<std::pair<std::string, std::vector<Case>>> var_rules;
  bool simultaneous_inputs = false;

  friend bool operator==(const NodeSemantics&, const NodeSemantics&) = default;
};

class SemanticsRegistry {
 public:
  void add(NodeSemantics sem) {
    if (kinds_.count(sem.kind) != 0) {
      throw Error(ErrorKind::kDuplicateId, "duplicate node kind " + sem.kind);
    }
    order_.push_back(sem.kind);
    kinds_.emplace(sem.kind, std::move(sem));
  }

  const NodeSemantics* find(const std::string& kind) const {
    auto it = kinds_.find(kind);
    return it == kinds_.end() ? nullptr : &it->second;
  }

  const NodeSemantics& at(const std::string& kind) const {
    const NodeSemantics* s = find(kind);
    if (s == nullptr) throw Error(ErrorKind::kUnknownSymbol, "unknown node kind " + kind);
    return *s;
  }

  const std::vector<std::string>& kinds() const { return order_; }
  std::size_t size() const { return order_.size(); }

 private:
  std::vector<std::string> order_;
  std::map<std::string, NodeSemantics> kinds_;
};

// Checks the class-specific invariants and that every guard symbol is
// declared by the semantics. Throws Error on the first violation.
inline void check_semantics(const NodeSemantics& sem) {
  const std::string who = "kind " + sem.kind;
  auto contains = [](const std::vector<std::string>& v, const std::string& x) {
    return std::find(v.begin(), v.end(), x) != v.end();
  };
  auto no_dups = [&](const std::vector<std::string>& v, const char* what) {
    std::set<std::string> seen;
    for (const auto& p : v) {
      if (p.empty()) throw Error(ErrorKind::kSchema, who + ": empty " + what + " name");
      if (p == kNone) {
        throw Error(ErrorKind::kReservedSymbol, who + ": " + what + " may not be named none");
      }
      if (!seen.insert(p).second) {
        throw Error(ErrorKind::kDuplicateId, who + ": duplicate " + what + " " + p);
      }
    }
  };
  no_dups(sem.input_ports, "input port");
  no_dups(sem.output_ports, "output port");
  no_dups(sem.states, "state");

  auto invariant = [&](bool ok, const std::string& what) {
    if (!ok) throw Error(ErrorKind::kClassInvariant, who + " (" + to_string(sem.cls) + "): " + what);
  };
  switch (sem.cls) {
    case SemanticsClass::kSingleOutput:
      invariant(sem.output_ports.size() == 1, "requires exactly one output port");
      invariant(sem.states.empty(), "may not declare states");
      break;
    case SemanticsClass::kEntryPoint:
      invariant(sem.output_ports.size() == 1, "requires exactly one output port");
      invariant(sem.states.empty(), "may not declare states");
      invariant(sem.input_ports.empty(), "may not declare input ports");
      break;
    case SemanticsClass::kBranch:
      invariant(sem.output_ports.size() >= 2, "requires at least two output ports");
      invariant(sem.states.empty(), "may not declare states");
      break;
    case SemanticsClass::kStateTransition:
      invariant(!sem.states.empty(), "requires internal states");
      break;
    case SemanticsClass::kCustom:
      break;
  }
  if (!sem.states.empty()) {
    invariant(!sem.initial_states.empty(), "initial_states must be non-empty");
    for (const auto& s : sem.initial_states) {
      if (!contains(sem.states, s)) {
        throw Error(ErrorKind::kUnknownSymbol, who + ": initial state " + s + " is not a declared state");
      }
    }
  } else if (!sem.initial_states.empty()) {
    throw Error(ErrorKind::kSchema, who + ": initial_states given without states");
  }
  if (sem.simultaneous_inputs && sem.input_ports.empty()) {
    throw Error(ErrorKind::kSchema, who + ": simultaneous_inputs without input ports");
  }

  auto check_atom = [&](const Atom& a) {
    if (a.lhs == kInPlaceholder) {
      if (a.value != kNone && !contains(sem.input_ports, a.value)) {
        throw Error(ErrorKind::kUnknownSymbol, who + ": guard references undeclared input port " + a.value);
      }
    } else if (a.lhs == kOutPlaceholder) {
      if (a.value != kNone && !contains(sem.output_ports, a.value)) {
        throw Error(ErrorKind::kUnknownSymbol, who + ": guard references undeclared output port " + a.value);
      }
    } else if (a.lhs == kStatePlaceholder) {
      if (!contains(sem.states, a.value)) {
        throw Error(ErrorKind::kUnknownSymbol, who + ": guard references undeclared state " + a.value);
      }
    }
  };
  auto check_values = [&](const ValueChoice& c, const std::vector<std::string>& allowed,
                          bool allow_none, const char* what) {
    if (c.hold && !c.values.empty()) throw Error(ErrorKind::kSchema, who + ": choice mixes hold and values");
    if (!c.hold && c.values.empty()) throw Error(ErrorKind::kSchema, who + ": empty value choice");
    for (const auto& v : c.values) {
      if (!(allow_none && v == kNone) && !contains(allowed, v)) {
        throw Error(ErrorKind::kUnknownSymbol, who + ": " + what + " value " + v + " is not declared");
      }
    }
  };
  for (const auto& c : sem.out_rules.cases) {
    c.guard.for_each_atom(check_atom);
    check_values(c.choice, sem.output_ports, true, "output");
  }
  check_values(sem.out_rules.fallback, sem.output_ports, true, "output");
  if (!sem.states.empty()) {
    for (const auto& c : sem.state_rules.cases) {
      c.guard.for_each_atom(check_atom);
      check_values(c.choice, sem.states, false, "state");
    }
    check_values(sem.state_rules.fallback, sem.states, false, "state");
  } else if (!sem.state_rules.cases.empty()) {
    throw Error(ErrorKind::kSchema, who + ": state_rules given without states");
  }
  for (const auto& [var, cases] : sem.var_rules) {
    if (var == kInPlaceholder || var == kOutPlaceholder || var == kStatePlaceholder) {
      throw Error(ErrorKind::kReservedSymbol, who + ": script variable may not be named " + var);
    }
    for (const auto& c : cases) {
      c.guard.for_each_atom(check_atom);
      if (c.choice.hold || c.choice.values.empty()) {
        throw Error(ErrorKind::kSchema, who + ": script variable cases need explicit values");
      }
    }
  }
  if (sem.cls == SemanticsClass::kStateTransition) {
    for (const auto& c : sem.out_rules.cases) {
      c.guard.for_each_atom([&](const Atom& a) {
        invariant(a.lhs == kStatePlaceholder, "output guards may reference only the internal state");
      });
    }
  }
}

// Extra arguments for builtin_semantics; only StateTransition uses them.
struct SemanticsExtras {
  std::vector<std::string> states;
  std::vector<std::string> initial_states;
  std::optional<RuleList> out_rules;
  std::optional<RuleList> state_rules;
};

// Guard `in != none` expressed positively.
inline Guard any_input(const std::vector<std::string>& inputs) {
  Guard g;
  for (const auto& p : inputs) g.or_with(Guard::atom(kInPlaceholder, p));
  return g;
}

inline NodeSemantics builtin_semantics(std::string kind, SemanticsClass cls,
                                       std::vector<std::string> inputs,
                                       std::vector<std::string> outputs,
                                       SemanticsExtras extras = {}) {
  NodeSemantics sem;
  sem.kind = std::move(kind);
  sem.cls = cls;
  sem.input_ports = std::move(inputs);
  sem.output_ports = std::move(outputs);
  const bool has_extras = !extras.states.empty() || !extras.initial_states.empty() ||
                          extras.out_rules || extras.state_rules;
  if (cls != SemanticsClass::kStateTransition && has_extras) {
    throw Error(ErrorKind::kClassInvariant,
                "kind " + sem.kind + ": only StateTransition semantics take states or rules");
  }
  switch (cls) {
    case SemanticsClass::kSingleOutput:
      if (sem.output_ports.size() != 1) break;
      sem.out_rules.cases.push_back({any_input(sem.input_ports), ValueChoice::one(sem.output_ports[0])});
      break;
    case SemanticsClass::kEntryPoint:
      break;
    case SemanticsClass::kBranch:
      sem.out_rules.cases.push_back({any_input(sem.input_ports), ValueChoice::of(sem.output_ports)});
      break;
    case SemanticsClass::kStateTransition: {
      if (extras.states.empty()) {
        throw Error(ErrorKind::kClassInvariant, "kind " + sem.kind + ": StateTransition requires states");
      }
      sem.states = std::move(extras.states);
      sem.initial_states = extras.initial_states.empty() ? std::vector<std::string>{sem.states.front()}
                                                         : std::move(extras.initial_states);
      if (extras.out_rules) {
        sem.out_rules = *extras.out_rules;
      } else {
        // out' = s for every state s that shares its name with an output port.
        for (const auto& s : sem.states) {
          if (std::find(sem.output_ports.begin(), sem.output_ports.end(), s) != sem.output_ports.end())
            sem.out_rules.cases.push_back({Guard::atom(kStatePlaceholder, s), ValueChoice::one(s)});
        }
      }
      if (extras.state_rules) {
        sem.state_rules = *extras.state_rules;
      } else {
        sem.state_rules.fallback = ValueChoice::of(sem.initial_states);
      }
      break;
    }
    case SemanticsClass::kCustom:
      break;
  }
  check_semantics(sem);
  return sem;
}

namespace semantics_detail {

using nlohmann::json;

inline std::vector<std::string> strings(const json& j, const std::string& where) {
  std::vector<std::string> out;
  if (!j.is_array()) throw Error(ErrorKind::kSchema, where + " must be an array of strings");
  for (const auto& v : j) {
    if (!v.is_string()) throw Error(ErrorKind::kSchema, where + " must be an array of strings");
    out.push_back(v.get<std::string>());
  }
  return out;
}

inline Atom parse_atom(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("lhs") || !j.contains("rhs") || !j.at("lhs").is_string() ||
      !j.at("rhs").is_string()) {
    throw Error(ErrorKind::kSchema, where + ": atom needs string fields lhs and rhs");
  }
  if (j.contains("op") && j.at("op") != "=") {
    throw Error(ErrorKind::kSchema, where + ": only '=' atoms are supported");
  }
  return Atom{j.at("lhs").get<std::string>(), j.at("rhs").get<std::string>()};
}

// Either an array of atoms (one conjunction) or an array of such arrays.
inline Guard parse_guard(const json& j, const std::string& where) {
  if (!j.is_array()) throw Error(ErrorKind::kSchema, where + ": guard must be an array");
  if (!j.empty() && j.front().is_array()) {
    Guard g;
    for (const auto& t : j) g.or_with(parse_guard(t, where));
    return g;
  }
  Term t;
  for (const auto& a : j) t.push_back(parse_atom(a, where));
  return Guard::conj(std::move(t));
}

inline ValueChoice parse_choice(const json& j, const std::string& where) {
  if (j.is_string()) {
    if (j.get<std::string>() == "$hold") return ValueChoice::keep();
    return ValueChoice::one(j.get<std::string>());
  }
  return ValueChoice::of(strings(j, where));
}

inline Case parse_case(const json& j, const std::string& where) {
  if (!j.is_object() || !j.contains("then")) {
    throw Error(ErrorKind::kSchema, where + ": case needs 'then'");
  }
  Guard g = j.contains("when") ? parse_guard(j.at("when"), where) : Guard::always();
  return Case{std::move(g), parse_choice(j.at("then"), where)};
}

inline RuleList parse_rules(const json& j, const std::string& where, ValueChoice fallback) {
  RuleList r;
  r.fallback = std::move(fallback);
  if (!j.is_object()) throw Error(ErrorKind::kSchema, where + " must be an object");
  if (j.contains("cases")) {
    if (!j.at("cases").is_array()) throw Error(ErrorKind::kSchema, where + ".cases must be an array");
    for (const auto& c : j.at("cases")) r.cases.push_back(parse_case(c, where));
  }
  if (j.contains("default")) r.fallback = parse_choice(j.at("default"), where + ".default");
  return r;
}

}  // namespace semantics_detail

// Semantics document: {"kinds": [{kind, class, input_ports, output_ports,
// states?, initial_states?, simultaneous_inputs?, out_rules?, state_rules?,
// var_rules?}, ...]}. A bare top-level array of kinds is accepted too.
// Absent out_rules/state_rules fall back to the class's canonical relation.
inline SemanticsRegistry load_semantics(std::string_view text) {
  using semantics_detail::json;
  const json doc = graph_detail::parse_json(text, "semantics document");
  SemanticsRegistry reg;
  const json* kinds = nullptr;
  if (doc.is_array()) {
    kinds = &doc;
  } else if (doc.is_object()) {
    if (!doc.contains("kinds")) return reg;
    kinds = &doc.at("kinds");
    if (!kinds->is_array()) throw Error(ErrorKind::kSchema, "'kinds' must be an array");
  } else {
    throw Error(ErrorKind::kSchema, "semantics document must be an object");
  }
  for (const auto& jk : *kinds) {
    const std::string where = "kinds[" + std::to_string(reg.size()) + "]";
    const std::string kind = graph_detail::require_string(jk, "kind", where);
    const std::string cls_name = graph_detail::require_string(jk, "class", where);
    const auto cls = parse_semantics_class(cls_name);
    if (!cls) throw Error(ErrorKind::kSchema, where + ": unknown class " + cls_name);
    auto list = [&](const char* key) {
      return jk.contains(key) ? semantics_detail::strings(jk.at(key), where + "." + key)
                              : std::vector<std::string>{};
    };
    SemanticsExtras extras;
    if (*cls == SemanticsClass::kStateTransition) {
      extras.states = list("states");
      extras.initial_states = list("initial_states");
      if (jk.contains("out_rules"))
        extras.out_rules = semantics_detail::parse_rules(jk.at("out_rules"), where + ".out_rules",
                                                         ValueChoice::one(kNone));
      if (jk.contains("state_rules") && !extras.states.empty()) {
        const std::vector<std::string> initials =
            extras.initial_states.empty() ? std::vector<std::string>{extras.states.front()}
                                          : extras.initial_states;
        extras.state_rules = semantics_detail::parse_rules(
            jk.at("state_rules"), where + ".state_rules", ValueChoice::of(initials));
      }
    } else if (jk.contains("states") || jk.contains("initial_states")) {
      if (*cls != SemanticsClass::kCustom) {
        throw Error(ErrorKind::kClassInvariant,
                    "kind " + kind + " (" + cls_name + "): may not declare states");
      }
    }
    NodeSemantics sem;
    if (*cls == SemanticsClass::kCustom) {
      sem.kind = kind;
      sem.cls = *cls;
      sem.input_ports = list("input_ports");
      sem.output_ports = list("output_ports");
      sem.states = list("states");
      sem.initial_states = list("initial_states");
      if (!sem.states.empty() && sem.initial_states.empty()) sem.initial_states = {sem.states.front()};
      if (jk.contains("state_rules")) {
        sem.state_rules = semantics_detail::parse_rules(
            jk.at("state_rules"), where + ".state_rules", ValueChoice::keep());
      }
    } else {
      sem = builtin_semantics(kind, *cls, list("input_ports"), list("output_ports"), extras);
    }
    if (*cls != SemanticsClass::kStateTransition && jk.contains("out_rules")) {
      sem.out_rules = semantics_detail::parse_rules(jk.at("out_rules"), where + ".out_rules",
                                                    ValueChoice::one(kNone));
    }
    if (jk.contains("simultaneous_inputs")) {
      if (!jk.at("simultaneous_inputs").is_boolean())
        throw Error(ErrorKind::kSchema, where + ".simultaneous_inputs must be a boolean");
      sem.simultaneous_inputs = jk.at("simultaneous_inputs").get<bool>();
    }
    if (jk.contains("var_rules")) {
      const json& vr = jk.at("var_rules");
      if (!vr.is_object()) throw Error(ErrorKind::kSchema, where + ".var_rules must be an object");
      for (const auto& [name, cases] : vr.items()) {
        std::vector<Case> list_cases;
        const json& arr = cases.is_object() && cases.contains("cases") ? cases.at("cases") : cases;
        if (!arr.is_array()) throw Error(ErrorKind::kSchema, where + ".var_rules." + name + " must be an array");
        for (const auto& c : arr) list_cases.push_back(semantics_detail::parse_case(c, where + ".var_rules." + name));
        sem.var_rules.emplace_back(name, std::move(list_cases));
      }
    }
    check_semantics(sem);
    reg.add(std::move(sem));
  }
  return reg;
}

// Script Start, Set Event Mode, Movie Clip and If.
inline constexpr std::string_view kBuiltinSemanticsDocument = R"({
  "kinds": [
    {
      "kind": "ScriptStart",
      "class": "EntryPoint",
      "input_ports": [],
      "output_ports": ["Out"]
    },
    {
      "kind": "SetEventMode",
      "class": "Custom",
      "input_ports": ["Enable", "Disable"],
      "output_ports": ["Out"],
      "out_rules": {
        "cases": [
          {"when": [[{"lhs": "in", "op": "=", "rhs": "Enable"}],
                    [{"lhs": "in", "op": "=", "rhs": "Disable"}]],
           "then": "Out"}
        ],
        "default": "none"
      },
      "var_rules": {
        "EventMode": [
          {"when": [{"lhs": "in", "op": "=", "rhs": "Enable"}], "then": "true"},
          {"when": [{"lhs": "in", "op": "=", "rhs": "Disable"}], "then": "false"}
        ]
      }
    },
    {
      "kind": "MovieClip",
      "class": "StateTransition",
      "input_ports": ["Start"],
      "output_ports": ["Finished", "Skipped"],
      "states": ["Stopped", "Playing", "Finished", "Skipped"],
      "initial_states": ["Stopped"],
      "out_rules": {
        "cases": [
          {"when": [{"lhs": "state", "op": "=", "rhs": "Finished"}], "then": "Finished"},
          {"when": [{"lhs": "state", "op": "=", "rhs": "Skipped"}], "then": "Skipped"}
        ],
        "default": "none"
      },
      "state_rules": {
        "cases": [
          {"when": [{"lhs": "in", "op": "=", "rhs": "Start"}], "then": "Playing"},
          {"when": [{"lhs": "state", "op": "=", "rhs": "Playing"}],
           "then": ["Playing", "Finished", "Skipped"]}
        ],
        "default": "Stopped"
      }
    },
    {
      "kind": "If",
      "class": "Branch",
      "input_ports": ["In"],
      "output_ports": ["True", "False"]
    }
  ]
}
)";

inline SemanticsRegistry builtin_registry() { return load_semantics(kBuiltinSemanticsDocument); }

// A node's semantics bound to concrete variable names.
struct NodeRelations {
  std::string node_id;
  std::string kind;
  SemanticsClass cls = SemanticsClass::kCustom;
  std::size_t index = 0;

  std::vector<Variable> variables;  // inputs, output, state, in that order
  std::vector<std::string> input_vars;
  std::map<std::string, std::string> input_var_for_port;  // per-port inputs only
  std::optional<std::string> output_var;
  std::optional<std::string> state_var;

  RuleList out_rules;
  RuleList state_rules;
  std::vector<std::pair<std::string, std::vector<Case>>> var_rules;
  std::vector<Guard> fairness;

  // Output value -> encoded values a guard `out = value` must accept. Empty
  // unless the state-into-output encoding was applied.
  std::map<std::string, std::vector<std::string>> output_aliases;
  // State value -> encoded output value, for rewriting state atoms elsewhere.
  std::map<std::string, std::string> state_encoding;
  std::map<std::string, std::string> output_labels;
  bool encoded = false;

  const Variable* find_variable(const std::string& name) const {
    for (const auto& v : variables)
      if (v.name == name) return &v;
    return nullptr;
  }
  Variable* find_variable(const std::string& name) {
    for (auto& v : variables)
      if (v.name == name) return &v;
    return nullptr;
  }
};

inline std::vector<std::string> with_none(const std::vector<std::string>& ports) {
  std::vector<std::string> d{kNone};
  d.insert(d.end(), ports.begin(), ports.end());
  return d;
}

inline NodeRelations instantiate(const NodeSemantics& sem, const Node& node, std::size_t index) {
  if (node.kind != sem.kind) {
    throw Error(ErrorKind::kPortMismatch,
                "node " + node.id + " has kind " + node.kind + ", semantics is for " + sem.kind);
  }
  if ((!node.input_ports.empty() || !node.output_ports.empty()) &&
      (node.input_ports != sem.input_ports || node.output_ports != sem.output_ports)) {
    throw Error(ErrorKind::kPortMismatch, "node " + node.id + " ports differ from kind " + sem.kind);
  }
  if (index == 0) throw Error(ErrorKind::kSchema, "node index must be positive");

  NodeRelations rel;
  rel.node_id = node.id;
  rel.kind = sem.kind;
  rel.cls = sem.cls;
  rel.index = index;
  const std::string prefix = sem.kind + std::to_string(index);

  if (!sem.input_ports.empty()) {
    if (sem.simultaneous_inputs) {
      for (const auto& p : sem.input_ports) {
        const std::string name = prefix + "In" + p;
        rel.variables.push_back(Variable{name, {kNone, p}, {kNone}, VarRole::kInput});
        rel.input_vars.push_back(name);
        rel.input_var_for_port[p] = name;
      }
    } else {
      const std::string name = prefix + "In";
      rel.variables.push_back(Variable{name, with_none(sem.input_ports), {kNone}, VarRole::kInput});
      rel.input_vars.push_back(name);
    }
  }
  if (!sem.output_ports.empty()) {
    const std::string name = prefix + "Out";
    std::vector<std::string> init{kNone};
    if (sem.cls == SemanticsClass::kEntryPoint) init = {sem.output_ports.front()};
    rel.variables.push_back(Variable{name, with_none(sem.output_ports), init, VarRole::kOutput});
    rel.output_var = name;
  }
  if (!sem.states.empty()) {
    const std::string name = prefix + "State";
    rel.variables.push_back(Variable{name, sem.states, sem.initial_states, VarRole::kState});
    rel.state_var = name;
  }

  auto bind = [&](const Guard& g) {
    return g.expand([&](const Atom& a) -> Guard {
      if (a.lhs == kInPlaceholder) {
        if (rel.input_vars.empty()) {
          // No input ports: `in` is permanently none.
          return a.value == kNone ? Guard::always() : Guard::never();
        }
        if (!sem.simultaneous_inputs) return Guard::atom(rel.input_vars.front(), a.value);
        if (a.value == kNone) {
          Term t;
          for (const auto& v : rel.input_vars) t.push_back(Atom{v, kNone});
          return Guard::conj(std::move(t));
        }
        return Guard::atom(rel.input_var_for_port.at(a.value), a.value);
      }
      if (a.lhs == kOutPlaceholder) {
        if (!rel.output_var) return a.value == kNone ? Guard::always() : Guard::never();
        return Guard::atom(*rel.output_var, a.value);
      }
      if (a.lhs == kStatePlaceholder) return Guard::atom(*rel.state_var, a.value);
      return Guard::atom(a.lhs, a.value);
    });
  };
  auto bind_rules = [&](const RuleList& r) {
    RuleList out;
    out.fallback = r.fallback;
    for (const auto& c : r.cases) out.cases.push_back({bind(c.guard), c.choice});
    return out;
  };
  if (rel.output_var) rel.out_rules = bind_rules(sem.out_rules);
  if (rel.state_var) {
    rel.state_rules = bind_rules(sem.state_rules);
    Guard initial;
    for (const auto& s : sem.initial_states) initial.or_with(Guard::atom(*rel.state_var, s));
    rel.fairness.push_back(std::move(initial));
  }
  for (const auto& [var, cases] : sem.var_rules) {
    std::vector<Case> bound;
    for (const auto& c : cases) bound.push_back({bind(c.guard), c.choice});
    rel.var_rules.emplace_back(var, std::move(bound));
  }
  return rel;
}

}  // namespace vsv
