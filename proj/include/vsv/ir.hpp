// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

// Finite transition system IR and its synchronous successor semantics.

#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "vsv/ctl.hpp"
#include "vsv/error.hpp"
#include "vsv/rules.hpp"

namespace vsv {

enum class VarRole { kInput, kOutput, kState, kScript };

inline const char* to_string(VarRole role) {
  switch (role) {
    case VarRole::kInput: return "input";
    case VarRole::kOutput: return "output";
    case VarRole::kState: return "state";
    case VarRole::kScript: return "script";
  }
  return "?";
}

struct Variable {
  std::string name;
  std::vector<std::string> domain;
  std::vector<std::string> init;
  VarRole role = VarRole::kScript;

  bool has_value(const std::string& v) const {
    return std::find(domain.begin(), domain.end(), v) != domain.end();
  }

  friend bool operator==(const Variable&, const Variable&) = default;
};

struct TransitionRule {
  std::string variable;
  RuleList rules;

  friend bool operator==(const TransitionRule&, const TransitionRule&) = default;
};

// Where a variable came from, for rendering counterexamples at node level.
struct Provenance {
  std::string node_id;
  VarRole role = VarRole::kScript;
  std::string port;  // per-port input variables only
  // Value -> label override. Encoded outputs map e.g. none_Playing to
  // "internal:Playing".
  std::map<std::string, std::string> value_labels;

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct TransitionSystem {
  std::vector<Variable> variables;
  std::vector<TransitionRule> rules;
  std::vector<Guard> fairness;
  std::vector<CtlFormula> specs;
  std::map<std::string, Provenance> provenance;

  const Variable* find_variable(const std::string& name) const {
    for (const auto& v : variables)
      if (v.name == name) return &v;
    return nullptr;
  }

  const TransitionRule* rule_for(const std::string& name) const {
    for (const auto& r : rules)
      if (r.variable == name) return &r;
    return nullptr;
  }

  friend bool operator==(const TransitionSystem&, const TransitionSystem&) = default;
};

namespace ir_detail {

inline void check_guard(const TransitionSystem& ts, const Guard& g,
                        const std::string& where) {
  g.for_each_atom([&](const Atom& a) {
    const Variable* v = ts.find_variable(a.lhs);
    if (v == nullptr) {
      throw Error(ErrorKind::kUnknownSymbol,
                  where + ": unknown variable " + a.lhs);
    }
    if (!v->has_value(a.value)) {
      throw Error(ErrorKind::kUnknownSymbol, where + ": value " + a.value +
                                                 " not in domain of " + a.lhs);
    }
  });
}

inline void check_choice(const Variable& v, const ValueChoice& c,
                         const std::string& where) {
  if (c.hold && !c.values.empty()) {
    throw Error(ErrorKind::kSchema, where + ": choice mixes hold and values");
  }
  if (!c.hold && c.values.empty()) {
    throw Error(ErrorKind::kSchema, where + ": empty value choice");
  }
  for (const auto& val : c.values) {
    if (!v.has_value(val)) {
      throw Error(ErrorKind::kUnknownSymbol,
                  where + ": value " + val + " not in domain of " + v.name);
    }
  }
}

inline void check_formula(const TransitionSystem& ts, const CtlFormula& f) {
  f.for_each_atom([&](const CtlFormula& a) {
    const Variable* v = ts.find_variable(a.var);
    if (v == nullptr) {
      throw Error(ErrorKind::kUnknownSymbol, "specification references unknown variable " + a.var);
    }
    if (!v->has_value(a.value)) {
      throw Error(ErrorKind::kUnknownSymbol, "specification value " + a.value +
                                                 " not in domain of " + a.var);
    }
  });
}

}  // namespace ir_detail

// Throws on any IR invariant violation.
inline void check_well_formed(const TransitionSystem& ts) {
  std::set<std::string> names;
  for (const auto& v : ts.variables) {
    if (!names.insert(v.name).second) {
      throw Error(ErrorKind::kDuplicateId, "duplicate variable " + v.name);
    }
    if (v.domain.empty()) {
      throw Error(ErrorKind::kSchema, "variable " + v.name + " has an empty domain");
    }
    std::set<std::string> values(v.domain.begin(), v.domain.end());
    if (values.size() != v.domain.size()) {
      throw Error(ErrorKind::kSchema, "variable " + v.name + " has duplicate domain values");
    }
    if (v.init.empty()) {
      throw Error(ErrorKind::kSchema, "variable " + v.name + " has no initial value");
    }
    for (const auto& i : v.init) {
      if (!v.has_value(i)) {
        throw Error(ErrorKind::kUnknownSymbol,
                    "initial value " + i + " not in domain of " + v.name);
      }
    }
  }
  if (ts.rules.size() != ts.variables.size()) {
    throw Error(ErrorKind::kSchema, "expected exactly one rule per variable");
  }
  for (const auto& v : ts.variables) {
    const TransitionRule* r = ts.rule_for(v.name);
    if (r == nullptr) {
      throw Error(ErrorKind::kSchema, "variable " + v.name + " has no rule");
    }
    const std::string where = "next(" + v.name + ")";
    for (const auto& c : r->rules.cases) {
      ir_detail::check_guard(ts, c.guard, where);
      ir_detail::check_choice(v, c.choice, where);
    }
    ir_detail::check_choice(v, r->rules.fallback, where);
  }
  for (const auto& g : ts.fairness) ir_detail::check_guard(ts, g, "FAIRNESS");
  for (const auto& f : ts.specs) ir_detail::check_formula(ts, f);
}

inline bool eval_guard(const Guard& g, const Assignment& s) { return g.eval(s); }

// All variables step together; each takes a value from the choice of its
// first matching case. The result is the cartesian product, enumerated with
// the first variable most significant and values in choice order.
inline std::vector<Assignment> successors(const TransitionSystem& ts,
                                          const Assignment& s) {
  std::vector<std::vector<std::string>> options;
  options.reserve(ts.variables.size());
  for (const auto& v : ts.variables) {
    const TransitionRule* r = ts.rule_for(v.name);
    if (r == nullptr) {
      throw Error(ErrorKind::kSchema, "variable " + v.name + " has no rule");
    }
    const ValueChoice& c = r->rules.select(s);
    if (c.hold) {
      options.push_back({s.at(v.name)});
    } else {
      options.push_back(c.values);
    }
  }
  std::vector<Assignment> out;
  Assignment cur;
  std::vector<std::size_t> idx(options.size(), 0);
  while (true) {
    cur.clear();
    for (std::size_t i = 0; i < options.size(); ++i)
      cur[ts.variables[i].name] = options[i][idx[i]];
    if (std::find(out.begin(), out.end(), cur) == out.end()) out.push_back(cur);
    std::size_t k = options.size();
    while (k > 0) {
      --k;
      if (++idx[k] < options[k].size()) break;
      idx[k] = 0;
      if (k == 0) return out;
    }
    if (options.empty()) return out;
  }
}

inline std::vector<Assignment> initial_assignments(const TransitionSystem& ts) {
  std::vector<Assignment> out{Assignment{}};
  for (const auto& v : ts.variables) {
    std::vector<Assignment> next;
    for (const auto& a : out) {
      for (const auto& i : v.init) {
        Assignment b = a;
        b[v.name] = i;
        next.push_back(std::move(b));
      }
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace vsv
