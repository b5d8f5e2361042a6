// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

// Compilation of a node graph plus node semantics into a TransitionSystem.
//
// Steps, in order: declare variables, translate control-flow edges into
// input-variable rules, translate node behaviors into output/state rules,
// integrate script-variable updates from all nodes, attach specifications.

#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include <json.hpp>

#include "vsv/ctl.hpp"
#include "vsv/error.hpp"
#include "vsv/graph.hpp"
#include "vsv/ir.hpp"
#include "vsv/optimizer.hpp"
#include "vsv/semantics.hpp"
#include "vsv/validate.hpp"

namespace vsv {

// AG (var = set_value -> AF (var = reset_value))
struct FlagReset {
  std::string var;
  std::string set_value = "true";
  std::string reset_value = "false";

  friend bool operator==(const FlagReset&, const FlagReset&) = default;
};

struct SpecRequest {
  std::variant<CtlFormula, FlagReset> body;

  CtlFormula formula() const {
    if (const auto* f = std::get_if<FlagReset>(&body))
      return flag_reset_formula(f->var, f->set_value, f->reset_value);
    return std::get<CtlFormula>(body);
  }
};

// {"specs": [{"flag_reset": {"var": "EventMode", "set": "true",
// "reset": "false"}}, {"ctl": "AG (...)"}]}
inline std::vector<SpecRequest> parse_spec_requests(std::string_view text) {
  using nlohmann::json;
  const json doc = graph_detail::parse_json(text, "spec document");
  const json* specs = &doc;
  if (doc.is_object()) {
    if (!doc.contains("specs")) return {};
    specs = &doc.at("specs");
  }
  if (!specs->is_array()) throw Error(ErrorKind::kSchema, "'specs' must be an array");
  std::vector<SpecRequest> out;
  for (const auto& js : *specs) {
    const std::string where = "specs[" + std::to_string(out.size()) + "]";
    if (js.is_string()) {
      out.push_back({parse_ctl(js.get<std::string>())});
    } else if (js.is_object() && js.contains("ctl")) {
      out.push_back({parse_ctl(graph_detail::require_string(js, "ctl", where))});
    } else if (js.is_object() && js.contains("flag_reset")) {
      const json& fr = js.at("flag_reset");
      FlagReset f;
      f.var = graph_detail::require_string(fr, "var", where);
      if (fr.contains("set")) f.set_value = graph_detail::require_string(fr, "set", where);
      if (fr.contains("reset")) f.reset_value = graph_detail::require_string(fr, "reset", where);
      out.push_back({f});
    } else {
      throw Error(ErrorKind::kSchema, where + ": expected 'ctl' or 'flag_reset'");
    }
  }
  return out;
}

struct Declarations {
  std::vector<Variable> variables;
  std::vector<NodeRelations> relations;
  std::vector<Variable> script_variables;
};

namespace translate_detail {

inline bool bound_here(const NodeRelations& rel, const std::string& name) {
  return rel.find_variable(name) != nullptr;
}

// Script variables in order: declared ones first, then those synthesized
// from semantics in node order.
inline std::vector<Variable> script_variables(const NodeGraph& g,
                                              const std::vector<NodeRelations>& rels) {
  std::vector<Variable> out;
  std::set<std::string> known;
  for (const auto& d : g.script_variables) {
    out.push_back(Variable{d.name, d.domain, {d.init}, VarRole::kScript});
    known.insert(d.name);
  }
  std::vector<std::string> order;
  std::map<std::string, std::set<std::string>> values;
  auto note = [&](const std::string& name, const std::string& value) {
    if (known.count(name) != 0) return;
    if (values.count(name) == 0) order.push_back(name);
    values[name].insert(value);
  };
  for (const auto& rel : rels) {
    auto scan = [&](const Guard& guard) {
      guard.for_each_atom([&](const Atom& a) {
        if (!bound_here(rel, a.lhs)) note(a.lhs, a.value);
      });
    };
    for (const auto& [var, cases] : rel.var_rules) {
      for (const auto& c : cases) {
        scan(c.guard);
        for (const auto& v : c.choice.values) note(var, v);
      }
    }
    for (const auto& c : rel.out_rules.cases) scan(c.guard);
    for (const auto& c : rel.state_rules.cases) scan(c.guard);
  }
  for (const auto& name : order) {
    for (const auto& v : values[name]) {
      if (v != "true" && v != "false") {
        throw Error(ErrorKind::kUnknownSymbol, "script variable " + name + " uses non-boolean value " + v +
                                                   " and must be declared in the graph");
      }
    }
    out.push_back(Variable{name, {"false", "true"}, {"false"}, VarRole::kScript});
  }
  return out;
}

inline std::vector<Variable> collect(const std::vector<NodeRelations>& rels,
                                     const std::vector<Variable>& scripts) {
  std::vector<Variable> out;
  for (const auto& r : rels) out.insert(out.end(), r.variables.begin(), r.variables.end());
  out.insert(out.end(), scripts.begin(), scripts.end());
  return out;
}

}  // namespace translate_detail

inline Declarations declare_variables(const NodeGraph& graph, const SemanticsRegistry& reg) {
  const auto diags = validate_graph(graph, reg);
  for (const auto& d : diags) {
    if (d.severity == Severity::kError) throw Error(ErrorKind::kSchema, "invalid graph: " + to_string(d));
  }
  Declarations decl;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const Node& n = graph.nodes[i];
    const NodeSemantics& sem = reg.at(n.kind);
    decl.relations.push_back(instantiate(sem, n, i + 1));
  }
  decl.script_variables = translate_detail::script_variables(graph, decl.relations);
  for (const auto& v : decl.script_variables) {
    for (const auto& r : decl.relations) {
      if (r.find_variable(v.name) != nullptr)
        throw Error(ErrorKind::kDuplicateId, "script variable " + v.name + " collides with a node variable");
    }
  }
  decl.variables = translate_detail::collect(decl.relations, decl.script_variables);
  return decl;
}

// Guard `source output = port`, accounting for encoded output values.
inline Guard output_signal_guard(const NodeRelations& source, const std::string& port) {
  if (!source.output_var) return Guard::never();
  auto it = source.output_aliases.find(port);
  if (!source.encoded || it == source.output_aliases.end()) return Guard::atom(*source.output_var, port);
  Guard g;
  for (const auto& v : it->second) g.or_with(Guard::atom(*source.output_var, v));
  return g;
}

inline std::vector<TransitionRule> translate_control_flow(const NodeGraph& graph,
                                                          const std::vector<NodeRelations>& rels) {
  std::map<std::string, const NodeRelations*> by_id;
  for (const auto& r : rels) by_id[r.node_id] = &r;
  std::vector<TransitionRule> out;
  for (const auto& rel : rels) {
    for (const auto& var : rel.input_vars) {
      TransitionRule rule{var, RuleList{{}, ValueChoice::one(kNone)}};
      for (const auto& e : graph.edges) {
        if (e.to.node != rel.node_id) continue;
        if (!rel.input_var_for_port.empty() && rel.input_var_for_port.at(e.to.port) != var) continue;
        const NodeRelations* src = by_id.at(e.from.node);
        rule.rules.cases.push_back({output_signal_guard(*src, e.from.port), ValueChoice::one(e.to.port)});
      }
      out.push_back(std::move(rule));
    }
  }
  return out;
}

inline std::vector<TransitionRule> translate_node_behaviors(const std::vector<NodeRelations>& rels,
                                                            std::vector<Guard>* fairness = nullptr) {
  std::vector<TransitionRule> out;
  for (const auto& rel : rels) {
    if (rel.output_var) out.push_back({*rel.output_var, rel.out_rules});
    if (rel.state_var) out.push_back({*rel.state_var, rel.state_rules});
    if (fairness) fairness->insert(fairness->end(), rel.fairness.begin(), rel.fairness.end());
  }
  return out;
}

// One case per assigned value, guarded by the disjunction of every node's
// condition for that value; unmatched steps hold the variable.
inline std::vector<TransitionRule> integrate_script_variables(const std::vector<NodeRelations>& rels,
                                                              const std::vector<Variable>& scripts,
                                                              std::vector<std::string>* warnings = nullptr) {
  std::vector<TransitionRule> out;
  for (const auto& var : scripts) {
    TransitionRule rule{var.name, RuleList{}};
    std::vector<std::pair<const NodeRelations*, const Case*>> seen;
    for (const auto& rel : rels) {
      for (const auto& [name, cases] : rel.var_rules) {
        if (name != var.name) continue;
        for (const auto& c : cases) {
          for (const auto& [other_rel, other] : seen) {
            if (other->guard == c.guard && !(other->choice == c.choice) && warnings) {
              warnings->push_back("conflicting writes to " + var.name + " by " + other_rel->node_id + " and " +
                                  rel.node_id + " under identical guards");
            }
          }
          seen.emplace_back(&rel, &c);
          auto it = std::find_if(rule.rules.cases.begin(), rule.rules.cases.end(),
                                 [&](const Case& k) { return k.choice == c.choice; });
          if (it == rule.rules.cases.end()) {
            rule.rules.cases.push_back(c);
          } else {
            it->guard.or_with(c.guard);
          }
        }
      }
    }
    out.push_back(std::move(rule));
  }
  return out;
}

struct TranslateOptions {
  bool encode = false;
};

struct Translation {
  TransitionSystem system;
  PassReport report;
  std::vector<std::string> warnings;
};

// Rewrites spec atoms that mention encoded outputs or removed state variables.
inline CtlFormula rewrite_for_encoding(const CtlFormula& f, const std::vector<NodeRelations>& rels) {
  std::map<std::string, const NodeRelations*> by_out, by_state;
  for (const auto& r : rels) {
    if (!r.encoded) continue;
    by_out[*r.output_var] = &r;
    by_state[r.kind + std::to_string(r.index) + "State"] = &r;
  }
  if (by_out.empty()) return f;
  return f.map_atoms([&](const CtlFormula& a) -> CtlFormula {
    if (auto it = by_state.find(a.var); it != by_state.end()) {
      auto enc = it->second->state_encoding.find(a.value);
      if (enc == it->second->state_encoding.end()) {
        throw Error(ErrorKind::kUnknownSymbol, "state " + a.value + " not in domain of " + a.var);
      }
      return CtlFormula::atom(*it->second->output_var, enc->second);
    }
    auto it = by_out.find(a.var);
    if (it == by_out.end()) return a;
    auto al = it->second->output_aliases.find(a.value);
    if (al == it->second->output_aliases.end()) return a;
    const auto& vals = al->second;
    if (vals.empty()) return CtlFormula::f();
    if (vals.size() == 1) return CtlFormula::atom(a.var, vals.front());
    CtlFormula r = CtlFormula::atom(a.var, vals.front());
    for (std::size_t i = 1; i < vals.size(); ++i)
      r = CtlFormula::binary(CtlOp::kOr, std::move(r), CtlFormula::atom(a.var, vals[i]));
    return r;
  });
}

inline Translation translate_with_report(const NodeGraph& graph, const SemanticsRegistry& reg,
                                         const std::vector<SpecRequest>& specs,
                                         const TranslateOptions& opts = {}) {
  Declarations decl = declare_variables(graph, reg);
  Translation result;
  if (opts.encode) {
    for (auto& rel : decl.relations) {
      if (!rel.state_var) continue;
      const NodeSemantics& sem = reg.at(rel.kind);
      if (auto why = encoding_obstacle(sem)) {
        result.report.not_applicable.emplace_back(rel.node_id, *why);
        continue;
      }
      rel = encode_state_into_output(rel, *build_out_bijection(sem));
      result.report.encoded_nodes.push_back(rel.node_id);
    }
    decl.variables = translate_detail::collect(decl.relations, decl.script_variables);
  }

  TransitionSystem& ts = result.system;
  ts.variables = decl.variables;
  std::map<std::string, TransitionRule> rules;
  for (auto& r : translate_control_flow(graph, decl.relations)) rules[r.variable] = std::move(r);
  for (auto& r : translate_node_behaviors(decl.relations, &ts.fairness)) rules[r.variable] = std::move(r);
  for (auto& r : integrate_script_variables(decl.relations, decl.script_variables, &result.warnings))
    rules[r.variable] = std::move(r);
  for (const auto& v : ts.variables) ts.rules.push_back(rules.at(v.name));

  for (const auto& rel : decl.relations) {
    for (const auto& v : rel.variables) {
      Provenance p{rel.node_id, v.role, {}, {}};
      for (const auto& [port, name] : rel.input_var_for_port)
        if (name == v.name) p.port = port;
      if (v.role == VarRole::kOutput) p.value_labels = rel.output_labels;
      ts.provenance[v.name] = std::move(p);
    }
  }
  for (const auto& v : decl.script_variables) ts.provenance[v.name] = Provenance{{}, VarRole::kScript, {}, {}};

  for (const auto& s : specs) {
    CtlFormula f = s.formula();
    if (const auto* fr = std::get_if<FlagReset>(&s.body)) {
      const Variable* v = ts.find_variable(fr->var);
      if (v == nullptr || v->role != VarRole::kScript) {
        throw Error(ErrorKind::kUnknownSymbol, "flag-reset spec references undeclared script variable " + fr->var);
      }
    }
    ts.specs.push_back(rewrite_for_encoding(f, decl.relations));
  }
  check_well_formed(ts);
  return result;
}

inline TransitionSystem translate(const NodeGraph& graph, const SemanticsRegistry& reg,
                                  const std::vector<SpecRequest>& specs, const TranslateOptions& opts = {}) {
  return translate_with_report(graph, reg, specs, opts).system;
}

}  // namespace vsv
