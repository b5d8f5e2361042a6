// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

// NuSMV input-language emitter. Output is byte-stable: two-space indents,
// one case per line, variables in declaration order.

#pragma once

#include <cctype>
#include <set>
#include <string>
#include <string_view>

#include "vsv/ctl.hpp"
#include "vsv/error.hpp"
#include "vsv/ir.hpp"

namespace vsv {

inline bool is_smv_keyword(std::string_view s) {
  static const std::set<std::string_view> kKeywords = {
      "MODULE", "DEFINE", "MDEFINE", "CONSTANTS", "VAR", "IVAR", "FROZENVAR", "INIT", "TRANS",
      "INVAR", "SPEC", "CTLSPEC", "LTLSPEC", "PSLSPEC", "COMPUTE", "NAME", "INVARSPEC",
      "FAIRNESS", "JUSTICE", "COMPASSION", "ISA", "ASSIGN", "CONSTRAINT", "SIMPWFF", "CTLWFF",
      "LTLWFF", "PSLWFF", "COMPWFF", "IN", "MIN", "MAX", "MIRROR", "PRED", "PREDICATES",
      "process", "array", "of", "boolean", "integer", "real", "word", "word1", "bool", "signed",
      "unsigned", "extend", "resize", "sizeof", "uwconst", "swconst", "EX", "AX", "EF", "AF", "EG",
      "AG", "E", "F", "O", "G", "H", "X", "Y", "Z", "A", "U", "S", "V", "T", "BU", "EBF", "ABF",
      "EBG", "ABG", "case", "esac", "mod", "next", "init", "union", "in", "xor", "xnor", "self",
      "TRUE", "FALSE", "count", "abs", "max", "min", "toint", "floor", "unsigned_word", "signed_word"};
  return kKeywords.count(s) != 0;
}

inline bool is_smv_identifier(std::string_view s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  for (char c : s) {
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' || c == '#')) return false;
  }
  return !is_smv_keyword(s);
}

namespace smv_detail {

inline const std::string& checked(const std::string& s) {
  if (!is_smv_identifier(s)) {
    throw Error(ErrorKind::kIllegalIdentifier, "'" + s + "' is not a legal SMV identifier");
  }
  return s;
}

inline std::string value_set(const std::vector<std::string>& values) {
  if (values.size() == 1) return checked(values.front());
  std::string s = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ", ";
    s += checked(values[i]);
  }
  return s + "}";
}

inline std::string choice(const std::string& var, const ValueChoice& c) {
  return c.hold ? var : value_set(c.values);
}

}  // namespace smv_detail

inline std::string render_guard(const Guard& g) {
  if (g.is_false()) return "FALSE";
  if (g.is_true()) return "TRUE";
  std::string s;
  const bool multi = g.terms().size() > 1;
  for (std::size_t i = 0; i < g.terms().size(); ++i) {
    const Term& t = g.terms()[i];
    if (i) s += " | ";
    const bool paren = multi && t.size() > 1;
    if (paren) s += "(";
    for (std::size_t j = 0; j < t.size(); ++j) {
      if (j) s += " & ";
      s += smv_detail::checked(t[j].lhs) + " = " + smv_detail::checked(t[j].value);
    }
    if (paren) s += ")";
  }
  return s;
}

inline std::string emit_smv(const TransitionSystem& ts) {
  std::string out = "MODULE main\n";
  if (!ts.variables.empty()) {
    out += "VAR\n";
    for (const auto& v : ts.variables) {
      out += "  " + smv_detail::checked(v.name) + " : {";
      for (std::size_t i = 0; i < v.domain.size(); ++i) {
        if (i) out += ", ";
        out += smv_detail::checked(v.domain[i]);
      }
      out += "};\n";
    }
    out += "ASSIGN\n";
    for (const auto& v : ts.variables) {
      out += "  init(" + v.name + ") := " + smv_detail::value_set(v.init) + ";\n";
      const TransitionRule* r = ts.rule_for(v.name);
      if (r == nullptr) throw Error(ErrorKind::kSchema, "variable " + v.name + " has no rule");
      if (r->rules.cases.empty()) {
        out += "  next(" + v.name + ") := " + smv_detail::choice(v.name, r->rules.fallback) + ";\n";
        continue;
      }
      out += "  next(" + v.name + ") := case\n";
      for (const auto& c : r->rules.cases) {
        out += "    " + render_guard(c.guard) + " : " + smv_detail::choice(v.name, c.choice) + ";\n";
      }
      out += "    TRUE : " + smv_detail::choice(v.name, r->rules.fallback) + ";\n";
      out += "  esac;\n";
    }
  }
  for (const auto& f : ts.fairness) out += "FAIRNESS " + render_guard(f) + ";\n";
  for (const auto& f : ts.specs) {
    f.for_each_atom([](const CtlFormula& a) {
      smv_detail::checked(a.var);
      smv_detail::checked(a.value);
    });
    out += "CTLSPEC " + to_string(f) + "\n";
  }
  return out;
}

}  // namespace vsv
