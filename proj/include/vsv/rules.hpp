// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

// Guarded value-choice rules shared by node semantics and the transition IR.
//
// A Guard is kept in disjunctive normal form: a list of conjunctive terms.
// The empty term list is FALSE, a term with no atoms is TRUE. Node-semantics
// guards use the placeholders `in`, `out` and `state` on the left-hand side;
// instantiation replaces them with concrete variable names.

#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "vsv/error.hpp"

namespace vsv {

inline constexpr const char* kNone = "none";

using Assignment = std::map<std::string, std::string>;

struct Atom {
  std::string lhs;
  std::string value;

  friend bool operator==(const Atom&, const Atom&) = default;
  friend auto operator<=>(const Atom&, const Atom&) = default;
};

using Term = std::vector<Atom>;

class Guard {
 public:
  Guard() = default;
  explicit Guard(std::vector<Term> terms) : terms_(std::move(terms)) {}

  static Guard always() { return Guard({Term{}}); }
  static Guard never() { return Guard(); }
  static Guard atom(std::string lhs, std::string value) {
    return Guard({Term{Atom{std::move(lhs), std::move(value)}}});
  }
  static Guard conj(Term atoms) { return Guard({std::move(atoms)}); }

  const std::vector<Term>& terms() const { return terms_; }

  bool is_true() const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [](const Term& t) { return t.empty(); });
  }
  bool is_false() const { return terms_.empty(); }

  // Disjunction; duplicate terms are dropped, order of first appearance kept.
  Guard& or_with(const Guard& other) {
    for (const auto& t : other.terms_) {
      if (std::find(terms_.begin(), terms_.end(), t) == terms_.end()) {
        terms_.push_back(t);
      }
    }
    return *this;
  }

  bool references(const std::string& lhs) const {
    for (const auto& t : terms_)
      for (const auto& a : t)
        if (a.lhs == lhs) return true;
    return false;
  }

  template <typename Fn>
  void for_each_atom(Fn&& fn) const {
    for (const auto& t : terms_)
      for (const auto& a : t) fn(a);
  }

  bool eval(const Assignment& s) const;

  // Replaces every atom by a guard (distributing over conjunctions).
  Guard expand(const std::function<Guard(const Atom&)>& rewrite) const;

  // Renames atom left-hand sides; atoms not in the map are kept.
  Guard rename(const std::map<std::string, std::string>& names) const {
    return expand([&](const Atom& a) {
      auto it = names.find(a.lhs);
      return Guard::atom(it == names.end() ? a.lhs : it->second, a.value);
    });
  }

  friend bool operator==(const Guard&, const Guard&) = default;

 private:
  std::vector<Term> terms_;
};

inline bool Guard::eval(const Assignment& s) const {
  for (const auto& term : terms_) {
    bool all = true;
    for (const auto& a : term) {
      auto it = s.find(a.lhs);
      if (it == s.end()) {
        throw Error(ErrorKind::kUnknownSymbol,
                    "guard references unknown variable " + a.lhs);
      }
      if (it->second != a.value) {
        all = false;
        break;
      }
    }
    if (all) return true;
  }
  return false;
}

inline Guard Guard::expand(
    const std::function<Guard(const Atom&)>& rewrite) const {
  Guard out;
  for (const auto& term : terms_) {
    std::vector<Term> partial{Term{}};
    for (const auto& a : term) {
      Guard g = rewrite(a);
      std::vector<Term> next;
      for (const auto& p : partial) {
        for (const auto& t : g.terms()) {
          Term merged = p;
          for (const auto& atom : t) {
            if (std::find(merged.begin(), merged.end(), atom) == merged.end())
              merged.push_back(atom);
          }
          next.push_back(std::move(merged));
        }
      }
      partial = std::move(next);
    }
    out.or_with(Guard(std::move(partial)));
  }
  return out;
}

// A non-empty set of values, or `hold` meaning the target keeps its current
// value. Mixing both is not representable in the emitted case syntax.
struct ValueChoice {
  std::vector<std::string> values;
  bool hold = false;

  static ValueChoice of(std::vector<std::string> v) {
    return ValueChoice{std::move(v), false};
  }
  static ValueChoice one(std::string v) { return of({std::move(v)}); }
  static ValueChoice keep() { return ValueChoice{{}, true}; }

  bool deterministic() const { return hold || values.size() == 1; }

  friend bool operator==(const ValueChoice&, const ValueChoice&) = default;
};

struct Case {
  Guard guard;
  ValueChoice choice;

  friend bool operator==(const Case&, const Case&) = default;
};

// First matching case wins; `fallback` applies when none match.
struct RuleList {
  std::vector<Case> cases;
  ValueChoice fallback = ValueChoice::keep();

  const ValueChoice& select(const Assignment& s) const {
    for (const auto& c : cases)
      if (c.guard.eval(s)) return c.choice;
    return fallback;
  }

  friend bool operator==(const RuleList&, const RuleList&) = default;
};

}  // namespace vsv
