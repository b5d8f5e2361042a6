// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

// Test-only reference implementations. None of this shares code with the
// library's checker: models are re-read from emitted SMV text, states are
// vectors of value strings, and CTL is evaluated by textbook fixpoints.

#pragma once

#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vsv/ctl.hpp"

namespace oracle {

using State = std::vector<std::string>;

struct Atom {
  std::size_t var;
  std::string value;
};
using Conj = std::vector<Atom>;
using Dnf = std::vector<Conj>;  // TRUE is {{}}, FALSE is {}

struct Case {
  Dnf guard;
  bool hold = false;
  std::vector<std::string> values;
};

struct Model {
  std::vector<std::string> names;
  std::vector<std::vector<std::string>> domains;
  std::vector<std::vector<std::string>> init;
  std::vector<std::vector<Case>> next;  // the last case is the TRUE default
  std::vector<Dnf> fairness;
  std::vector<std::string> specs;

  std::size_t index(const std::string& n) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return i;
    throw std::runtime_error("oracle: unknown variable " + n);
  }
};

inline std::string strip(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t;");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split(const std::string& s, const std::string& sep) {
  std::vector<std::string> out;
  std::size_t pos = 0;
  while (true) {
    const auto k = s.find(sep, pos);
    out.push_back(s.substr(pos, k == std::string::npos ? std::string::npos : k - pos));
    if (k == std::string::npos) return out;
    pos = k + sep.size();
  }
}

inline std::vector<std::string> value_list(std::string s) {
  s = strip(s);
  if (!s.empty() && s.front() == '{') s = s.substr(1, s.size() - 2);
  std::vector<std::string> out;
  for (auto& v : split(s, ",")) out.push_back(strip(v));
  return out;
}

inline Dnf parse_dnf(const Model& m, std::string s) {
  s = strip(s);
  if (s == "TRUE") return {Conj{}};
  if (s == "FALSE") return {};
  Dnf d;
  for (auto term : split(s, " | ")) {
    term = strip(term);
    if (!term.empty() && term.front() == '(') term = term.substr(1, term.size() - 2);
    Conj c;
    for (auto& a : split(term, " & ")) {
      const auto parts = split(strip(a), " = ");
      if (parts.size() != 2) throw std::runtime_error("oracle: bad atom '" + a + "'");
      c.push_back({m.index(strip(parts[0])), strip(parts[1])});
    }
    d.push_back(std::move(c));
  }
  return d;
}

// Reads the subset of SMV written by the emitter.
inline Model parse_smv(const std::string& text) {
  Model m;
  std::istringstream in(text);
  std::string line;
  enum { kNone, kVar, kAssign } section = kNone;
  std::size_t current = 0;
  bool in_case = false;
  while (std::getline(in, line)) {
    const std::string t = strip(line);
    if (t.empty() || t == "MODULE main") continue;
    if (t == "VAR") {
      section = kVar;
      continue;
    }
    if (t == "ASSIGN") {
      section = kAssign;
      m.init.resize(m.names.size());
      m.next.resize(m.names.size());
      continue;
    }
    if (t.rfind("FAIRNESS ", 0) == 0) {
      m.fairness.push_back(parse_dnf(m, t.substr(9)));
      continue;
    }
    if (t.rfind("CTLSPEC ", 0) == 0) {
      m.specs.push_back(t.substr(8));
      continue;
    }
    if (section == kVar) {
      const auto colon = t.find(" : ");
      m.names.push_back(strip(t.substr(0, colon)));
      m.domains.push_back(value_list(t.substr(colon + 3)));
      continue;
    }
    if (section != kAssign) throw std::runtime_error("oracle: unexpected line " + t);
    if (t.rfind("init(", 0) == 0) {
      const auto close = t.find(')');
      m.init[m.index(t.substr(5, close - 5))] = value_list(t.substr(t.find(":=") + 2));
      continue;
    }
    auto choice = [&](const std::string& c, std::size_t var) {
      Case k;
      const std::string v = strip(c);
      if (v == m.names[var]) {
        k.hold = true;
      } else {
        k.values = value_list(v);
      }
      return k;
    };
    if (t.rfind("next(", 0) == 0) {
      const auto close = t.find(')');
      current = m.index(t.substr(5, close - 5));
      const std::string rhs = strip(t.substr(t.find(":=") + 2));
      if (rhs == "case") {
        in_case = true;
      } else {
        Case k = choice(rhs, current);
        k.guard = {Conj{}};
        m.next[current].push_back(k);
      }
      continue;
    }
    if (t == "esac") {
      in_case = false;
      continue;
    }
    if (in_case) {
      const auto colon = t.rfind(" : ");
      Case k = choice(t.substr(colon + 3), current);
      k.guard = parse_dnf(m, t.substr(0, colon));
      m.next[current].push_back(k);
      continue;
    }
    throw std::runtime_error("oracle: unexpected line " + t);
  }
  return m;
}

inline bool holds(const Dnf& d, const State& s) {
  for (const auto& c : d) {
    bool ok = true;
    for (const auto& a : c) ok = ok && s[a.var] == a.value;
    if (ok) return true;
  }
  return false;
}

inline std::vector<State> step(const Model& m, const State& s) {
  std::vector<State> out{State{}};
  for (std::size_t v = 0; v < m.names.size(); ++v) {
    std::vector<std::string> vals;
    for (const auto& c : m.next[v]) {
      if (!holds(c.guard, s)) continue;
      vals = c.hold ? std::vector<std::string>{s[v]} : c.values;
      break;
    }
    if (vals.empty()) vals = {s[v]};
    std::vector<State> grown;
    for (const auto& p : out) {
      for (const auto& x : vals) {
        State q = p;
        q.push_back(x);
        grown.push_back(q);
      }
    }
    out = grown;
  }
  return out;
}

// Straight-line breadth-first enumeration of the reachable states.
struct Graph {
  std::vector<State> states;
  std::vector<std::vector<std::size_t>> succ;
  std::vector<std::size_t> initial;
};

inline Graph enumerate(const Model& m) {
  Graph g;
  std::map<State, std::size_t> id;
  std::vector<State> init{State{}};
  for (const auto& vals : m.init) {
    std::vector<State> grown;
    for (const auto& p : init) {
      for (const auto& x : vals) {
        State q = p;
        q.push_back(x);
        grown.push_back(q);
      }
    }
    init = grown;
  }
  auto add = [&](const State& s) {
    auto it = id.find(s);
    if (it != id.end()) return it->second;
    id[s] = g.states.size();
    g.states.push_back(s);
    g.succ.emplace_back();
    return g.states.size() - 1;
  };
  for (const auto& s : init) g.initial.push_back(add(s));
  for (std::size_t i = 0; i < g.states.size(); ++i) {
    const State here = g.states[i];
    for (const auto& t : step(m, here)) {
      const std::size_t j = add(t);
      bool dup = false;
      for (auto k : g.succ[i]) dup = dup || k == j;
      if (!dup) g.succ[i].push_back(j);
    }
  }
  return g;
}

// Fair CTL by fixpoint iteration.
class Evaluator {
 public:
  using Set = std::vector<bool>;

  Evaluator(const Model& m, const Graph& g) : m_(m), g_(g), n_(g.states.size()) {
    for (const auto& f : m.fairness) {
      Set s(n_);
      for (std::size_t i = 0; i < n_; ++i) s[i] = holds(f, g.states[i]);
      fair_sets_.push_back(s);
    }
    fair_ = eg(Set(n_, true));
  }

  const Set& fair() const { return fair_; }

  Set eval(const vsv::CtlFormula& f) const {
    using vsv::CtlOp;
    switch (f.op) {
      case CtlOp::kTrue: return Set(n_, true);
      case CtlOp::kFalse: return Set(n_, false);
      case CtlOp::kAtom: {
        const std::size_t v = m_.index(f.var);
        Set s(n_);
        for (std::size_t i = 0; i < n_; ++i) s[i] = g_.states[i][v] == f.value;
        return s;
      }
      case CtlOp::kNot: return neg(eval(f.args[0]));
      case CtlOp::kAnd: return both(eval(f.args[0]), eval(f.args[1]));
      case CtlOp::kOr: return either(eval(f.args[0]), eval(f.args[1]));
      case CtlOp::kImplies: return either(neg(eval(f.args[0])), eval(f.args[1]));
      case CtlOp::kEX: return ex_plain(both(eval(f.args[0]), fair_));
      case CtlOp::kEF: return eu_plain(Set(n_, true), both(eval(f.args[0]), fair_));
      case CtlOp::kEG: return eg(eval(f.args[0]));
      case CtlOp::kEU: return eu_plain(eval(f.args[0]), both(eval(f.args[1]), fair_));
      case CtlOp::kAX: return neg(ex_plain(both(neg(eval(f.args[0])), fair_)));
      case CtlOp::kAF: return neg(eg(neg(eval(f.args[0]))));
      case CtlOp::kAG: return neg(eu_plain(Set(n_, true), both(neg(eval(f.args[0])), fair_)));
      case CtlOp::kAU: {
        const Set p = eval(f.args[0]);
        const Set q = eval(f.args[1]);
        const Set bad = eu_plain(neg(q), both(both(neg(p), neg(q)), fair_));
        return neg(either(bad, eg(neg(q))));
      }
    }
    return Set(n_, false);
  }

  // Every fair initial state satisfies f.
  bool check(const vsv::CtlFormula& f) const {
    const Set s = eval(f);
    for (auto i : g_.initial)
      if (fair_[i] && !s[i]) return false;
    return true;
  }

 private:
  Set neg(Set a) const {
    for (std::size_t i = 0; i < n_; ++i) a[i] = !a[i];
    return a;
  }
  Set both(Set a, const Set& b) const {
    for (std::size_t i = 0; i < n_; ++i) a[i] = a[i] && b[i];
    return a;
  }
  Set either(Set a, const Set& b) const {
    for (std::size_t i = 0; i < n_; ++i) a[i] = a[i] || b[i];
    return a;
  }
  Set ex_plain(const Set& a) const {
    Set r(n_, false);
    for (std::size_t i = 0; i < n_; ++i)
      for (auto j : g_.succ[i]) r[i] = r[i] || a[j];
    return r;
  }
  // mu Z. q | (p & EX Z)
  Set eu_plain(const Set& p, const Set& q) const {
    Set z = q;
    while (true) {
      const Set next = either(q, both(p, ex_plain(z)));
      if (next == z) return z;
      z = next;
    }
  }
  // nu Z. p & AND_k EX E[p U (Z & F_k)], or nu Z. p & EX Z without fairness.
  Set eg(const Set& p) const {
    Set z(n_, true);
    while (true) {
      Set next = p;
      if (fair_sets_.empty()) {
        next = both(next, ex_plain(z));
      } else {
        for (const auto& f : fair_sets_) next = both(next, ex_plain(eu_plain(p, both(z, f))));
      }
      if (next == z) return z;
      z = next;
    }
  }

  const Model& m_;
  const Graph& g_;
  std::size_t n_;
  std::vector<Set> fair_sets_;
  Set fair_;
};

}  // namespace oracle
