// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

// Explicit-state fair-CTL model checking.
//
// The reachable state space is built breadth-first from the initial states.
// Formulas are evaluated bottom-up over state sets. Under fairness, EG is
// computed from the nontrivial strongly connected components of the
// phi-restricted graph that meet every fairness set; EX and EU are then
// restricted to fair states. A-forms are reduced to E-forms by duality.

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <deque>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "vsv/ctl.hpp"
#include "vsv/error.hpp"
#include "vsv/ir.hpp"
#include "vsv/trace.hpp"

namespace vsv {

inline constexpr std::size_t kDefaultStateCap = 5'000'000;

struct CheckerOptions {
  std::size_t state_cap = kDefaultStateCap;
};

using StateSet = std::vector<char>;

// A transition system with names resolved to indices.
class CompiledSystem {
 public:
  using Value = std::uint16_t;

  struct CAtom {
    std::uint32_t var;
    Value value;
  };
  using CTerm = std::vector<CAtom>;
  using CGuard = std::vector<CTerm>;

  struct CChoice {
    std::vector<Value> values;
    bool hold = false;
  };
  struct CCase {
    CGuard guard;
    CChoice choice;
  };
  struct CRule {
    std::vector<CCase> cases;
    CChoice fallback;
  };

  explicit CompiledSystem(const TransitionSystem& ts) {
    for (const auto& v : ts.variables) {
      if (v.domain.size() > 0xffff) throw Error(ErrorKind::kSchema, "domain of " + v.name + " is too large");
      names_.push_back(v.name);
      domains_.push_back(v.domain);
      std::vector<Value> init;
      for (const auto& i : v.init) init.push_back(value_of(names_.size() - 1, i));
      init_.push_back(std::move(init));
    }
    for (const auto& v : ts.variables) {
      const TransitionRule* r = ts.rule_for(v.name);
      if (r == nullptr) throw Error(ErrorKind::kSchema, "variable " + v.name + " has no rule");
      const std::uint32_t self = index_of(v.name);
      CRule cr;
      for (const auto& c : r->rules.cases) cr.cases.push_back({compile(c.guard), compile(self, c.choice)});
      cr.fallback = compile(self, r->rules.fallback);
      rules_.push_back(std::move(cr));
    }
    for (const auto& f : ts.fairness) fairness_.push_back(compile(f));
  }

  std::size_t width() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const std::string& value_name(std::size_t var, Value v) const { return domains_[var][v]; }
  const std::vector<CGuard>& fairness() const { return fairness_; }
  const std::vector<std::vector<Value>>& init() const { return init_; }

  std::uint32_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return static_cast<std::uint32_t>(i);
    throw Error(ErrorKind::kUnknownSymbol, "unknown variable " + name);
  }

  Value value_of(std::size_t var, const std::string& value) const {
    const auto& d = domains_[var];
    for (std::size_t i = 0; i < d.size(); ++i)
      if (d[i] == value) return static_cast<Value>(i);
    throw Error(ErrorKind::kUnknownSymbol, "value " + value + " not in domain of " + names_[var]);
  }

  CGuard compile(const Guard& g) const {
    CGuard out;
    for (const auto& t : g.terms()) {
      CTerm ct;
      for (const auto& a : t) {
        const std::uint32_t v = index_of(a.lhs);
        ct.push_back({v, value_of(v, a.value)});
      }
      out.push_back(std::move(ct));
    }
    return out;
  }

  static bool eval(const CGuard& g, const Value* s) {
    for (const auto& t : g) {
      bool all = true;
      for (const auto& a : t) {
        if (s[a.var] != a.value) {
          all = false;
          break;
        }
      }
      if (all) return true;
    }
    return false;
  }

  // Calls `emit` once per distinct successor of `s`, in the order fixed by
  // successors().
  template <typename Fn>
  void for_each_successor(const Value* s, std::vector<Value>& scratch, Fn&& emit) const {
    const std::size_t n = width();
    std::vector<const std::vector<Value>*> options(n);
    std::vector<Value> held(n);
    for (std::size_t i = 0; i < n; ++i) {
      const CChoice* c = &rules_[i].fallback;
      for (const auto& k : rules_[i].cases) {
        if (eval(k.guard, s)) {
          c = &k.choice;
          break;
        }
      }
      if (c->hold) {
        held[i] = s[i];
        options[i] = nullptr;
      } else {
        options[i] = &c->values;
      }
    }
    scratch.assign(n, 0);
    std::vector<std::size_t> idx(n, 0);
    auto size_of = [&](std::size_t i) { return options[i] ? options[i]->size() : std::size_t{1}; };
    while (true) {
      for (std::size_t i = 0; i < n; ++i) scratch[i] = options[i] ? (*options[i])[idx[i]] : held[i];
      emit(scratch.data());
      std::size_t k = n;
      while (k > 0) {
        --k;
        if (++idx[k] < size_of(k)) break;
        idx[k] = 0;
        if (k == 0) return;
      }
      if (n == 0) return;
    }
  }

 private:
  CChoice compile(std::uint32_t self, const ValueChoice& c) const {
    CChoice out;
    out.hold = c.hold;
    for (const auto& v : c.values) {
      Value x = value_of(self, v);
      bool seen = false;
      for (Value y : out.values) seen = seen || y == x;
      if (!seen) out.values.push_back(x);
    }
    return out;
  }

  std::vector<std::string> names_;
  std::vector<std::vector<std::string>> domains_;
  std::vector<std::vector<Value>> init_;
  std::vector<CRule> rules_;
  std::vector<CGuard> fairness_;
};

// Reachable states with forward and backward adjacency. Immutable once built.
class KripkeStructure {
 public:
  using Value = CompiledSystem::Value;

  KripkeStructure(const TransitionSystem& ts, const CheckerOptions& opts) : sys_(ts) { build(opts); }

  const CompiledSystem& system() const { return sys_; }
  std::size_t size() const { return count_; }
  const std::vector<std::uint32_t>& initial() const { return initial_; }
  const Value* state(std::uint32_t i) const { return flat_.data() + std::size_t{i} * sys_.width(); }

  std::pair<const std::uint32_t*, const std::uint32_t*> successors(std::uint32_t i) const {
    return {succ_.data() + succ_off_[i], succ_.data() + succ_off_[i + 1]};
  }
  std::pair<const std::uint32_t*, const std::uint32_t*> predecessors(std::uint32_t i) const {
    return {pred_.data() + pred_off_[i], pred_.data() + pred_off_[i + 1]};
  }

  const std::vector<StateSet>& fairness_sets() const { return fairness_; }

  Assignment assignment(std::uint32_t i) const {
    Assignment a;
    const Value* s = state(i);
    for (std::size_t v = 0; v < sys_.width(); ++v) a[sys_.names()[v]] = sys_.value_name(v, s[v]);
    return a;
  }

  // True where `var = value`.
  StateSet atom(const std::string& var, const std::string& value) const {
    const std::uint32_t v = sys_.index_of(var);
    const Value x = sys_.value_of(v, value);
    StateSet out(count_, 0);
    for (std::uint32_t i = 0; i < count_; ++i) out[i] = state(i)[v] == x;
    return out;
  }

 private:
  struct Hash {
    const KripkeStructure* k;
    std::size_t operator()(std::uint32_t i) const { return k->hash(k->state(i)); }
  };
  struct Eq {
    const KripkeStructure* k;
    bool operator()(std::uint32_t a, std::uint32_t b) const {
      return std::equal(k->state(a), k->state(a) + k->sys_.width(), k->state(b));
    }
  };

  std::size_t hash(const Value* s) const {
    std::size_t h = 1469598103934665603ull;
    for (std::size_t i = 0; i < sys_.width(); ++i) h = (h ^ s[i]) * 1099511628211ull;
    return h;
  }

  void build(const CheckerOptions& opts) {
    const std::size_t w = sys_.width();
    std::unordered_map<std::uint32_t, std::uint32_t, Hash, Eq> index(1024, Hash{this}, Eq{this});
    // The candidate state is staged at the end of `flat_` so it can be
    // looked up by index before it is committed.
    auto intern = [&](const Value* s) -> std::uint32_t {
      flat_.insert(flat_.end(), s, s + w);
      const auto candidate = static_cast<std::uint32_t>(count_);
      auto [it, fresh] = index.emplace(candidate, candidate);
      if (!fresh) {
        flat_.resize(flat_.size() - w);
        return it->second;
      }
      if (++count_ > opts.state_cap) {
        throw Error(ErrorKind::kStateCap, "state-cap exceeded: more than " + std::to_string(opts.state_cap) +
                                              " reachable states; retry with --engine nusmv");
      }
      return candidate;
    };

    std::vector<Value> cur(w, 0);
    std::vector<std::size_t> idx(w, 0);
    while (true) {
      for (std::size_t i = 0; i < w; ++i) cur[i] = sys_.init()[i][idx[i]];
      intern(cur.data());
      std::size_t k = w;
      bool done = w == 0;
      while (k > 0) {
        --k;
        if (++idx[k] < sys_.init()[k].size()) break;
        idx[k] = 0;
        if (k == 0) done = true;
      }
      if (done) break;
    }
    for (std::uint32_t i = 0; i < count_; ++i) initial_.push_back(i);

    succ_off_.push_back(0);
    std::vector<Value> scratch, here(w);
    std::vector<std::uint32_t> local;
    for (std::uint32_t i = 0; i < count_; ++i) {
      std::copy(state(i), state(i) + w, here.begin());
      local.clear();
      sys_.for_each_successor(here.data(), scratch, [&](const Value* s) { local.push_back(intern(s)); });
      succ_.insert(succ_.end(), local.begin(), local.end());
      succ_off_.push_back(static_cast<std::uint32_t>(succ_.size()));
    }
    if (succ_.size() > 0xffffffffull) throw Error(ErrorKind::kStateCap, "transition relation too large");

    std::vector<std::uint32_t> deg(count_ + 1, 0);
    for (auto t : succ_) ++deg[t + 1];
    for (std::size_t i = 1; i <= count_; ++i) deg[i] += deg[i - 1];
    pred_off_ = deg;
    pred_.assign(succ_.size(), 0);
    for (std::uint32_t i = 0; i < count_; ++i)
      for (auto p = succ_off_[i]; p < succ_off_[i + 1]; ++p) pred_[deg[succ_[p]]++] = i;

    for (const auto& g : sys_.fairness()) {
      StateSet f(count_, 0);
      for (std::uint32_t i = 0; i < count_; ++i) f[i] = CompiledSystem::eval(g, state(i));
      fairness_.push_back(std::move(f));
    }
  }

  CompiledSystem sys_;
  std::vector<Value> flat_;
  std::size_t count_ = 0;
  std::vector<std::uint32_t> initial_;
  std::vector<std::uint32_t> succ_off_, succ_, pred_off_, pred_;
  std::vector<StateSet> fairness_;
};

inline KripkeStructure build_state_space(const TransitionSystem& ts, const CheckerOptions& opts = {}) {
  return KripkeStructure(ts, opts);
}

struct Verdict {
  CtlFormula spec;
  bool holds = false;
  std::optional<Trace> counterexample;
};

// A path of state indices; `loop_start` indexes the first loop state.
struct StatePath {
  std::vector<std::uint32_t> states;
  std::optional<std::size_t> loop_start;
};

class FairCtlChecker {
 public:
  explicit FairCtlChecker(const KripkeStructure& k) : k_(k), n_(k.size()) {}

  const KripkeStructure& structure() const { return k_; }

  // States from which some fair path starts.
  const StateSet& fair() {
    if (!fair_) fair_ = eg(all());
    return *fair_;
  }

  StateSet sat(const CtlFormula& f) {
    switch (f.op) {
      case CtlOp::kTrue: return all();
      case CtlOp::kFalse: return StateSet(n_, 0);
      case CtlOp::kAtom: return k_.atom(f.var, f.value);
      case CtlOp::kNot: return negate(sat(f.args[0]));
      case CtlOp::kAnd: return conj(sat(f.args[0]), sat(f.args[1]));
      case CtlOp::kOr: return disj(sat(f.args[0]), sat(f.args[1]));
      case CtlOp::kImplies: return disj(negate(sat(f.args[0])), sat(f.args[1]));
      case CtlOp::kEX: return ex(sat(f.args[0]));
      case CtlOp::kEF: return eu(all(), sat(f.args[0]));
      case CtlOp::kEG: return eg(sat(f.args[0]));
      case CtlOp::kEU: return eu(sat(f.args[0]), sat(f.args[1]));
      case CtlOp::kAX: return negate(ex(negate(sat(f.args[0]))));
      case CtlOp::kAF: return negate(eg(negate(sat(f.args[0]))));
      case CtlOp::kAG: return negate(eu(all(), negate(sat(f.args[0]))));
      case CtlOp::kAU: {
        const StateSet p = sat(f.args[0]);
        const StateSet q = sat(f.args[1]);
        const StateSet nq = negate(q);
        return negate(disj(eu(nq, conj(negate(p), nq)), eg(nq)));
      }
    }
    return StateSet(n_, 0);
  }

  Verdict check(const CtlFormula& f) {
    Verdict v{f, true, std::nullopt};
    const StateSet s = sat(f);
    const StateSet& fr = fair();
    for (std::uint32_t i : k_.initial()) {
      if (fr[i] && !s[i]) {
        v.holds = false;
        if (auto p = fails(f, i)) v.counterexample = to_trace(*p);
        break;
      }
    }
    return v;
  }

  Trace to_trace(const StatePath& p) const {
    Trace t;
    const std::size_t ls = p.loop_start.value_or(p.states.size());
    for (std::size_t i = 0; i < p.states.size(); ++i)
      (i < ls ? t.prefix : t.loop).push_back(k_.assignment(p.states[i]));
    return t;
  }

  // Witness that `f` fails at `s`; nullopt when the form has no linear
  // witness (e.g. a failing EX/EF/EG/EU).
  std::optional<StatePath> fails(const CtlFormula& f, std::uint32_t s) {
    if (!f.has_temporal()) return fair_continuation(s);
    const auto& a = f.args;
    switch (f.op) {
      case CtlOp::kNot: return holds(a[0], s);
      case CtlOp::kAnd: {
        if (!sat(a[0])[s]) return fails(a[0], s);
        return fails(a[1], s);
      }
      case CtlOp::kOr: {
        if (!a[0].has_temporal()) return fails(a[1], s);
        if (!a[1].has_temporal()) return fails(a[0], s);
        return std::nullopt;
      }
      case CtlOp::kImplies: {
        if (!a[0].has_temporal()) return fails(a[1], s);
        if (!a[1].has_temporal()) return holds(a[0], s);
        return std::nullopt;
      }
      case CtlOp::kAG: {
        const StateSet target = conj(negate(sat(a[0])), fair());
        auto stem = bfs(s, target, all(), false);
        if (!stem) return std::nullopt;
        return join(*stem, fails(a[0], stem->back()));
      }
      case CtlOp::kAF: return lasso(s, negate(sat(a[0])));
      case CtlOp::kAX: {
        const StateSet target = conj(negate(sat(a[0])), fair());
        auto [b, e] = k_.successors(s);
        for (; b != e; ++b) {
          if (target[*b]) return join({s, *b}, fails(a[0], *b));
        }
        return std::nullopt;
      }
      case CtlOp::kAU: {
        const StateSet p = sat(a[0]);
        const StateSet q = sat(a[1]);
        const StateSet nq = negate(q);
        if (eg(nq)[s]) return lasso(s, nq);
        const StateSet target = conj(conj(negate(p), nq), fair());
        auto stem = bfs(s, target, nq, false);
        if (!stem) return std::nullopt;
        return join(*stem, fair_continuation(stem->back()));
      }
      default: return std::nullopt;
    }
  }

  // Witness that `f` holds at `s`, for existential forms.
  std::optional<StatePath> holds(const CtlFormula& f, std::uint32_t s) {
    if (!f.has_temporal()) return fair_continuation(s);
    const auto& a = f.args;
    switch (f.op) {
      case CtlOp::kNot: return fails(a[0], s);
      case CtlOp::kAnd: {
        if (!a[0].has_temporal()) return holds(a[1], s);
        if (!a[1].has_temporal()) return holds(a[0], s);
        return std::nullopt;
      }
      case CtlOp::kOr: {
        if (sat(a[0])[s]) return holds(a[0], s);
        return holds(a[1], s);
      }
      case CtlOp::kImplies: {
        if (!sat(a[0])[s]) return fails(a[0], s);
        return holds(a[1], s);
      }
      case CtlOp::kEF: {
        auto stem = bfs(s, conj(sat(a[0]), fair()), all(), false);
        if (!stem) return std::nullopt;
        return join(*stem, holds(a[0], stem->back()));
      }
      case CtlOp::kEU: {
        auto stem = bfs(s, conj(sat(a[1]), fair()), sat(a[0]), false);
        if (!stem) return std::nullopt;
        return join(*stem, holds(a[1], stem->back()));
      }
      case CtlOp::kEG: return lasso(s, sat(a[0]));
      case CtlOp::kEX: {
        const StateSet target = conj(sat(a[0]), fair());
        auto [b, e] = k_.successors(s);
        for (; b != e; ++b) {
          if (target[*b]) return join({s, *b}, holds(a[0], *b));
        }
        return std::nullopt;
      }
      default: return std::nullopt;
    }
  }

  // Fair path from `s` staying inside `phi` forever; requires s in EG phi.
  std::optional<StatePath> lasso(std::uint32_t s, const StateSet& phi) {
    const Sccs sccs = fair_sccs(phi);
    const StateSet inside = eg_from(phi, sccs);
    if (!inside[s]) return std::nullopt;
    StateSet in_fair_scc(n_, 0);
    for (std::uint32_t i = 0; i < n_; ++i) in_fair_scc[i] = sccs.id[i] >= 0 && sccs.fair[sccs.id[i]];
    auto stem = bfs(s, in_fair_scc, inside, false);
    if (!stem) return std::nullopt;
    const std::uint32_t entry = stem->back();
    const int comp = sccs.id[entry];
    StateSet region(n_, 0);
    for (std::uint32_t i = 0; i < n_; ++i) region[i] = sccs.id[i] == comp;

    std::vector<std::uint32_t> loop{entry};
    for (const auto& f : k_.fairness_sets()) {
      bool met = false;
      for (auto x : loop) met = met || f[x];
      if (met) continue;
      auto seg = bfs(loop.back(), conj(f, region), region, false);
      if (!seg) return std::nullopt;
      loop.insert(loop.end(), seg->begin() + 1, seg->end());
    }
    StateSet back(n_, 0);
    back[entry] = 1;
    auto seg = bfs(loop.back(), back, region, true);
    if (!seg) return std::nullopt;
    loop.insert(loop.end(), seg->begin() + 1, seg->end() - 1);

    StatePath p;
    p.states.assign(stem->begin(), stem->end() - 1);
    p.loop_start = p.states.size();
    p.states.insert(p.states.end(), loop.begin(), loop.end());
    return p;
  }

 private:
  struct Sccs {
    std::vector<int> id;     // -1 outside phi
    std::vector<char> fair;  // per component
  };

  StateSet all() const { return StateSet(n_, 1); }
  static StateSet negate(StateSet a) {
    for (auto& x : a) x = !x;
    return a;
  }
  static StateSet conj(StateSet a, const StateSet& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] && b[i];
    return a;
  }
  static StateSet disj(StateSet a, const StateSet& b) {
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = a[i] || b[i];
    return a;
  }

  StateSet pre(const StateSet& target) const {
    StateSet out(n_, 0);
    for (std::uint32_t t = 0; t < n_; ++t) {
      if (!target[t]) continue;
      auto [b, e] = k_.predecessors(t);
      for (; b != e; ++b) out[*b] = 1;
    }
    return out;
  }

  StateSet ex(const StateSet& phi) { return pre(conj(phi, fair())); }

  // Least fixpoint: psi-and-fair states, then phi predecessors.
  StateSet eu(const StateSet& phi, const StateSet& psi) {
    StateSet out = conj(psi, fair());
    std::deque<std::uint32_t> work;
    for (std::uint32_t i = 0; i < n_; ++i)
      if (out[i]) work.push_back(i);
    while (!work.empty()) {
      const std::uint32_t t = work.front();
      work.pop_front();
      auto [b, e] = k_.predecessors(t);
      for (; b != e; ++b) {
        if (!out[*b] && phi[*b]) {
          out[*b] = 1;
          work.push_back(*b);
        }
      }
    }
    return out;
  }

  // Iterative Tarjan over the subgraph induced by `phi`.
  Sccs fair_sccs(const StateSet& phi) const {
    Sccs r;
    r.id.assign(n_, -1);
    std::vector<int> low(n_, 0), num(n_, -1);
    std::vector<char> on_stack(n_, 0);
    std::vector<std::uint32_t> stack;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> call;  // state, next edge offset
    int counter = 0, comps = 0;
    std::vector<char> nontrivial;
    for (std::uint32_t root = 0; root < n_; ++root) {
      if (!phi[root] || num[root] >= 0) continue;
      call.push_back({root, 0});
      num[root] = low[root] = counter++;
      stack.push_back(root);
      on_stack[root] = 1;
      while (!call.empty()) {
        auto& [v, next] = call.back();
        auto [b, e] = k_.successors(v);
        if (b + next < e) {
          const std::uint32_t w = b[next++];
          if (!phi[w]) continue;
          if (num[w] < 0) {
            num[w] = low[w] = counter++;
            stack.push_back(w);
            on_stack[w] = 1;
            call.push_back({w, 0});
          } else if (on_stack[w]) {
            low[v] = std::min(low[v], num[w]);
          }
          continue;
        }
        const std::uint32_t done = v;
        call.pop_back();
        if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
        if (low[done] != num[done]) continue;
        std::size_t members = 0;
        std::uint32_t x;
        do {
          x = stack.back();
          stack.pop_back();
          on_stack[x] = 0;
          r.id[x] = comps;
          ++members;
        } while (x != done);
        bool loops = members > 1;
        if (!loops) {
          auto [sb, se] = k_.successors(done);
          for (; sb != se; ++sb) loops = loops || *sb == done;
        }
        nontrivial.push_back(loops);
        ++comps;
      }
    }
    r.fair.assign(comps, 0);
    std::vector<std::vector<char>> meets(k_.fairness_sets().size(), std::vector<char>(comps, 0));
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (r.id[i] < 0) continue;
      for (std::size_t f = 0; f < k_.fairness_sets().size(); ++f)
        if (k_.fairness_sets()[f][i]) meets[f][r.id[i]] = 1;
    }
    for (int c = 0; c < comps; ++c) {
      bool ok = nontrivial[c];
      for (const auto& m : meets) ok = ok && m[c];
      r.fair[c] = ok;
    }
    return r;
  }

  StateSet eg_from(const StateSet& phi, const Sccs& sccs) const {
    StateSet out(n_, 0);
    std::deque<std::uint32_t> work;
    for (std::uint32_t i = 0; i < n_; ++i) {
      if (sccs.id[i] >= 0 && sccs.fair[sccs.id[i]]) {
        out[i] = 1;
        work.push_back(i);
      }
    }
    while (!work.empty()) {
      const std::uint32_t t = work.front();
      work.pop_front();
      auto [b, e] = k_.predecessors(t);
      for (; b != e; ++b) {
        if (!out[*b] && phi[*b]) {
          out[*b] = 1;
          work.push_back(*b);
        }
      }
    }
    return out;
  }

  StateSet eg(const StateSet& phi) { return eg_from(phi, fair_sccs(phi)); }

  // Shortest path from `s` to a `target` state through `within` states.
  // With `strict`, the path takes at least one step.
  std::optional<std::vector<std::uint32_t>> bfs(std::uint32_t s, const StateSet& target, const StateSet& within,
                                                bool strict) const {
    if (!strict && target[s]) return std::vector<std::uint32_t>{s};
    std::unordered_map<std::uint32_t, std::uint32_t> parent;
    std::deque<std::uint32_t> work{s};
    std::vector<char> seen(n_, 0);
    if (!strict) seen[s] = 1;
    while (!work.empty()) {
      const std::uint32_t v = work.front();
      work.pop_front();
      auto [b, e] = k_.successors(v);
      for (; b != e; ++b) {
        const std::uint32_t w = *b;
        if (seen[w] || !(within[w] || target[w])) continue;
        seen[w] = 1;
        parent[w] = v;
        if (target[w]) {
          std::vector<std::uint32_t> path{w};
          std::uint32_t x = w;
          do {
            x = parent.at(x);
            path.push_back(x);
          } while (x != s || path.size() == 1);
          std::reverse(path.begin(), path.end());
          return path;
        }
        if (within[w]) work.push_back(w);
      }
    }
    return std::nullopt;
  }

  std::optional<StatePath> fair_continuation(std::uint32_t s) { return lasso(s, all()); }

  static std::optional<StatePath> join(const std::vector<std::uint32_t>& stem, std::optional<StatePath> rest) {
    if (!rest) return std::nullopt;
    StatePath p;
    p.states.assign(stem.begin(), stem.end() - 1);
    const std::size_t offset = p.states.size();
    p.states.insert(p.states.end(), rest->states.begin(), rest->states.end());
    if (rest->loop_start) p.loop_start = *rest->loop_start + offset;
    return p;
  }

  const KripkeStructure& k_;
  std::uint32_t n_;
  std::optional<StateSet> fair_;
};

inline Verdict check(const TransitionSystem& ts, const CtlFormula& f, const CheckerOptions& opts = {}) {
  const KripkeStructure k = build_state_space(ts, opts);
  FairCtlChecker c(k);
  return c.check(f);
}

inline std::vector<Verdict> check_all(const TransitionSystem& ts, const CheckerOptions& opts = {}) {
  const KripkeStructure k = build_state_space(ts, opts);
  FairCtlChecker c(k);
  std::vector<Verdict> out;
  for (const auto& f : ts.specs) out.push_back(c.check(f));
  return out;
}

struct ReachableStats {
  std::size_t count = 0;
  double log2 = 0;
  std::string formatted;  // "2^13.2429"
};

inline std::string format_log2(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "2^%.4f", x);
  return buf;
}

inline ReachableStats reachable_stats(const TransitionSystem& ts, const CheckerOptions& opts = {}) {
  const KripkeStructure k = build_state_space(ts, opts);
  ReachableStats r;
  r.count = k.size();
  r.log2 = std::log2(static_cast<double>(r.count));
  r.formatted = format_log2(r.log2);
  return r;
}

}  // namespace vsv
