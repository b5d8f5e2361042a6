// Copyright 2026 The vsverify Authors
// SPDX-License-Identifier: Apache-2.0

// CTL formulas over `var = value` atoms: AST, parser and SMV-style printer.

#pragma once

#include <cctype>
#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vsv/error.hpp"

namespace vsv {

enum class CtlOp {
  kTrue,
  kFalse,
  kAtom,
  kNot,
  kAnd,
  kOr,
  kImplies,
  kEX,
  kEF,
  kEG,
  kAX,
  kAF,
  kAG,
  kEU,
  kAU,
};

struct CtlFormula {
  CtlOp op = CtlOp::kTrue;
  std::string var;    // kAtom
  std::string value;  // kAtom
  std::vector<CtlFormula> args;
  // Set when the formula was written (or built) inside parentheses; the
  // printer reproduces the grouping.
  bool grouped = false;

  static CtlFormula t() { return {}; }
  static CtlFormula f() { return CtlFormula{CtlOp::kFalse, {}, {}, {}, false}; }
  static CtlFormula atom(std::string var, std::string value) {
    return CtlFormula{CtlOp::kAtom, std::move(var), std::move(value), {}, false};
  }
  static CtlFormula unary(CtlOp op, CtlFormula a) {
    CtlFormula r;
    r.op = op;
    r.args.push_back(std::move(a));
    return r;
  }
  static CtlFormula binary(CtlOp op, CtlFormula a, CtlFormula b) {
    CtlFormula r;
    r.op = op;
    r.args.push_back(std::move(a));
    r.args.push_back(std::move(b));
    return r;
  }
  static CtlFormula negate(CtlFormula a) { return unary(CtlOp::kNot, std::move(a)); }

  CtlFormula group() const& {
    CtlFormula r = *this;
    r.grouped = true;
    return r;
  }

  const CtlFormula& lhs() const { return args.at(0); }
  const CtlFormula& rhs() const { return args.at(1); }

  bool is_temporal() const {
    switch (op) {
      case CtlOp::kEX: case CtlOp::kEF: case CtlOp::kEG: case CtlOp::kAX:
      case CtlOp::kAF: case CtlOp::kAG: case CtlOp::kEU: case CtlOp::kAU:
        return true;
      default:
        return false;
    }
  }

  bool has_temporal() const {
    if (is_temporal()) return true;
    for (const auto& a : args)
      if (a.has_temporal()) return true;
    return false;
  }

  template <typename Fn>
  void for_each_atom(Fn&& fn) const {
    if (op == CtlOp::kAtom) fn(*this);
    for (const auto& a : args) a.for_each_atom(fn);
  }

  // Replaces atoms bottom-up; the replacement is grouped when it is compound.
  CtlFormula map_atoms(const std::function<CtlFormula(const CtlFormula&)>& fn) const {
    if (op == CtlOp::kAtom) {
      CtlFormula r = fn(*this);
      r.grouped = r.grouped || grouped || !r.args.empty();
      return r;
    }
    CtlFormula r = *this;
    for (auto& a : r.args) a = a.map_atoms(fn);
    return r;
  }

  // Structural equality; grouping is presentation only.
  friend bool operator==(const CtlFormula& a, const CtlFormula& b) {
    return a.op == b.op && a.var == b.var && a.value == b.value && a.args == b.args;
  }
};

namespace ctl_detail {

inline int precedence(CtlOp op) {
  switch (op) {
    case CtlOp::kImplies: return 1;
    case CtlOp::kOr: return 2;
    case CtlOp::kAnd: return 3;
    case CtlOp::kNot: case CtlOp::kEX: case CtlOp::kEF: case CtlOp::kEG:
    case CtlOp::kAX: case CtlOp::kAF: case CtlOp::kAG:
      return 4;
    default:
      return 5;
  }
}

inline const char* unary_keyword(CtlOp op) {
  switch (op) {
    case CtlOp::kEX: return "EX";
    case CtlOp::kEF: return "EF";
    case CtlOp::kEG: return "EG";
    case CtlOp::kAX: return "AX";
    case CtlOp::kAF: return "AF";
    case CtlOp::kAG: return "AG";
    default: return "";
  }
}

inline void print(const CtlFormula& f, int min_prec, std::string& out);

inline void print_child(const CtlFormula& f, int min_prec, std::string& out) {
  const bool paren = f.grouped || precedence(f.op) < min_prec;
  if (paren) out += '(';
  print(f, paren ? 0 : min_prec, out);
  if (paren) out += ')';
}

inline void print(const CtlFormula& f, int, std::string& out) {
  switch (f.op) {
    case CtlOp::kTrue: out += "TRUE"; return;
    case CtlOp::kFalse: out += "FALSE"; return;
    case CtlOp::kAtom: out += f.var + " = " + f.value; return;
    case CtlOp::kNot:
      out += '!';
      print_child(f.lhs(), 4, out);
      return;
    case CtlOp::kEX: case CtlOp::kEF: case CtlOp::kEG:
    case CtlOp::kAX: case CtlOp::kAF: case CtlOp::kAG:
      out += unary_keyword(f.op);
      out += ' ';
      print_child(f.lhs(), 4, out);
      return;
    case CtlOp::kAnd:
      print_child(f.lhs(), 3, out);
      out += " & ";
      print_child(f.rhs(), 3, out);
      return;
    case CtlOp::kOr:
      print_child(f.lhs(), 2, out);
      out += " | ";
      print_child(f.rhs(), 2, out);
      return;
    case CtlOp::kImplies:
      print_child(f.lhs(), 2, out);
      out += " -> ";
      print_child(f.rhs(), 1, out);
      return;
    case CtlOp::kEU: case CtlOp::kAU:
      out += f.op == CtlOp::kEU ? "E [ " : "A [ ";
      print(f.lhs(), 0, out);
      out += " U ";
      print(f.rhs(), 0, out);
      out += " ]";
      return;
  }
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  CtlFormula parse() {
    CtlFormula f = implication();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::kSyntax, "CTL parse error at column " +
                                        std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  static bool ident_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$' || c == '#';
  }

  std::string peek_ident() {
    skip_ws();
    std::size_t p = pos_;
    if (p >= text_.size() ||
        !(std::isalpha(static_cast<unsigned char>(text_[p])) || text_[p] == '_'))
      return {};
    while (p < text_.size() && ident_char(text_[p])) ++p;
    return std::string(text_.substr(pos_, p - pos_));
  }

  std::string ident() {
    std::string id = peek_ident();
    if (id.empty()) fail("expected identifier");
    pos_ += id.size();
    return id;
  }

  CtlFormula implication() {
    CtlFormula lhs = disjunction();
    if (accept("->")) {
      CtlFormula rhs = implication();
      return CtlFormula::binary(CtlOp::kImplies, std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  CtlFormula disjunction() {
    CtlFormula lhs = conjunction();
    while (accept("|")) {
      lhs = CtlFormula::binary(CtlOp::kOr, std::move(lhs), conjunction());
    }
    return lhs;
  }

  CtlFormula conjunction() {
    CtlFormula lhs = unary();
    while (accept("&")) {
      lhs = CtlFormula::binary(CtlOp::kAnd, std::move(lhs), unary());
    }
    return lhs;
  }

  CtlFormula until(CtlOp op) {
    expect("[");
    CtlFormula lhs = implication();
    skip_ws();
    if (peek_ident() != "U") fail("expected 'U'");
    pos_ += 1;
    CtlFormula rhs = implication();
    expect("]");
    return CtlFormula::binary(op, std::move(lhs), std::move(rhs));
  }

  CtlFormula unary() {
    if (accept("!")) return CtlFormula::negate(unary());
    if (accept("(")) {
      CtlFormula inner = implication();
      expect(")");
      inner.grouped = true;
      return inner;
    }
    const std::string id = peek_ident();
    static const std::pair<const char*, CtlOp> kUnary[] = {
        {"EX", CtlOp::kEX}, {"EF", CtlOp::kEF}, {"EG", CtlOp::kEG},
        {"AX", CtlOp::kAX}, {"AF", CtlOp::kAF}, {"AG", CtlOp::kAG}};
    for (const auto& [kw, op] : kUnary) {
      if (id == kw) {
        pos_ += id.size();
        return CtlFormula::unary(op, unary());
      }
    }
    if (id == "E" || id == "A") {
      pos_ += 1;
      return until(id == "E" ? CtlOp::kEU : CtlOp::kAU);
    }
    if (id == "TRUE") {
      pos_ += id.size();
      return CtlFormula::t();
    }
    if (id == "FALSE") {
      pos_ += id.size();
      return CtlFormula::f();
    }
    std::string var = ident();
    expect("=");
    std::string value = ident();
    return CtlFormula::atom(std::move(var), std::move(value));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace ctl_detail

inline CtlFormula parse_ctl(std::string_view text) {
  return ctl_detail::Parser(text).parse();
}

inline std::string to_string(const CtlFormula& f) {
  std::string out;
  ctl_detail::print_child(f, 0, out);
  return out;
}

// AG (var = set -> AF (var = reset))
inline CtlFormula flag_reset_formula(const std::string& var, const std::string& set,
                                     const std::string& reset) {
  CtlFormula af = CtlFormula::unary(CtlOp::kAF, CtlFormula::atom(var, reset).group());
  CtlFormula body =
      CtlFormula::binary(CtlOp::kImplies, CtlFormula::atom(var, set), std::move(af));
  return CtlFormula::unary(CtlOp::kAG, body.group());
}

}  // namespace vsv
