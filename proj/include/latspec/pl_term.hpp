#pragma once

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "latspec/errors.hpp"
#include "latspec/glambda.hpp"
#include "latspec/plfun.hpp"

namespace latspec {

/// Expression over the generators a, b. Prefix syntax:
///
///   term := a | b | 0
///         | (add term+) | (sub term term+) | (neg term)
///         | (join term+) | (meet term+)
///         | (abs term) | (pos term) | (negpart term) | (diff term term)
///         | (N term)          N a natural number: N·term
///
/// Whitespace separates tokens; `;` starts a comment running to end of line.
struct PLTerm {
  enum class Kind { a, b, zero, add, sub, neg, join, meet, abs, pos, negpart, diff, scale };
  Kind kind = Kind::zero;
  std::int64_t k = 0;
  std::vector<PLTerm> args;

  static PLTerm leaf(Kind kd) { return {kd, 0, {}}; }
  static PLTerm node(Kind kd, std::vector<PLTerm> as) { return {kd, 0, std::move(as)}; }
  static PLTerm scaled(std::int64_t k, PLTerm t) { return {Kind::scale, k, {std::move(t)}}; }

  friend bool operator==(const PLTerm&, const PLTerm&) = default;
};

inline std::string_view kind_name(PLTerm::Kind k) {
  using K = PLTerm::Kind;
  switch (k) {
    case K::a: return "a";
    case K::b: return "b";
    case K::zero: return "0";
    case K::add: return "add";
    case K::sub: return "sub";
    case K::neg: return "neg";
    case K::join: return "join";
    case K::meet: return "meet";
    case K::abs: return "abs";
    case K::pos: return "pos";
    case K::negpart: return "negpart";
    case K::diff: return "diff";
    case K::scale: return "scale";
  }
  return {};
}

inline std::string to_string(const PLTerm& t) {
  using K = PLTerm::Kind;
  if (t.kind == K::a || t.kind == K::b || t.kind == K::zero) return std::string(kind_name(t.kind));
  std::string s = "(" + (t.kind == K::scale ? std::to_string(t.k) : std::string(kind_name(t.kind)));
  for (const auto& a : t.args) s += " " + to_string(a);
  return s + ")";
}

inline PLFun evaluate(const PLTerm& t) {
  using K = PLTerm::Kind;
  switch (t.kind) {
    case K::a: return PLFun::gen_a();
    case K::b: return PLFun::gen_b();
    case K::zero: return PLFun::zero();
    case K::neg: return -evaluate(t.args[0]);
    case K::abs: return evaluate(t.args[0]).abs();
    case K::pos: return evaluate(t.args[0]).pos();
    case K::negpart: return evaluate(t.args[0]).negpart();
    case K::diff: return evaluate(t.args[0]).diff(evaluate(t.args[1]));
    case K::scale: return evaluate(t.args[0]).scale(t.k);
    case K::add:
    case K::sub:
    case K::join:
    case K::meet: {
      PLFun acc = evaluate(t.args[0]);
      for (std::size_t i = 1; i < t.args.size(); ++i) {
        const PLFun x = evaluate(t.args[i]);
        if (t.kind == K::add) acc = acc + x;
        else if (t.kind == K::sub) acc = acc - x;
        else if (t.kind == K::join) acc = acc.join(x);
        else acc = acc.meet(x);
      }
      return acc;
    }
  }
  return PLFun::zero();
}

namespace detail {

class TermParser {
 public:
  explicit TermParser(std::string_view src, std::size_t line = 1, std::size_t col = 1)
      : src_(src), line_(line), col_(col) {}

  PLTerm parse_all() {
    PLTerm t = parse_term();
    skip();
    if (pos_ < src_.size()) fail("unexpected trailing input");
    return t;
  }

  PLTerm parse_term() {
    skip();
    if (pos_ >= src_.size()) fail("unexpected end of input, expected a term");
    if (src_[pos_] == ')') fail("unexpected ')'");
    if (src_[pos_] != '(') {
      const auto [l, c] = here();
      const std::string w = word();
      if (w == "a") return PLTerm::leaf(PLTerm::Kind::a);
      if (w == "b") return PLTerm::leaf(PLTerm::Kind::b);
      if (w == "0") return PLTerm::leaf(PLTerm::Kind::zero);
      throw ParseError(is_number(w) ? "only 0 may appear as a constant" : "unknown symbol '" + w + "'", l, c);
    }
    advance();
    skip();
    const auto [hl, hc] = here();
    const std::string head = word();
    if (head.empty()) throw ParseError("expected an operator after '('", hl, hc);
    std::vector<PLTerm> args;
    for (;;) {
      skip();
      if (pos_ >= src_.size()) fail("missing ')'");
      if (src_[pos_] == ')') break;
      args.push_back(parse_term());
    }
    advance();
    using K = PLTerm::Kind;
    auto arity = [&](std::size_t lo, std::size_t hi) {
      if (args.size() < lo || args.size() > hi)
        throw ParseError("wrong number of arguments for '" + head + "'", hl, hc);
    };
    if (is_number(head)) {
      arity(1, 1);
      std::int64_t k = 0;
      for (char ch : head) k = checked_add(checked_mul(k, 10), ch - '0');
      return PLTerm::scaled(k, std::move(args[0]));
    }
    static const std::pair<std::string_view, K> ops[] = {
        {"add", K::add},   {"sub", K::sub}, {"neg", K::neg},         {"join", K::join},
        {"meet", K::meet}, {"abs", K::abs}, {"pos", K::pos},         {"negpart", K::negpart},
        {"diff", K::diff}};
    for (const auto& [name, kd] : ops) {
      if (head != name) continue;
      switch (kd) {
        case K::add:
        case K::join:
        case K::meet: arity(1, SIZE_MAX); break;
        case K::sub: arity(2, SIZE_MAX); break;
        case K::diff: arity(2, 2); break;
        default: arity(1, 1);
      }
      return PLTerm::node(kd, std::move(args));
    }
    throw ParseError("unknown operator '" + head + "'", hl, hc);
  }

  void skip() {
    while (pos_ < src_.size()) {
      if (src_[pos_] == ';') {
        while (pos_ < src_.size() && src_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(src_[pos_]))) {
        advance();
      } else {
        break;
      }
    }
  }

  std::size_t pos() const noexcept { return pos_; }
  std::pair<std::size_t, std::size_t> here() const { return {line_, col_}; }
  [[noreturn]] void fail(const std::string& why) const { throw ParseError(why, line_, col_); }
  void advance() {
    if (src_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

 private:
  static bool is_number(const std::string& w) {
    if (w.empty()) return false;
    for (char ch : w)
      if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
  }

  std::string word() {
    std::string w;
    while (pos_ < src_.size() && !std::isspace(static_cast<unsigned char>(src_[pos_])) &&
           src_[pos_] != '(' && src_[pos_] != ')' && src_[pos_] != ';') {
      w += src_[pos_];
      advance();
    }
    return w;
  }

  std::string_view src_;
  std::size_t pos_ = 0, line_, col_;
};

}  // namespace detail

inline PLTerm parse_pl_term(std::string_view src, std::size_t line = 1, std::size_t col = 1) {
  return detail::TermParser(src, line, col).parse_all();
}

inline PLFun parse_pl(std::string_view src) { return evaluate(parse_pl_term(src)); }

/// `<k0,k1,...> TERM`: lex coefficients by chain position, then a PL term.
inline GLambdaElem parse_glambda(std::string_view src, std::size_t line = 1) {
  detail::TermParser p(src, line);
  p.skip();
  if (p.peek() != '<') p.fail("expected '<' starting the lex vector");
  p.advance();
  LexVec lex;
  for (;;) {
    p.skip();
    std::string num;
    const auto [l, c] = p.here();
    if (p.peek() == '-') {
      num += '-';
      p.advance();
    }
    while (std::isdigit(static_cast<unsigned char>(p.peek()))) {
      num += p.peek();
      p.advance();
    }
    if (num.empty() || num == "-") throw ParseError("expected an integer coefficient", l, c);
    try {
      lex.c.push_back(std::stoll(num));
    } catch (const std::out_of_range&) {
      throw ParseError("coefficient out of range", l, c);
    }
    p.skip();
    if (p.peek() == ',') {
      p.advance();
      continue;
    }
    if (p.peek() == '>') {
      p.advance();
      break;
    }
    p.fail("expected ',' or '>' in the lex vector");
  }
  const auto [l, c] = p.here();
  const std::size_t start = p.pos();
  const std::string_view rest = src.substr(start);
  return {lex, evaluate(parse_pl_term(rest, l, c))};
}

}  // namespace latspec
