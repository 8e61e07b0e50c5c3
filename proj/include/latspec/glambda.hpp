#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "latspec/checked.hpp"
#include "latspec/plfun.hpp"
#include "latspec/report.hpp"

namespace latspec {

/// Integer vector over the chain 0 < 1 < … < k−1 in the lexicographic order
/// led by the highest nonzero position.
struct LexVec {
  std::vector<std::int64_t> c;

  static LexVec zero(std::size_t k) { return {std::vector<std::int64_t>(k, 0)}; }
  /// Basis vector c_i.
  static LexVec basis(std::size_t k, std::size_t i, std::int64_t coeff = 1) {
    LexVec v = zero(k);
    v.c.at(i) = coeff;
    return v;
  }

  std::size_t size() const noexcept { return c.size(); }

  std::optional<std::size_t> lead() const {
    for (std::size_t i = c.size(); i-- > 0;)
      if (c[i] != 0) return i;
    return std::nullopt;
  }

  bool is_zero() const { return !lead(); }
  int sign() const { return is_zero() ? 0 : latspec::sign(c[*lead()]); }

  LexVec operator+(const LexVec& o) const {
    same_size(o);
    LexVec r = *this;
    for (std::size_t i = 0; i < c.size(); ++i) r.c[i] = checked_add(c[i], o.c[i]);
    return r;
  }
  LexVec operator-() const {
    LexVec r = *this;
    for (auto& v : r.c) v = checked_neg(v);
    return r;
  }
  LexVec operator-(const LexVec& o) const { return *this + (-o); }
  LexVec scale(std::int64_t k) const {
    LexVec r = *this;
    for (auto& v : r.c) v = checked_mul(k, v);
    return r;
  }

  friend bool operator==(const LexVec&, const LexVec&) = default;

  std::string to_string() const {
    std::string s = "<";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + ">";
  }

  void same_size(const LexVec& o) const {
    if (o.c.size() != c.size()) throw std::invalid_argument("elements over different chains");
  }
};

enum class PartialOrder { less, equal, greater, incomparable };

inline std::string to_string(PartialOrder o) {
  switch (o) {
    case PartialOrder::less: return "less";
    case PartialOrder::equal: return "equal";
    case PartialOrder::greater: return "greater";
    case PartialOrder::incomparable: return "incomparable";
  }
  return {};
}

/// Element of Z⟨Λ⟩ ×_lex F.
struct GLambdaElem {
  LexVec lex;
  PLFun pl;

  GLambdaElem operator+(const GLambdaElem& o) const { return {lex + o.lex, pl + o.pl}; }
  GLambdaElem operator-() const { return {-lex, -pl}; }
  GLambdaElem operator-(const GLambdaElem& o) const { return {lex - o.lex, pl - o.pl}; }

  bool is_zero() const { return lex.is_zero() && pl.is_zero(); }
  /// x > 0 on the lex part, or lex part zero and pl ≥ 0.
  bool nonnegative() const { return lex.sign() > 0 || (lex.is_zero() && pl.nonnegative()); }
  bool strictly_positive() const { return nonnegative() && !is_zero(); }

  bool leq(const GLambdaElem& o) const { return (o - *this).nonnegative(); }

  PartialOrder compare(const GLambdaElem& o) const {
    const bool le = leq(o), ge = o.leq(*this);
    if (le && ge) return PartialOrder::equal;
    if (le) return PartialOrder::less;
    if (ge) return PartialOrder::greater;
    return PartialOrder::incomparable;
  }

  GLambdaElem join(const GLambdaElem& o) const {
    const int s = (lex - o.lex).sign();
    if (s > 0) return *this;
    if (s < 0) return o;
    return {lex, pl.join(o.pl)};
  }
  GLambdaElem meet(const GLambdaElem& o) const {
    const int s = (lex - o.lex).sign();
    if (s > 0) return o;
    if (s < 0) return *this;
    return {lex, pl.meet(o.pl)};
  }
  GLambdaElem abs() const { return join(-*this); }

  friend bool operator==(const GLambdaElem&, const GLambdaElem&) = default;

  std::string to_string() const { return lex.to_string() + " " + pl.to_string(); }
};

/// a ≪ b in F: only 0 is way below anything.
inline bool way_below(const PLFun& x, const PLFun& y) {
  if (!x.nonnegative() || !y.nonnegative()) throw std::invalid_argument("way_below needs x, y >= 0");
  return x.is_zero();
}

/// a ≪ b in Z⟨Λ⟩ for lex-positive or zero vectors.
inline bool way_below(const LexVec& x, const LexVec& y) {
  if (x.sign() < 0 || y.sign() < 0) throw std::invalid_argument("way_below needs x, y >= 0");
  if (x.is_zero()) return true;
  return !y.is_zero() && *x.lead() < *y.lead();
}

/// k·x ≤ y for every k ≥ 1. With lex(x) = 0 the lex part of y − k·x is
/// lex(y), so either it is positive or x must vanish; otherwise y's lex
/// part must lead at a strictly higher position.
inline bool way_below(const GLambdaElem& x, const GLambdaElem& y) {
  if (!x.nonnegative() || !y.nonnegative()) throw std::invalid_argument("way_below needs x, y >= 0");
  if (x.lex.is_zero()) return y.lex.sign() > 0 || x.pl.is_zero();
  return !y.lex.is_zero() && *x.lex.lead() < *y.lex.lead();
}

/// ⟨x⟩ ⊆ ⟨y⟩ in G_Λ.
inline bool ideal_leq(const GLambdaElem& x, const GLambdaElem& y) {
  const GLambdaElem ax = x.abs(), ay = y.abs();
  if (!ay.lex.is_zero()) return ax.lex.is_zero() || *ax.lex.lead() <= *ay.lex.lead();
  return ax.lex.is_zero() && ideal_leq(ax.pl, ay.pl).holds;
}

/// Pairwise x∧y = 0 and, for two or more elements, zero lex parts.
inline Report orthogonal_set_check(const std::vector<GLambdaElem>& xs) {
  Report r;
  r.title = "orthogonal set";
  r.data["size"] = xs.size();
  std::string bad;
  for (std::size_t i = 0; i < xs.size() && bad.empty(); ++i)
    if (!xs[i].strictly_positive()) bad = std::to_string(i);
  r.check("all strictly positive", bad.empty(), bad.empty() ? "" : "element " + bad);
  std::vector<std::pair<std::size_t, std::size_t>> clashes;
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (!xs[i].meet(xs[j]).is_zero()) clashes.emplace_back(i, j);
  const bool orthogonal = clashes.empty();
  r.data["orthogonal"] = orthogonal;
  r.data["non_orthogonal_pairs"] = clashes;
  if (orthogonal && xs.size() >= 2) {
    std::string lexful;
    for (std::size_t i = 0; i < xs.size() && lexful.empty(); ++i)
      if (!xs[i].lex.is_zero()) lexful = "element " + std::to_string(i) + " has lex part " + xs[i].lex.to_string();
    r.check("orthogonal set lies in F", lexful.empty(), lexful);
  }
  return r;
}

}  // namespace latspec
