#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latspec/dlat.hpp"
#include "latspec/errors.hpp"
#include "latspec/spectrum.hpp"

namespace latspec {

/// 0-lattice homomorphism between finite DLats, stored as an element table.
/// Preservation of 0, ∨ and ∧ is verified at construction.
class LatHom {
 public:
  LatHom() = default;

  /// Throws HomError with a witness pair when the table is not a
  /// 0-lattice homomorphism.
  LatHom(DLat dom, DLat cod, std::vector<std::size_t> table)
      : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (table_.size() != dom_.size()) throw HomError("map table size does not match domain");
    for (std::size_t x = 0; x < table_.size(); ++x)
      if (table_[x] >= cod_.size()) throw HomError("map value out of range", {x});
    if (auto w = violation()) throw HomError(w->first, w->second);
  }

  static LatHom identity(const DLat& d) {
    std::vector<std::size_t> t(d.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
    return LatHom(d, d, std::move(t));
  }

  /// this ∘ first.
  LatHom after(const LatHom& first) const {
    if (!(first.cod_ == dom_)) throw HomError("composition of non-matching maps");
    std::vector<std::size_t> t(first.dom_.size());
    for (std::size_t x = 0; x < t.size(); ++x) t[x] = table_[first.table_[x]];
    return LatHom(first.dom_, cod_, std::move(t));
  }

  /// Reason and witness of the first failure of 0/∨/∧ preservation.
  ///
  /// Checking x∨j for j join-irreducible (and x∧m for m meet-irreducible)
  /// is complete: every element is a join of join-irreducibles, so the
  /// general case follows by induction.
  static std::optional<std::pair<std::string, std::vector<std::size_t>>> violation(
      const DLat& dom, const DLat& cod, const std::vector<std::size_t>& t) {
    using W = std::pair<std::string, std::vector<std::size_t>>;
    if (t[dom.bottom()] != cod.bottom()) return W{"map does not preserve 0", {dom.bottom()}};
    const auto ji = dom.join_irreducibles();
    const auto mi = dom.meet_irreducibles();
    for (std::size_t x = 0; x < dom.size(); ++x) {
      for (auto j : ji)
        if (t[dom.join(x, j)] != cod.join(t[x], t[j])) return W{"map does not preserve join", {x, j}};
      for (auto m : mi)
        if (t[dom.meet(x, m)] != cod.meet(t[x], t[m])) return W{"map does not preserve meet", {x, m}};
    }
    return std::nullopt;
  }

  const DLat& dom() const noexcept { return dom_; }
  const DLat& cod() const noexcept { return cod_; }
  const std::vector<std::size_t>& table() const noexcept { return table_; }
  std::size_t operator()(std::size_t x) const { return table_[x]; }

  bool preserves_top() const { return table_[dom_.top()] == cod_.top(); }

  bool is_surjective() const {
    std::vector<bool> hit(cod_.size());
    for (auto y : table_) hit[y] = true;
    for (bool h : hit)
      if (!h) return false;
    return true;
  }

  bool is_injective() const {
    std::vector<bool> hit(cod_.size());
    for (auto y : table_) {
      if (hit[y]) return false;
      hit[y] = true;
    }
    return true;
  }

  /// f⁻¹[S] for a set S of codomain elements.
  ElemSet preimage(const ElemSet& s) const {
    ElemSet out(dom_.size());
    for (std::size_t x = 0; x < dom_.size(); ++x)
      if (s.test(table_[x])) out.set(x);
    return out;
  }

  ElemSet image() const {
    ElemSet out(cod_.size());
    for (auto y : table_) out.set(y);
    return out;
  }

 private:
  std::optional<std::pair<std::string, std::vector<std::size_t>>> violation() const {
    return violation(dom_, cod_, table_);
  }

  DLat dom_, cod_;
  std::vector<std::size_t> table_;
};

/// D(P) → D(Q), S ↦ g⁻¹[S], for a monotone g: Q → P given by point indices.
/// Throws HomError when g is not monotone.
inline LatHom dual_hom(const Poset& p, const Poset& q, const std::vector<std::size_t>& g) {
  if (g.size() != q.size()) throw HomError("base map size does not match its domain");
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (g[i] >= p.size()) throw HomError("base map value out of range", {i});
    for (std::size_t j = 0; j < q.size(); ++j)
      if (q.leq(i, j) && !p.leq(g[i], g[j])) throw HomError("base map is not monotone", {i, j});
  }
  DLat dp = DLat::downsets(p), dq = DLat::downsets(q);
  std::vector<std::size_t> t(dp.size());
  for (std::size_t x = 0; x < dp.size(); ++x) {
    Mask pre = 0;
    for (std::size_t i = 0; i < q.size(); ++i)
      if (has_bit(dp.element(x), g[i])) pre |= bit(i);
    t[x] = *dq.index_of(pre);
  }
  return LatHom(std::move(dp), std::move(dq), std::move(t));
}

/// Induced map Spec(E) → Spec(D), Q ↦ f⁻¹[Q], as point indices.
struct SpecMap {
  std::vector<std::size_t> table;
  bool injective = false;
  bool order_embedding = false;
};

/// Dual of f on spectra. Throws HomError when some f⁻¹[Q] is all of the
/// domain (f not cofinal). When f is surjective the result is additionally
/// checked to be an order-embedding.
inline SpecMap spec_map(const LatHom& f) {
  const Spectrum sd = prime_spectrum(f.dom());
  const Spectrum se = prime_spectrum(f.cod());
  SpecMap out;
  for (std::size_t q = 0; q < se.points.size(); ++q) {
    const ElemSet pre = f.preimage(se.points[q]);
    if (pre.all()) throw HomError("map is not cofinal: a prime preimage is the whole domain", {q});
    if (!is_prime_ideal(f.dom(), pre)) throw HomError("preimage of a prime ideal is not prime", {q});
    std::size_t found = sd.points.size();
    for (std::size_t p = 0; p < sd.points.size(); ++p)
      if (sd.points[p] == pre) found = p;
    if (found == sd.points.size()) throw HomError("preimage not found in domain spectrum", {q});
    out.table.push_back(found);
  }
  const std::size_t k = se.points.size();
  out.injective = true;
  out.order_embedding = true;
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      if (a != b && out.table[a] == out.table[b]) out.injective = false;
      if (se.order[a][b] != sd.order[out.table[a]][out.table[b]]) out.order_embedding = false;
    }
  if (f.is_surjective() && !(out.injective && out.order_embedding))
    throw HomError("surjective map does not induce a spectral embedding");
  return out;
}

}  // namespace latspec
