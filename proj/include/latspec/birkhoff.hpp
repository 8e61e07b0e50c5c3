#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latspec/dlat.hpp"
#include "latspec/errors.hpp"
#include "latspec/poset.hpp"

namespace latspec {

/// A finite lattice given extensionally by element names and operation
/// tables, before canonicalisation.
class RawLattice {
 public:
  /// Validates the lattice axioms (idempotence, commutativity,
  /// associativity, absorption) on the tables.
  static RawLattice from_tables(std::vector<std::string> names,
                                std::vector<std::vector<std::size_t>> join,
                                std::vector<std::vector<std::size_t>> meet) {
    RawLattice r;
    r.names_ = std::move(names);
    r.join_ = std::move(join);
    r.meet_ = std::move(meet);
    r.validate();
    return r;
  }

  /// Build from an order relation (leq[i][j]: i <= j); join and meet are
  /// computed as least upper / greatest lower bounds.
  static RawLattice from_order(const std::vector<std::vector<bool>>& leq,
                               std::vector<std::string> names = {}) {
    const std::size_t n = leq.size();
    if (n == 0) throw LatticeError("a lattice needs at least one element");
    // Validates partial-order axioms.
    (void)Poset::from_relation(leq);
    if (names.empty())
      for (std::size_t i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
    std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n)),
        meet(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto lub = bound(leq, i, j, true);
        if (!lub) throw LatticeError("elements have no least upper bound", {i, j});
        auto glb = bound(leq, i, j, false);
        if (!glb) throw LatticeError("elements have no greatest lower bound", {i, j});
        join[i][j] = *lub;
        meet[i][j] = *glb;
      }
    return from_tables(std::move(names), std::move(join), std::move(meet));
  }

  /// Tables of an already canonical lattice.
  static RawLattice from_dlat(const DLat& d) {
    const std::size_t n = d.size();
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> join(n, std::vector<std::size_t>(n)),
        meet(n, std::vector<std::size_t>(n));
    for (std::size_t i = 0; i < n; ++i) {
      names.push_back(d.label(i));
      for (std::size_t j = 0; j < n; ++j) {
        join[i][j] = d.join(i, j);
        meet[i][j] = d.meet(i, j);
      }
    }
    return from_tables(std::move(names), std::move(join), std::move(meet));
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::size_t join(std::size_t i, std::size_t j) const { return join_[i][j]; }
  std::size_t meet(std::size_t i, std::size_t j) const { return meet_[i][j]; }
  bool leq(std::size_t i, std::size_t j) const { return join_[i][j] == j; }

  std::size_t bottom() const {
    for (std::size_t i = 0; i < size(); ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < size() && ok; ++j) ok = leq(i, j);
      if (ok) return i;
    }
    throw LatticeError("lattice has no bottom");
  }

  /// First triple (x, y, z) with x∧(y∨z) ≠ (x∧y)∨(x∧z), if any.
  std::optional<std::vector<std::size_t>> distributivity_witness() const {
    for (std::size_t x = 0; x < size(); ++x)
      for (std::size_t y = 0; y < size(); ++y)
        for (std::size_t z = 0; z < size(); ++z)
          if (meet(x, join(y, z)) != join(meet(x, y), meet(x, z)))
            return std::vector<std::size_t>{x, y, z};
    return std::nullopt;
  }

 private:
  static std::optional<std::size_t> bound(const std::vector<std::vector<bool>>& leq,
                                          std::size_t i, std::size_t j, bool upper) {
    const std::size_t n = leq.size();
    std::optional<std::size_t> best;
    for (std::size_t k = 0; k < n; ++k) {
      const bool is_bound = upper ? (leq[i][k] && leq[j][k]) : (leq[k][i] && leq[k][j]);
      if (!is_bound) continue;
      if (!best || (upper ? leq[k][*best] : leq[*best][k])) best = k;
    }
    if (!best) return std::nullopt;
    for (std::size_t k = 0; k < n; ++k) {
      const bool is_bound = upper ? (leq[i][k] && leq[j][k]) : (leq[k][i] && leq[k][j]);
      if (is_bound && !(upper ? leq[*best][k] : leq[k][*best])) return std::nullopt;
    }
    return best;
  }

  void validate() const {
    const std::size_t n = size();
    if (n == 0) throw LatticeError("a lattice needs at least one element");
    if (join_.size() != n || meet_.size() != n) throw LatticeError("table size mismatch");
    for (std::size_t i = 0; i < n; ++i) {
      if (join_[i].size() != n || meet_[i].size() != n) throw LatticeError("table size mismatch");
      for (std::size_t j = 0; j < n; ++j)
        if (join_[i][j] >= n || meet_[i][j] >= n)
          throw LatticeError("table entry out of range", {i, j});
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (join_[i][i] != i || meet_[i][i] != i)
        throw LatticeError("operation is not idempotent", {i});
      for (std::size_t j = 0; j < n; ++j) {
        if (join_[i][j] != join_[j][i] || meet_[i][j] != meet_[j][i])
          throw LatticeError("operation is not commutative", {i, j});
        if (join_[i][meet_[i][j]] != i || meet_[i][join_[i][j]] != i)
          throw LatticeError("absorption fails", {i, j});
        for (std::size_t k = 0; k < n; ++k)
          if (join_[join_[i][j]][k] != join_[i][join_[j][k]] ||
              meet_[meet_[i][j]][k] != meet_[i][meet_[j][k]])
            throw LatticeError("operation is not associative", {i, j, k});
      }
    }
  }

  std::vector<std::string> names_;
  std::vector<std::vector<std::size_t>> join_, meet_;
};

/// Join-irreducible poset of a finite distributive lattice together with
/// the isomorphism onto its downset lattice.
struct BirkhoffResult {
  Poset poset;                          // induced order on join-irreducibles
  std::vector<std::size_t> irreducibles;  // raw index of each poset point
  std::vector<Mask> encoding;           // raw element -> downset mask
};

/// Join-irreducibles of a raw lattice with their induced order. Throws a
/// LatticeError (witness triple) when the lattice is not distributive.
inline BirkhoffResult birkhoff_poset(const RawLattice& raw) {
  if (auto w = raw.distributivity_witness())
    throw LatticeError("lattice is not distributive", *w);
  const std::size_t n = raw.size();
  const std::size_t zero = raw.bottom();
  BirkhoffResult out;
  // j is join-irreducible iff it is nonzero and the join of everything
  // strictly below it is strictly below it.
  for (std::size_t j = 0; j < n; ++j) {
    if (j == zero) continue;
    std::size_t below = zero;
    for (std::size_t k = 0; k < n; ++k)
      if (k != j && raw.leq(k, j)) below = raw.join(below, k);
    if (below != j) out.irreducibles.push_back(j);
  }
  const std::size_t m = out.irreducibles.size();
  if (m > kMaxBasePoints)
    throw LatticeError("lattice has more than " + std::to_string(kMaxBasePoints) +
                       " join-irreducibles");
  std::vector<std::vector<bool>> rel(m, std::vector<bool>(m));
  std::vector<std::string> names;
  for (std::size_t a = 0; a < m; ++a) {
    names.push_back(raw.name(out.irreducibles[a]));
    for (std::size_t b = 0; b < m; ++b)
      rel[a][b] = raw.leq(out.irreducibles[a], out.irreducibles[b]);
  }
  out.poset = Poset::from_relation(rel, std::move(names));
  out.encoding.resize(n);
  for (std::size_t x = 0; x < n; ++x) {
    Mask s = 0;
    for (std::size_t a = 0; a < m; ++a)
      if (raw.leq(out.irreducibles[a], x)) s |= bit(a);
    out.encoding[x] = s;
  }
  return out;
}

/// Canonical DLat of a raw distributive lattice. The element-wise
/// isomorphism x -> {j <= x} is constructed and verified (bijective, and
/// carries joins to unions and meets to intersections); element labels are
/// the raw names.
inline DLat to_dlat(const RawLattice& raw, std::size_t size_bound = kDefaultSizeBound) {
  const BirkhoffResult b = birkhoff_poset(raw);
  DLat d(b.poset, size_bound);
  const std::size_t n = raw.size();
  if (d.size() != n)
    throw LatticeError("downset lattice size differs from input size");
  std::vector<std::string> labels(n);
  std::vector<bool> hit(n, false);
  std::vector<std::size_t> idx(n);
  for (std::size_t x = 0; x < n; ++x) {
    auto i = d.index_of(b.encoding[x]);
    if (!i || hit[*i]) throw LatticeError("Birkhoff encoding is not a bijection", {x});
    hit[*i] = true;
    idx[x] = *i;
    labels[*i] = raw.name(x);
  }
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y)
      if (idx[raw.join(x, y)] != d.join(idx[x], idx[y]) ||
          idx[raw.meet(x, y)] != d.meet(idx[x], idx[y]))
        throw LatticeError("Birkhoff encoding does not preserve operations", {x, y});
  d.set_labels(std::move(labels));
  return d;
}

}  // namespace latspec
