#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include <boost/dynamic_bitset.hpp>

#include "latspec/dlat.hpp"

namespace latspec {

/// Set of lattice elements (by index) or of spectrum points.
using ElemSet = boost::dynamic_bitset<>;

/// Prime spectrum of a finite DLat.
///
/// Point k is the prime ideal {a : base point k not in a}; this is the
/// join-irreducible shortcut, so points are listed in base-point order and
/// `order` is isomorphic to the base poset. `unit[a]` is {P : a not in P}.
struct Spectrum {
  std::vector<ElemSet> points;
  std::vector<std::vector<bool>> order;  // order[p][q]: points[p] ⊆ points[q]
  std::vector<ElemSet> unit;
};

/// Principal downset ↓a as an element set; every ideal of a finite lattice
/// has this form.
inline ElemSet principal_ideal(const DLat& d, std::size_t a) {
  ElemSet s(d.size());
  for (std::size_t x = 0; x < d.size(); ++x)
    if (d.leq(x, a)) s.set(x);
  return s;
}

inline bool is_ideal(const DLat& d, const ElemSet& s) {
  if (s.none()) return false;
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (!s.test(x)) continue;
    for (std::size_t y = 0; y < d.size(); ++y) {
      if (d.leq(y, x) && !s.test(y)) return false;
      if (s.test(y) && !s.test(d.join(x, y))) return false;
    }
  }
  return true;
}

/// Proper ideal with a∧b ∈ P ⇒ a ∈ P or b ∈ P.
inline bool is_prime_ideal(const DLat& d, const ElemSet& s) {
  if (!is_ideal(d, s) || s.test(d.top())) return false;
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = 0; b < d.size(); ++b)
      if (s.test(d.meet(a, b)) && !s.test(a) && !s.test(b)) return false;
  return true;
}

inline Spectrum prime_spectrum(const DLat& d) {
  const Poset& base = d.base();
  Spectrum sp;
  for (std::size_t p = 0; p < base.size(); ++p) {
    ElemSet s(d.size());
    for (std::size_t a = 0; a < d.size(); ++a)
      if (!has_bit(d.element(a), p)) s.set(a);
    sp.points.push_back(std::move(s));
  }
  const std::size_t k = sp.points.size();
  sp.order.assign(k, std::vector<bool>(k));
  for (std::size_t p = 0; p < k; ++p)
    for (std::size_t q = 0; q < k; ++q) sp.order[p][q] = sp.points[p].is_subset_of(sp.points[q]);
  for (std::size_t a = 0; a < d.size(); ++a) {
    ElemSet u(k);
    for (std::size_t p = 0; p < k; ++p)
      if (!sp.points[p].test(a)) u.set(p);
    sp.unit.push_back(std::move(u));
  }
  return sp;
}

/// Every prime ideal found by exhaustive search over downward-closed,
/// join-closed subsets. Exponential; intended as an oracle for small
/// lattices. Result sorted by bitset order.
inline std::vector<ElemSet> prime_ideals_bruteforce(const DLat& d, std::size_t max_size = 24) {
  if (d.size() > max_size)
    throw LatticeError("lattice too large for brute-force ideal enumeration");
  std::vector<ElemSet> ideals;
  const std::size_t n = d.size();
  ElemSet cur(n);
  // Elements in index order form a linear extension of <=, so downward
  // closure can be checked when an element is added.
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == n) {
      if (is_prime_ideal(d, cur)) ideals.push_back(cur);
      return;
    }
    self(self, i + 1);
    for (std::size_t y = 0; y < i; ++y)
      if (d.leq(y, i) && !cur.test(y)) return;
    cur.set(i);
    self(self, i + 1);
    cur.reset(i);
  };
  rec(rec, 0);
  std::sort(ideals.begin(), ideals.end());
  return ideals;
}

/// One named pass/fail finding with a free-form witness.
struct Finding {
  bool passed = true;
  std::string witness;
};

/// Stone unit a ↦ {P : a ∉ P}: injective, order-reflecting, joins to unions,
/// meets to intersections, 0 to ∅ and 1 to the full spectrum.
inline Finding stone_unit_check(const DLat& d) {
  const Spectrum sp = prime_spectrum(d);
  const std::size_t k = sp.points.size();
  auto fail = [&](const std::string& what, std::size_t a, std::size_t b) {
    return Finding{false, what + " at (" + d.label(a) + ", " + d.label(b) + ")"};
  };
  if (sp.unit[d.bottom()].any()) return fail("unit(0) is not empty", d.bottom(), d.bottom());
  if (sp.unit[d.top()].count() != k) return fail("unit(1) is not everything", d.top(), d.top());
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = 0; b < d.size(); ++b) {
      if (a != b && sp.unit[a] == sp.unit[b]) return fail("unit is not injective", a, b);
      if (sp.unit[a].is_subset_of(sp.unit[b]) != d.leq(a, b))
        return fail("unit does not reflect order", a, b);
      if (sp.unit[d.join(a, b)] != (sp.unit[a] | sp.unit[b]))
        return fail("unit does not send join to union", a, b);
      if (sp.unit[d.meet(a, b)] != (sp.unit[a] & sp.unit[b]))
        return fail("unit does not send meet to intersection", a, b);
    }
  return {};
}

}  // namespace latspec
