#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "latspec/errors.hpp"
#include "latspec/lathom.hpp"
#include "latspec/spectrum.hpp"

namespace latspec {

/// Violating triple (a0, a1, b) of the closedness condition.
struct ClosedWitness {
  std::size_t a0, a1, b;
};

/// f is closed iff f(a0) ≤ f(a1)∨b always admits x with a0 ≤ a1∨x and
/// f(x) ≤ b. Returns the least violating triple in (a0, a1, b) index order,
/// or nullopt when f is closed.
///
/// For fixed b the best candidate is x* = ⋁{x : f(x) ≤ b}, which satisfies
/// f(x*) ≤ b because f preserves finite joins; so the existential reduces to
/// a0 ≤ a1∨x*.
inline std::optional<ClosedWitness> closed_violation(const LatHom& f) {
  const DLat& a = f.dom();
  const DLat& b = f.cod();
  std::vector<std::size_t> best(b.size(), a.bottom());
  for (std::size_t y = 0; y < b.size(); ++y)
    for (std::size_t x = 0; x < a.size(); ++x)
      if (b.leq(f(x), y)) best[y] = a.join(best[y], x);
  for (std::size_t a0 = 0; a0 < a.size(); ++a0)
    for (std::size_t a1 = 0; a1 < a.size(); ++a1)
      for (std::size_t y = 0; y < b.size(); ++y)
        if (b.leq(f(a0), b.join(f(a1), y)) && !a.leq(a0, a.join(a1, best[y])))
          return ClosedWitness{a0, a1, y};
  return std::nullopt;
}

inline bool is_closed(const LatHom& f) { return !closed_violation(f); }

/// Every codomain element lies below some f(a); for bounded lattices this
/// is f(1) = 1.
inline bool is_cofinal(const LatHom& f) {
  for (std::size_t y = 0; y < f.cod().size(); ++y) {
    bool dominated = false;
    for (std::size_t x = 0; x < f.dom().size() && !dominated; ++x)
      dominated = f.cod().leq(y, f(x));
    if (!dominated) return false;
  }
  return true;
}

/// Violating (P, Q0, J) of the convexity condition, as indices into the
/// domain spectrum, codomain spectrum and codomain proper-ideal list.
struct ConvexWitness {
  std::size_t p, q0, j;
  ElemSet P, Q0, J;
};

/// Proper ideals of d in canonical order: ↓a for every a ≠ 1.
inline std::vector<ElemSet> proper_ideals(const DLat& d) {
  std::vector<ElemSet> out;
  for (std::size_t a = 0; a < d.size(); ++a)
    if (a != d.top()) out.push_back(principal_ideal(d, a));
  return out;
}

/// Convexity: for P ∈ Spec(A), Q0 ∈ Spec(B) and every proper ideal J of B,
/// Q0 ⊆ J and f⁻¹[Q0] ⊆ P ⊆ f⁻¹[J] must give Q ∈ Spec(B) with
/// Q0 ⊆ Q ⊆ J and P = f⁻¹[Q]. Requires f cofinal (throws HomError).
inline std::optional<ConvexWitness> convex_violation(const LatHom& f) {
  if (!is_cofinal(f)) throw HomError("convexity test requires a cofinal map");
  const Spectrum sa = prime_spectrum(f.dom());
  const Spectrum sb = prime_spectrum(f.cod());
  const std::vector<ElemSet> ideals = proper_ideals(f.cod());
  std::vector<ElemSet> pre_q, pre_j;
  for (const auto& q : sb.points) pre_q.push_back(f.preimage(q));
  for (const auto& j : ideals) pre_j.push_back(f.preimage(j));
  for (std::size_t p = 0; p < sa.points.size(); ++p)
    for (std::size_t q0 = 0; q0 < sb.points.size(); ++q0)
      for (std::size_t j = 0; j < ideals.size(); ++j) {
        const ElemSet& P = sa.points[p];
        if (!sb.points[q0].is_subset_of(ideals[j])) continue;
        if (!pre_q[q0].is_subset_of(P) || !P.is_subset_of(pre_j[j])) continue;
        bool found = false;
        for (std::size_t q = 0; q < sb.points.size() && !found; ++q)
          found = sb.points[q0].is_subset_of(sb.points[q]) &&
                  sb.points[q].is_subset_of(ideals[j]) && pre_q[q] == P;
        if (!found) return ConvexWitness{p, q0, j, P, sb.points[q0], ideals[j]};
      }
  return std::nullopt;
}

inline bool is_convex(const LatHom& f) { return !convex_violation(f); }

/// All homomorphism flags in one pass. `convex` is empty for non-cofinal
/// maps, where the test does not apply.
struct HomCensus {
  bool valid = true;
  bool preserves_zero = true;
  bool preserves_top = false;
  bool surjective = false;
  bool embedding = false;
  bool cofinal = false;
  bool closed = false;
  std::optional<ClosedWitness> closed_witness;
  std::optional<bool> convex;
  std::optional<ConvexWitness> convex_witness;
};

inline HomCensus hom_census(const LatHom& f) {
  HomCensus c;
  c.preserves_top = f.preserves_top();
  c.surjective = f.is_surjective();
  c.embedding = f.is_injective();
  c.cofinal = is_cofinal(f);
  c.closed_witness = closed_violation(f);
  c.closed = !c.closed_witness;
  if (c.cofinal) {
    c.convex_witness = convex_violation(f);
    c.convex = !c.convex_witness;
  }
  return c;
}

}  // namespace latspec
