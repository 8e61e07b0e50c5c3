#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latspec/dlat.hpp"
#include "latspec/errors.hpp"

namespace latspec {

/// (x, y) with a∨b = a∨y = x∨b and x∧y = 0.
struct Splitting {
  std::size_t x, y;
  friend bool operator==(const Splitting&, const Splitting&) = default;
};

inline bool is_splitting(const DLat& d, std::size_t a, std::size_t b, std::size_t x,
                         std::size_t y) {
  const std::size_t ab = d.join(a, b);
  return d.join(a, y) == ab && d.join(x, b) == ab && d.meet(x, y) == d.bottom();
}

/// Least splitting of (a, b) in (x, then y) index order. Splittings satisfy
/// x ≤ a and y ≤ b, so only those candidates are scanned.
inline std::optional<Splitting> find_splitting(const DLat& d, std::size_t a, std::size_t b) {
  const std::size_t ab = d.join(a, b);
  std::vector<std::size_t> ys;
  for (std::size_t y = 0; y < d.size(); ++y)
    if (d.leq(y, b) && d.join(a, y) == ab) ys.push_back(y);
  for (std::size_t x = 0; x < d.size(); ++x) {
    if (!d.leq(x, a) || d.join(x, b) != ab) continue;
    for (auto y : ys)
      if (d.meet(x, y) == d.bottom()) return Splitting{x, y};
  }
  return std::nullopt;
}

/// nullopt when every pair splits, else the least pair (a, b) that does not.
inline std::optional<std::pair<std::size_t, std::size_t>> normality_violation(const DLat& d) {
  for (std::size_t a = 0; a < d.size(); ++a)
    for (std::size_t b = 0; b < d.size(); ++b)
      if (!find_splitting(d, a, b)) return std::pair{a, b};
  return std::nullopt;
}

inline bool is_completely_normal(const DLat& d) { return !normality_violation(d); }

/// Bounded distributive lattice with a total difference table satisfying
/// (x∧y)∨(x∖y) = x and (x∖y)∧(y∖x) = 0.
class V0Lat {
 public:
  V0Lat(DLat base, std::vector<std::size_t> diff)
      : base_(std::move(base)), diff_(std::move(diff)) {
    if (diff_.size() != base_.size() * base_.size())
      throw LatticeError("difference table has the wrong size");
  }

  const DLat& base() const noexcept { return base_; }
  std::size_t diff(std::size_t x, std::size_t y) const { return diff_[x * base_.size() + y]; }
  const std::vector<std::size_t>& table() const noexcept { return diff_; }

  /// First pair violating either identity, with the identity number (1 or 2).
  std::optional<std::pair<int, std::pair<std::size_t, std::size_t>>> identity_violation() const {
    const DLat& d = base_;
    for (std::size_t x = 0; x < d.size(); ++x)
      for (std::size_t y = 0; y < d.size(); ++y) {
        if (d.join(d.meet(x, y), diff(x, y)) != x) return std::pair{1, std::pair{x, y}};
        if (d.meet(diff(x, y), diff(y, x)) != d.bottom()) return std::pair{2, std::pair{x, y}};
      }
    return std::nullopt;
  }

  /// Triples with x∖z ≰ (x∖y)∨(y∖z). Not implied by the V₀ identities;
  /// reported for inspection.
  std::vector<std::vector<std::size_t>> triangle_failures(std::size_t limit = 16) const {
    std::vector<std::vector<std::size_t>> out;
    const DLat& d = base_;
    for (std::size_t x = 0; x < d.size(); ++x)
      for (std::size_t y = 0; y < d.size(); ++y)
        for (std::size_t z = 0; z < d.size(); ++z)
          if (!d.leq(diff(x, z), d.join(diff(x, y), diff(y, z)))) {
            out.push_back({x, y, z});
            if (out.size() >= limit) return out;
          }
    return out;
  }

 private:
  DLat base_;
  std::vector<std::size_t> diff_;
};

using DiffPins = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

/// Expand d to a V₀ structure. Pinned entries are kept; each remaining
/// unordered pair {x, y} takes the least splitting of (x, y), or, when only
/// x∖y is pinned, the least y∖x compatible with it.
///
/// Throws LatticeError when d is not completely normal, when a pin violates
/// an identity, or when a half-pinned pair cannot be completed.
inline V0Lat expand_v0(const DLat& d, const DiffPins& pins = {}) {
  if (auto w = normality_violation(d))
    throw LatticeError("lattice is not completely normal", {w->first, w->second});
  const std::size_t n = d.size();
  for (const auto& [k, v] : pins) {
    auto [x, y] = k;
    if (x >= n || y >= n || v >= n) throw LatticeError("pinned entry out of range", {x, y});
    if (d.join(d.meet(x, y), v) != x)
      throw LatticeError("pinned entry violates (x∧y)∨(x∖y) = x", {x, y});
    auto other = pins.find({y, x});
    if (other != pins.end() && d.meet(v, other->second) != d.bottom())
      throw LatticeError("pinned entries violate (x∖y)∧(y∖x) = 0", {x, y});
  }
  std::vector<std::size_t> diff(n * n);
  auto pinned = [&](std::size_t x, std::size_t y) -> std::optional<std::size_t> {
    auto it = pins.find({x, y});
    if (it == pins.end()) return std::nullopt;
    return it->second;
  };
  // Least v with (x∧y)∨v = y and v∧u = 0.
  auto complete = [&](std::size_t x, std::size_t y, std::size_t u) -> std::size_t {
    for (std::size_t v = 0; v < n; ++v)
      if (d.join(d.meet(x, y), v) == y && d.meet(v, u) == d.bottom()) return v;
    throw LatticeError("pinned entry cannot be completed to a splitting", {x, y});
  };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y) {
      auto pxy = pinned(x, y);
      auto pyx = pinned(y, x);
      std::size_t u, v;
      if (pxy && pyx) {
        u = *pxy;
        v = *pyx;
      } else if (pxy) {
        u = *pxy;
        v = complete(x, y, u);
      } else if (pyx) {
        v = *pyx;
        u = complete(y, x, v);
      } else {
        auto s = find_splitting(d, x, y);
        u = s->x;
        v = s->y;
      }
      if (x == y && u != v) throw LatticeError("inconsistent diagonal pin", {x});
      diff[x * n + y] = u;
      diff[y * n + x] = v;
    }
  V0Lat out(d, std::move(diff));
  if (auto w = out.identity_violation())
    throw LatticeError("V0 identity " + std::to_string(w->first) + " fails after expansion",
                       {w->second.first, w->second.second});
  return out;
}

/// Matrix c[i][j] with a_i = (a_i∧a_j)∨c[i][j], c[i][j]∧c[j][i] = 0 and
/// c[i][k] ≤ c[i][j]∨c[j][k] for all indices.
struct RefinementWitness {
  std::vector<std::size_t> family;
  std::vector<std::vector<std::size_t>> c;
};

inline bool check_refinement(const DLat& d, const RefinementWitness& w) {
  const std::size_t k = w.family.size();
  const auto& a = w.family;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (d.join(d.meet(a[i], a[j]), w.c[i][j]) != a[i]) return false;
      if (d.meet(w.c[i][j], w.c[j][i]) != d.bottom()) return false;
      for (std::size_t l = 0; l < k; ++l)
        if (!d.leq(w.c[i][l], d.join(w.c[i][j], w.c[j][l]))) return false;
    }
  return true;
}

/// Exhaustive search for a refinement matrix. The diagonal is forced to 0
/// by the j = i instance of the conditions. Off-diagonal pairs
/// (c[i][j], c[j][i]) are drawn from candidates already satisfying the two
/// binary conditions; triangles are checked once all three entries of a
/// triple are fixed. The first witness in pair-lexicographic order is
/// returned.
inline std::optional<RefinementWitness> refinement_witness(const DLat& d,
                                                           const std::vector<std::size_t>& family) {
  const std::size_t k = family.size();
  const auto& a = family;
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j) slots.emplace_back(i, j);
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> cands(slots.size());
  for (std::size_t s = 0; s < slots.size(); ++s) {
    auto [i, j] = slots[s];
    const std::size_t m = d.meet(a[i], a[j]);
    for (std::size_t u = 0; u < d.size(); ++u) {
      if (d.join(m, u) != a[i]) continue;
      for (std::size_t v = 0; v < d.size(); ++v)
        if (d.join(m, v) == a[j] && d.meet(u, v) == d.bottom()) cands[s].emplace_back(u, v);
    }
    if (cands[s].empty()) return std::nullopt;
  }
  RefinementWitness w{family, std::vector<std::vector<std::size_t>>(
                                  k, std::vector<std::size_t>(k, d.bottom()))};
  std::vector<std::vector<bool>> set(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) set[i][i] = true;
  auto triangles_ok = [&]() {
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        for (std::size_t l = 0; l < k; ++l)
          if (set[i][l] && set[i][j] && set[j][l] &&
              !d.leq(w.c[i][l], d.join(w.c[i][j], w.c[j][l])))
            return false;
    return true;
  };
  auto rec = [&](auto&& self, std::size_t s) -> bool {
    if (s == slots.size()) return true;
    auto [i, j] = slots[s];
    for (auto [u, v] : cands[s]) {
      w.c[i][j] = u;
      w.c[j][i] = v;
      set[i][j] = set[j][i] = true;
      if (triangles_ok() && self(self, s + 1)) return true;
    }
    set[i][j] = set[j][i] = false;
    w.c[i][j] = w.c[j][i] = d.bottom();
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return w;
}

}  // namespace latspec
