#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latspec/errors.hpp"

namespace latspec {

/// Subset of the points of a base poset, bit i = point i.
using Mask = std::uint64_t;

inline constexpr std::size_t kMaxBasePoints = 64;

inline constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

inline bool has_bit(Mask m, std::size_t i) { return (m >> i) & 1U; }

/// Finite partial order on {0, ..., n-1}, stored as one principal-downset
/// mask per point.
class Poset {
 public:
  Poset() = default;

  /// Antichain on n points.
  explicit Poset(std::size_t n, std::vector<std::string> names = {})
      : down_(n), up_(n), names_(std::move(names)) {
    check_size(n);
    for (std::size_t i = 0; i < n; ++i) down_[i] = up_[i] = bit(i);
    fill_names();
  }

  /// Build from an explicit relation matrix; leq[i][j] means i <= j.
  /// Rejects relations that are not reflexive, antisymmetric and transitive.
  static Poset from_relation(const std::vector<std::vector<bool>>& leq,
                             std::vector<std::string> names = {}) {
    const std::size_t n = leq.size();
    Poset p(n, std::move(names));
    for (std::size_t i = 0; i < n; ++i) {
      if (leq[i].size() != n) throw PosetError("relation matrix is not square");
      if (!leq[i][i]) throw PosetError("relation is not reflexive", {i});
    }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j && leq[i][j] && leq[j][i])
          throw PosetError("relation is not antisymmetric", {i, j});
        if (leq[i][j]) {
          p.down_[j] |= bit(i);
          p.up_[i] |= bit(j);
        }
      }
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (leq[i][j])
          for (std::size_t k = 0; k < n; ++k)
            if (leq[j][k] && !leq[i][k])
              throw PosetError("relation is not transitive", {i, j, k});
    return p;
  }

  /// Build from strict order pairs (lo, hi) by reflexive-transitive closure.
  /// A cycle is rejected with its two endpoints as witness, never quotiented.
  static Poset from_covers(std::size_t n,
                           const std::vector<std::pair<std::size_t, std::size_t>>& less,
                           std::vector<std::string> names = {}) {
    Poset p(n, std::move(names));
    for (auto [lo, hi] : less) {
      if (lo >= n || hi >= n) throw PosetError("order pair out of range", {lo, hi});
      if (lo == hi) throw PosetError("strict order pair relates a point to itself", {lo});
      p.down_[hi] |= bit(lo);
    }
    // Warshall closure on downset masks.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (has_bit(p.down_[j], k)) p.down_[j] |= p.down_[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (has_bit(p.down_[j], i) && has_bit(p.down_[i], j))
          throw PosetError("order relation contains a cycle", {i, j});
    p.rebuild_up();
    return p;
  }

  static Poset chain(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> less;
    for (std::size_t i = 0; i + 1 < n; ++i) less.emplace_back(i, i + 1);
    return from_covers(n, less);
  }

  /// Disjoint union; points of `other` are renumbered after ours.
  Poset disjoint_union(const Poset& other) const {
    const std::size_t n = size(), m = other.size();
    check_size(n + m);
    Poset out;
    out.down_ = down_;
    out.names_ = names_;
    for (std::size_t j = 0; j < m; ++j) {
      out.down_.push_back(other.down_[j] << n);
      out.names_.push_back(other.names_[j]);
    }
    out.rebuild_up();
    return out;
  }

  std::size_t size() const noexcept { return down_.size(); }
  bool leq(std::size_t i, std::size_t j) const { return has_bit(down_[j], i); }
  bool less(std::size_t i, std::size_t j) const { return i != j && leq(i, j); }
  Mask down(std::size_t i) const { return down_[i]; }
  Mask up(std::size_t i) const { return up_[i]; }
  Mask all() const { return size() == 64 ? ~Mask{0} : bit(size()) - 1; }

  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_[i]; }

  std::optional<std::size_t> find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    return std::nullopt;
  }

  /// Hasse diagram edges (i covered by j).
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t j = 0; j < size(); ++j) {
      const Mask below = down_[j] & ~bit(j);
      for (std::size_t i = 0; i < size(); ++i) {
        if (!has_bit(below, i)) continue;
        // i is covered by j iff nothing strictly between.
        if ((below & up_[i] & ~bit(i)) == 0) out.emplace_back(i, j);
      }
    }
    return out;
  }

  bool is_downset(Mask s) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (has_bit(s, i) && (down_[i] & ~s) != 0) return false;
    return true;
  }

  /// Points in an order compatible with <= (minimal points first).
  std::vector<std::size_t> linear_extension() const {
    std::vector<std::size_t> order;
    Mask placed = 0;
    while (order.size() < size()) {
      for (std::size_t i = 0; i < size(); ++i)
        if (!has_bit(placed, i) && (down_[i] & ~bit(i) & ~placed) == 0) {
          order.push_back(i);
          placed |= bit(i);
        }
    }
    return order;
  }

  /// Order relation equality (names ignored).
  bool same_order(const Poset& other) const { return down_ == other.down_; }

 private:
  static void check_size(std::size_t n) {
    if (n > kMaxBasePoints)
      throw PosetError("base poset exceeds " + std::to_string(kMaxBasePoints) + " points");
  }

  void fill_names() {
    if (names_.empty())
      for (std::size_t i = 0; i < down_.size(); ++i) names_.push_back("p" + std::to_string(i));
    if (names_.size() != down_.size()) throw PosetError("name count does not match point count");
  }

  void rebuild_up() {
    up_.assign(down_.size(), 0);
    for (std::size_t j = 0; j < down_.size(); ++j)
      for (std::size_t i = 0; i < down_.size(); ++i)
        if (has_bit(down_[j], i)) up_[i] |= bit(j);
  }

  std::vector<Mask> down_;
  std::vector<Mask> up_;
  std::vector<std::string> names_;
};

}  // namespace latspec
