#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "latspec/errors.hpp"
#include "latspec/poset.hpp"

namespace latspec {

inline constexpr std::size_t kDefaultSizeBound = std::size_t{1} << 16;

/// Enumerate every downset of `p`, sorted by mask value. Throws when more
/// than `bound` downsets exist.
inline std::vector<Mask> enumerate_downsets(const Poset& p,
                                            std::size_t bound = kDefaultSizeBound) {
  const auto order = p.linear_extension();
  std::vector<Mask> out;
  // Walk the linear extension deciding each point; a point may be included
  // only when everything strictly below it already is.
  auto rec = [&](auto&& self, std::size_t k, Mask cur) -> void {
    if (k == order.size()) {
      if (out.size() >= bound)
        throw LatticeError("downset lattice exceeds size bound " + std::to_string(bound));
      out.push_back(cur);
      return;
    }
    const std::size_t i = order[k];
    self(self, k + 1, cur);
    if ((p.down(i) & ~bit(i) & ~cur) == 0) self(self, k + 1, cur | bit(i));
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

/// Finite bounded distributive lattice, realised as the downsets of a base
/// poset of join-irreducibles. Element i is the i-th downset in mask order;
/// join is union and meet is intersection.
class DLat {
 public:
  DLat() : DLat(Poset(0)) {}

  explicit DLat(Poset base, std::size_t size_bound = kDefaultSizeBound)
      : base_(std::move(base)), elems_(enumerate_downsets(base_, size_bound)) {
    if (elems_.size() <= kTableLimit) build_tables();
  }

  /// Downset lattice of a base poset (Birkhoff inverse).
  static DLat downsets(const Poset& base, std::size_t size_bound = kDefaultSizeBound) {
    return DLat(base, size_bound);
  }

  /// n-element chain 0 < 1 < ... < n-1.
  static DLat chain(std::size_t n) {
    if (n == 0) throw LatticeError("a chain needs at least one element");
    DLat d(Poset::chain(n - 1));
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(std::to_string(i));
    d.set_labels(std::move(labels));
    return d;
  }

  /// Product of chains with the given element counts; element labels are
  /// tuples "(x1,...,xk)".
  static DLat chain_product(const std::vector<std::size_t>& lengths) {
    // Point "k.l" of coordinate k says the coordinate is at least l.
    std::vector<std::pair<std::size_t, std::size_t>> less;
    std::vector<std::string> names;
    for (std::size_t k = 0; k < lengths.size(); ++k) {
      if (lengths[k] == 0) throw LatticeError("a chain needs at least one element");
      for (std::size_t l = 1; l < lengths[k]; ++l) {
        if (l > 1) less.emplace_back(names.size() - 1, names.size());
        names.push_back(std::to_string(k + 1) + "." + std::to_string(l));
      }
    }
    DLat d(Poset::from_covers(names.size(), less, names));
    d.shape_ = lengths;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < d.size(); ++i) {
      std::ostringstream os;
      os << '(';
      const auto t = d.tuple_of(i);
      for (std::size_t k = 0; k < t.size(); ++k) os << (k ? "," : "") << t[k];
      os << ')';
      labels.push_back(os.str());
    }
    d.set_labels(std::move(labels));
    return d;
  }

  const Poset& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return elems_.size(); }
  Mask element(std::size_t i) const { return elems_[i]; }
  const std::vector<Mask>& elements() const noexcept { return elems_; }

  std::size_t bottom() const noexcept { return 0; }
  std::size_t top() const noexcept { return elems_.size() - 1; }

  std::optional<std::size_t> index_of(Mask m) const {
    auto it = std::lower_bound(elems_.begin(), elems_.end(), m);
    if (it == elems_.end() || *it != m) return std::nullopt;
    return static_cast<std::size_t>(it - elems_.begin());
  }

  std::size_t join(std::size_t i, std::size_t j) const {
    if (!join_.empty()) return join_[i * size() + j];
    return *index_of(elems_[i] | elems_[j]);
  }
  std::size_t meet(std::size_t i, std::size_t j) const {
    if (!meet_.empty()) return meet_[i * size() + j];
    return *index_of(elems_[i] & elems_[j]);
  }
  bool leq(std::size_t i, std::size_t j) const { return (elems_[i] & ~elems_[j]) == 0; }

  /// Element i is join-irreducible iff it is a principal downset of the base.
  bool is_join_irreducible(std::size_t i) const {
    const Mask m = elems_[i];
    if (m == 0) return false;
    for (std::size_t p = 0; p < base_.size(); ++p)
      if (base_.down(p) == m) return true;
    return false;
  }

  bool is_meet_irreducible(std::size_t i) const {
    const Mask m = elems_[i];
    if (m == base_.all()) return false;
    for (std::size_t p = 0; p < base_.size(); ++p)
      if ((base_.all() & ~base_.up(p)) == m) return true;
    return false;
  }

  std::vector<std::size_t> join_irreducibles() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < base_.size(); ++p) out.push_back(*index_of(base_.down(p)));
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<std::size_t> meet_irreducibles() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < base_.size(); ++p)
      out.push_back(*index_of(base_.all() & ~base_.up(p)));
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Human-readable label; defaults to set notation over base point names.
  std::string label(std::size_t i) const {
    if (!labels_.empty()) return labels_[i];
    return set_notation(elems_[i]);
  }

  std::string set_notation(Mask m) const {
    std::string s = "{";
    bool first = true;
    for (std::size_t p = 0; p < base_.size(); ++p)
      if (has_bit(m, p)) {
        s += (first ? "" : ",") + base_.name(p);
        first = false;
      }
    return s + "}";
  }

  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != size())
      throw LatticeError("label count does not match element count");
    labels_ = std::move(labels);
  }
  bool has_labels() const noexcept { return !labels_.empty(); }

  std::optional<std::size_t> find_label(const std::string& s) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (label(i) == s) return i;
    return std::nullopt;
  }

  /// Chain lengths when built by chain_product, else empty.
  const std::vector<std::size_t>& shape() const noexcept { return shape_; }

  /// Coordinates of element i in a chain product.
  std::vector<std::size_t> tuple_of(std::size_t i) const {
    std::vector<std::size_t> t;
    std::size_t offset = 0;
    for (auto len : shape_) {
      const std::size_t width = len - 1;
      const Mask block = (elems_[i] >> offset) & (width == 64 ? ~Mask{0} : bit(width) - 1);
      t.push_back(static_cast<std::size_t>(std::popcount(block)));
      offset += width;
    }
    return t;
  }

  std::size_t from_tuple(const std::vector<std::size_t>& t) const {
    if (t.size() != shape_.size()) throw LatticeError("tuple arity does not match product shape");
    Mask m = 0;
    std::size_t offset = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      if (t[k] >= shape_[k]) throw LatticeError("tuple coordinate out of range", {k});
      m |= (t[k] == 0 ? Mask{0} : (bit(t[k]) - 1)) << offset;
      offset += shape_[k] - 1;
    }
    return *index_of(m);
  }

  friend bool operator==(const DLat& a, const DLat& b) {
    return a.base_.same_order(b.base_) && a.elems_ == b.elems_;
  }

 private:
  static constexpr std::size_t kTableLimit = 256;

  void build_tables() {
    const std::size_t n = size();
    join_.resize(n * n);
    meet_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        join_[i * n + j] = static_cast<std::uint32_t>(*index_of(elems_[i] | elems_[j]));
        meet_[i * n + j] = static_cast<std::uint32_t>(*index_of(elems_[i] & elems_[j]));
      }
  }

  Poset base_;
  std::vector<Mask> elems_;
  std::vector<std::uint32_t> join_, meet_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> shape_;
};

}  // namespace latspec
