#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latspec/dlat.hpp"
#include "latspec/errors.hpp"
#include "latspec/lathom.hpp"
#include "latspec/report.hpp"

namespace latspec {

enum class UniverseKind { finite, countable, uncountable };

/// Index set I. Symbolic universes accept any nonempty name; the kind is a
/// cardinality tag only and never changes a computation.
class IndexUniverse {
 public:
  static IndexUniverse finite(std::vector<std::string> names) {
    std::set<std::string> seen;
    for (const auto& n : names) {
      if (n.empty()) throw LatticeError("index names must be nonempty");
      if (!seen.insert(n).second) throw LatticeError("duplicate index name '" + n + "'");
    }
    IndexUniverse u;
    u.kind_ = UniverseKind::finite;
    u.names_ = std::move(names);
    return u;
  }
  static IndexUniverse countable() { return symbolic(UniverseKind::countable); }
  static IndexUniverse uncountable() { return symbolic(UniverseKind::uncountable); }

  UniverseKind kind() const noexcept { return kind_; }
  bool is_finite() const noexcept { return kind_ == UniverseKind::finite; }
  const std::vector<std::string>& names() const noexcept { return names_; }

  bool contains(const std::string& name) const {
    if (name.empty()) return false;
    if (!is_finite()) return true;
    for (const auto& n : names_)
      if (n == name) return true;
    return false;
  }

  std::string cardinality_tag() const {
    switch (kind_) {
      case UniverseKind::finite: return "finite(" + std::to_string(names_.size()) + ")";
      case UniverseKind::countable: return "aleph0";
      case UniverseKind::uncountable: return "aleph1";
    }
    return {};
  }

 private:
  static IndexUniverse symbolic(UniverseKind k) {
    IndexUniverse u;
    u.kind_ = k;
    return u;
  }

  UniverseKind kind_ = UniverseKind::finite;
  std::vector<std::string> names_;
};

/// (base, y) with y_i = dev[i] where present and φ(base) elsewhere.
struct CondElem {
  std::size_t base = 0;
  std::map<std::string, std::size_t> dev;
  const void* owner = nullptr;

  friend bool operator==(const CondElem&, const CondElem&) = default;
};

/// Handle on Cond(φ, I). Copies share state, so elements made by one copy
/// are accepted by the others.
class Condensate {
 public:
  static Condensate make(LatHom phi, IndexUniverse universe) {
    Condensate c;
    c.state_ = std::make_shared<const State>(State{std::move(phi), std::move(universe)});
    return c;
  }

  const LatHom& phi() const { return state_->phi; }
  const DLat& A() const { return state_->phi.dom(); }
  const DLat& B() const { return state_->phi.cod(); }
  const IndexUniverse& universe() const { return state_->universe; }

  /// Element without normalization, for representative-independence tests.
  CondElem raw(std::size_t base, std::map<std::string, std::size_t> dev) const {
    if (base >= A().size()) throw LatticeError("base value out of range", {base});
    for (const auto& [i, v] : dev) {
      if (!universe().contains(i)) throw LatticeError("index '" + i + "' not in universe");
      if (v >= B().size()) throw LatticeError("deviation value out of range at '" + i + "'", {v});
    }
    return CondElem{base, std::move(dev), state_.get()};
  }

  CondElem elem(std::size_t base, std::map<std::string, std::size_t> dev = {}) const {
    return normalize(raw(base, std::move(dev)));
  }

  CondElem normalize(CondElem e) const {
    own(e);
    const std::size_t fb = phi()(e.base);
    std::erase_if(e.dev, [&](const auto& kv) { return kv.second == fb; });
    return e;
  }

  bool is_normalized(const CondElem& e) const {
    for (const auto& [i, v] : e.dev)
      if (v == phi()(e.base)) return false;
    return true;
  }

  std::size_t value_at(const CondElem& e, const std::string& i) const {
    auto it = e.dev.find(i);
    return it == e.dev.end() ? phi()(e.base) : it->second;
  }

  CondElem bottom() const { return elem(A().bottom()); }
  CondElem top() const { return elem(A().top()); }

  CondElem join(const CondElem& s, const CondElem& t) const {
    return pointwise(s, t, [](const DLat& d, std::size_t x, std::size_t y) { return d.join(x, y); });
  }
  CondElem meet(const CondElem& s, const CondElem& t) const {
    return pointwise(s, t, [](const DLat& d, std::size_t x, std::size_t y) { return d.meet(x, y); });
  }

  bool leq(const CondElem& s, const CondElem& t) const {
    own(s);
    own(t);
    if (!A().leq(s.base, t.base)) return false;
    if (!B().leq(phi()(s.base), phi()(t.base))) return false;
    for (const auto& i : support_union(s, t))
      if (!B().leq(value_at(s, i), value_at(t, i))) return false;
    return true;
  }

  bool eq(const CondElem& s, const CondElem& t) const { return leq(s, t) && leq(t, s); }

  /// C_J: all elements with support inside J, ordered by base and then by
  /// the values at J in the given order.
  std::vector<CondElem> stage(const std::vector<std::string>& J) const {
    for (const auto& j : J)
      if (!universe().contains(j)) throw LatticeError("index '" + j + "' not in universe");
    std::vector<CondElem> out;
    std::vector<std::size_t> vals(J.size(), 0);
    for (std::size_t a = 0; a < A().size(); ++a) {
      std::fill(vals.begin(), vals.end(), 0);
      for (;;) {
        std::map<std::string, std::size_t> dev;
        for (std::size_t k = 0; k < J.size(); ++k) dev[J[k]] = vals[k];
        out.push_back(elem(a, std::move(dev)));
        std::size_t k = J.size();
        while (k > 0 && ++vals[k - 1] == B().size()) vals[--k] = 0;
        if (k == 0) break;
      }
    }
    return out;
  }

  /// Every element; only for finite universes, where it is all of A×B^I.
  std::vector<CondElem> enumerate() const {
    if (!universe().is_finite())
      throw LatticeError("cannot enumerate a symbolic universe; use a finite stage");
    return stage(universe().names());
  }

  std::string label(const CondElem& e) const {
    std::string s = "(" + A().label(e.base) + ", {";
    bool first = true;
    for (const auto& [i, v] : e.dev) {
      if (!first) s += ", ";
      first = false;
      s += i + "->" + B().label(v);
    }
    return s + "})";
  }

 private:
  struct State {
    LatHom phi;
    IndexUniverse universe;
  };

  void own(const CondElem& e) const {
    if (e.owner != state_.get()) throw LatticeError("element belongs to a different condensate");
  }

  static std::set<std::string> support_union(const CondElem& s, const CondElem& t) {
    std::set<std::string> out;
    for (const auto& kv : s.dev) out.insert(kv.first);
    for (const auto& kv : t.dev) out.insert(kv.first);
    return out;
  }

  template <class Op>
  CondElem pointwise(const CondElem& s, const CondElem& t, Op op) const {
    own(s);
    own(t);
    CondElem r{op(A(), s.base, t.base), {}, state_.get()};
    for (const auto& i : support_union(s, t)) r.dev[i] = op(B(), value_at(s, i), value_at(t, i));
    return normalize(std::move(r));
  }

  std::shared_ptr<const State> state_;
};

/// Tuple (base, y_j for j ∈ J) of an element of C_J.
inline std::vector<std::size_t> stage_tuple(const Condensate& c, const CondElem& e,
                                            const std::vector<std::string>& J) {
  std::vector<std::size_t> t{e.base};
  for (const auto& j : J) t.push_back(c.value_at(e, j));
  return t;
}

/// Checks C_J ≅ A×B^J through the tuple map, and C_J ⊆ C_K for the prefix
/// stages J of K.
inline Report finite_stage_iso(const Condensate& c, const std::vector<std::string>& K) {
  Report r;
  r.title = "stage " + std::to_string(K.size());
  const DLat& A = c.A();
  const DLat& B = c.B();
  const std::vector<CondElem> cj = c.stage(K);
  std::size_t expected = A.size();
  for (std::size_t k = 0; k < K.size(); ++k) expected *= B.size();
  r.data["universe"] = c.universe().cardinality_tag();
  r.data["indices"] = K;
  r.data["size"] = cj.size();
  r.data["product_size"] = expected;
  r.check("size equals |A|*|B|^|J|", cj.size() == expected,
          std::to_string(cj.size()) + " vs " + std::to_string(expected));

  std::set<std::vector<std::size_t>> tuples;
  bool normal = true, supported = true;
  for (const auto& e : cj) {
    tuples.insert(stage_tuple(c, e, K));
    normal = normal && c.is_normalized(e);
    for (const auto& kv : e.dev)
      supported = supported && std::find(K.begin(), K.end(), kv.first) != K.end();
  }
  r.check("elements normalized", normal);
  r.check("supports inside J", supported);
  r.check("tuple map injective", tuples.size() == cj.size());

  // Componentwise operations in A×B^J against the condensate operations.
  auto tjoin = [&](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
    std::vector<std::size_t> z{A.join(x[0], y[0])};
    for (std::size_t k = 1; k < x.size(); ++k) z.push_back(B.join(x[k], y[k]));
    return z;
  };
  auto tmeet = [&](const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
    std::vector<std::size_t> z{A.meet(x[0], y[0])};
    for (std::size_t k = 1; k < x.size(); ++k) z.push_back(B.meet(x[k], y[k]));
    return z;
  };
  std::string join_fail, meet_fail, leq_fail;
  std::vector<std::vector<std::size_t>> tup;
  for (const auto& e : cj) tup.push_back(stage_tuple(c, e, K));
  for (std::size_t i = 0; i < cj.size(); ++i)
    for (std::size_t j = 0; j < cj.size(); ++j) {
      if (join_fail.empty() && stage_tuple(c, c.join(cj[i], cj[j]), K) != tjoin(tup[i], tup[j]))
        join_fail = c.label(cj[i]) + " v " + c.label(cj[j]);
      if (meet_fail.empty() && stage_tuple(c, c.meet(cj[i], cj[j]), K) != tmeet(tup[i], tup[j]))
        meet_fail = c.label(cj[i]) + " ^ " + c.label(cj[j]);
      if (leq_fail.empty() && c.leq(cj[i], cj[j]) != (tmeet(tup[i], tup[j]) == tup[i]))
        leq_fail = c.label(cj[i]) + " <= " + c.label(cj[j]);
    }
  r.check("join is componentwise", join_fail.empty(), join_fail);
  r.check("meet is componentwise", meet_fail.empty(), meet_fail);
  r.check("order is componentwise", leq_fail.empty(), leq_fail);

  std::set<std::vector<std::size_t>> big;
  for (const auto& e : cj) big.insert(stage_tuple(c, e, K));
  bool included = true;
  for (std::size_t m = 0; m < K.size(); ++m) {
    const std::vector<std::string> J(K.begin(), K.begin() + static_cast<std::ptrdiff_t>(m));
    for (const auto& e : c.stage(J))
      included = included && std::find(cj.begin(), cj.end(), e) != cj.end();
  }
  r.check("smaller stages included", included);
  return r;
}

/// (x_∞, (x_i)_i) ↦ (x_∞, (φ(x_i))_i), from Cond(id_A, I) to Cond(φ, I).
inline CondElem almost_constant_surjection(const Condensate& source, const Condensate& target,
                                           const CondElem& x) {
  std::map<std::string, std::size_t> dev;
  for (const auto& [i, v] : source.normalize(x).dev) dev[i] = target.phi()(v);
  return target.elem(x.base, std::move(dev));
}

/// Exhaustive check on stage J that the almost-constant map is a surjective
/// 0,1-lattice homomorphism.
inline Report verify_almost_constant_surjection(const Condensate& source, const Condensate& target,
                                                const std::vector<std::string>& J) {
  Report r;
  r.title = "surjection stage " + std::to_string(J.size());
  const auto src = source.stage(J);
  const auto dst = target.stage(J);
  std::vector<CondElem> img;
  for (const auto& x : src) img.push_back(almost_constant_surjection(source, target, x));
  r.data["sources"] = src.size();
  r.data["targets"] = dst.size();
  r.check("preserves 0", almost_constant_surjection(source, target, source.bottom()) == target.bottom());
  r.check("preserves 1", almost_constant_surjection(source, target, source.top()) == target.top());
  std::map<std::vector<std::size_t>, std::size_t> pos;
  for (std::size_t i = 0; i < src.size(); ++i) pos[stage_tuple(source, src[i], J)] = i;
  auto idx = [&](const CondElem& e) { return pos.at(stage_tuple(source, e, J)); };
  std::string fail;
  for (std::size_t i = 0; i < src.size() && fail.empty(); ++i)
    for (std::size_t j = 0; j < src.size() && fail.empty(); ++j) {
      if (img[idx(source.join(src[i], src[j]))] != target.join(img[i], img[j]))
        fail = "join at " + source.label(src[i]) + ", " + source.label(src[j]);
      else if (img[idx(source.meet(src[i], src[j]))] != target.meet(img[i], img[j]))
        fail = "meet at " + source.label(src[i]) + ", " + source.label(src[j]);
    }
  r.check("preserves join and meet", fail.empty(), fail);
  std::string missing;
  for (const auto& y : dst)
    if (missing.empty() && std::find(img.begin(), img.end(), y) == img.end()) missing = target.label(y);
  r.check("surjective onto stage", missing.empty(), missing.empty() ? "" : "no preimage for " + missing);
  return r;
}

}  // namespace latspec
