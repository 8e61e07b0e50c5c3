#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latspec/checked.hpp"

namespace latspec {

/// Primitive direction in the closed quadrant.
struct Ray {
  std::int64_t x = 0, y = 0;

  static Ray primitive(std::int64_t x, std::int64_t y) {
    if (x < 0 || y < 0 || (x == 0 && y == 0))
      throw std::invalid_argument("ray must be a nonzero vector in the closed quadrant");
    const std::int64_t g = std::gcd(x, y);
    return {x / g, y / g};
  }

  friend bool operator==(const Ray&, const Ray&) = default;
  std::string to_string() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

inline std::int64_t cross(const Ray& r, const Ray& s) {
  return checked_sub(checked_mul(r.x, s.y), checked_mul(r.y, s.x));
}

/// Strictly earlier in the angular order from (1,0) to (0,1).
inline bool before(const Ray& r, const Ray& s) { return cross(r, s) > 0; }

/// Linear functional (x, y) ↦ m·x + n·y.
struct Lin {
  std::int64_t m = 0, n = 0;

  std::int64_t at(std::int64_t x, std::int64_t y) const {
    return checked_add(checked_mul(m, x), checked_mul(n, y));
  }
  std::int64_t at(const Ray& r) const { return at(r.x, r.y); }

  friend Lin operator+(Lin a, Lin b) { return {checked_add(a.m, b.m), checked_add(a.n, b.n)}; }
  friend Lin operator-(Lin a, Lin b) { return {checked_sub(a.m, b.m), checked_sub(a.n, b.n)}; }
  friend Lin operator-(Lin a) { return {checked_neg(a.m), checked_neg(a.n)}; }
  friend bool operator==(const Lin&, const Lin&) = default;
  std::string to_string() const { return "[" + std::to_string(m) + "," + std::to_string(n) + "]"; }
};

/// Integer piecewise-linear, positively homogeneous function on the closed
/// quadrant: rays r_0 = (1,0) < … < r_k = (0,1) and one functional per cone
/// [r_i, r_{i+1}]. Always continuous and in canonical form (no two adjacent
/// cones share a functional), so == is equality of functions.
class PLFun {
 public:
  PLFun() : rays_{{1, 0}, {0, 1}}, funcs_{{0, 0}} {}

  static PLFun linear(std::int64_t m, std::int64_t n) {
    PLFun f;
    f.funcs_[0] = {m, n};
    return f;
  }
  static PLFun zero() { return {}; }
  static PLFun gen_a() { return linear(1, 0); }
  static PLFun gen_b() { return linear(0, 1); }

  /// Validates and canonicalizes. Throws std::invalid_argument on unsorted
  /// or non-primitive rays, wrong endpoints, or discontinuity.
  static PLFun from_pieces(std::vector<Ray> rays, std::vector<Lin> funcs) {
    if (auto why = invalid(rays, funcs)) throw std::invalid_argument(*why);
    PLFun f;
    f.rays_ = std::move(rays);
    f.funcs_ = std::move(funcs);
    f.canonicalize();
    return f;
  }

  const std::vector<Ray>& rays() const noexcept { return rays_; }
  const std::vector<Lin>& funcs() const noexcept { return funcs_; }

  /// Reason the piece lists do not describe a continuous PL function.
  static std::optional<std::string> invalid(const std::vector<Ray>& rays, const std::vector<Lin>& funcs) {
    if (rays.size() < 2 || funcs.size() + 1 != rays.size()) return "need k+1 rays for k cones";
    if (!(rays.front() == Ray{1, 0}) || !(rays.back() == Ray{0, 1}))
      return "fan must run from (1,0) to (0,1)";
    for (const auto& r : rays)
      if (r.x < 0 || r.y < 0 || std::gcd(r.x, r.y) != 1) return "ray " + r.to_string() + " is not primitive";
    for (std::size_t i = 0; i + 1 < rays.size(); ++i)
      if (!before(rays[i], rays[i + 1])) return "rays not strictly sorted by angle";
    for (std::size_t i = 1; i + 1 < rays.size(); ++i)
      if (funcs[i - 1].at(rays[i]) != funcs[i].at(rays[i]))
        return "discontinuous at ray " + rays[i].to_string();
    return std::nullopt;
  }

  bool is_canonical() const {
    for (std::size_t i = 0; i + 1 < funcs_.size(); ++i)
      if (funcs_[i] == funcs_[i + 1]) return false;
    return true;
  }

  /// Index of a cone containing the direction (x, y).
  std::size_t cone_of(std::int64_t x, std::int64_t y) const {
    if (x < 0 || y < 0) throw std::domain_error("point outside the closed quadrant");
    if (x == 0 && y == 0) return 0;
    const Ray p{x, y};
    for (std::size_t i = 0; i + 1 < rays_.size(); ++i)
      if (cross(p, rays_[i + 1]) >= 0) return i;
    return funcs_.size() - 1;
  }

  std::int64_t at(std::int64_t x, std::int64_t y) const { return funcs_[cone_of(x, y)].at(x, y); }
  std::int64_t at(const Ray& r) const { return at(r.x, r.y); }

  /// Value at the rational point (x, y).
  Rational eval(const Rational& x, const Rational& y) const {
    if (x.num < 0 || y.num < 0) throw std::domain_error("point outside the closed quadrant");
    const std::int64_t X = checked_mul(x.num, y.den), Y = checked_mul(y.num, x.den);
    return Rational::make(at(X, Y), checked_mul(x.den, y.den));
  }

  friend bool operator==(const PLFun&, const PLFun&) = default;

  PLFun operator+(const PLFun& g) const {
    return pointwise(g, [](Lin a, Lin b) { return a + b; });
  }
  PLFun operator-(const PLFun& g) const {
    return pointwise(g, [](Lin a, Lin b) { return a - b; });
  }
  PLFun operator-() const {
    PLFun f = *this;
    for (auto& l : f.funcs_) l = -l;
    return f;
  }
  PLFun scale(std::int64_t k) const {
    PLFun f = *this;
    for (auto& l : f.funcs_) l = {checked_mul(k, l.m), checked_mul(k, l.n)};
    f.canonicalize();
    return f;
  }

  PLFun join(const PLFun& g) const { return extremum(g, true); }
  PLFun meet(const PLFun& g) const { return extremum(g, false); }
  PLFun abs() const { return join(-*this); }
  PLFun pos() const { return join(zero()); }
  PLFun negpart() const { return (-*this).join(zero()); }
  PLFun diff(const PLFun& g) const { return (*this - g).pos(); }

  bool is_zero() const { return funcs_.size() == 1 && funcs_[0] == Lin{}; }

  /// f ≥ 0 everywhere; values at the rays decide it since f is linear on
  /// each cone.
  bool nonnegative() const {
    for (const auto& r : rays_)
      if (at(r) < 0) return false;
    return true;
  }

  bool leq(const PLFun& g) const { return (g - *this).nonnegative(); }

  /// Union of two sorted ray lists, sorted.
  static std::vector<Ray> merge_rays(const std::vector<Ray>& r, const std::vector<Ray>& s) {
    std::vector<Ray> out;
    std::size_t i = 0, j = 0;
    while (i < r.size() || j < s.size()) {
      if (j == s.size() || (i < r.size() && before(r[i], s[j]))) {
        out.push_back(r[i++]);
      } else if (i == r.size() || before(s[j], r[i])) {
        out.push_back(s[j++]);
      } else {
        out.push_back(r[i++]);
        ++j;
      }
    }
    return out;
  }

  std::string to_string() const {
    std::string s = rays_[0].to_string();
    for (std::size_t i = 0; i < funcs_.size(); ++i)
      s += " " + funcs_[i].to_string() + " " + rays_[i + 1].to_string();
    return s;
  }

 private:
  /// Merged fan of *this and g with the functional of each on every cone.
  struct Refinement {
    std::vector<Ray> rays;
    std::vector<Lin> f, g;
  };

  Refinement refine(const PLFun& g) const {
    Refinement out{merge_rays(rays_, g.rays_), {}, {}};
    std::size_t fi = 0, gi = 0;
    for (std::size_t k = 0; k + 1 < out.rays.size(); ++k) {
      const Ray& end = out.rays[k + 1];
      while (before(rays_[fi + 1], end)) ++fi;
      while (before(g.rays_[gi + 1], end)) ++gi;
      out.f.push_back(funcs_[fi]);
      out.g.push_back(g.funcs_[gi]);
    }
    return out;
  }

  template <class Op>
  PLFun pointwise(const PLFun& g, Op op) const {
    Refinement r = refine(g);
    PLFun out;
    out.rays_ = std::move(r.rays);
    out.funcs_.clear();
    for (std::size_t k = 0; k < r.f.size(); ++k) out.funcs_.push_back(op(r.f[k], r.g[k]));
    out.canonicalize();
    return out;
  }

  /// Join (take_max) or meet. Where f − g changes sign strictly inside a
  /// cone, the ray on which they agree is inserted.
  PLFun extremum(const PLFun& g, bool take_max) const {
    Refinement r = refine(g);
    PLFun out;
    out.rays_ = {r.rays[0]};
    out.funcs_.clear();
    auto pick = [&](std::int64_t d, Lin a, Lin b) { return (d >= 0) == take_max ? a : b; };
    for (std::size_t k = 0; k < r.f.size(); ++k) {
      const Lin F = r.f[k], G = r.g[k], D = F - G;
      const std::int64_t d0 = D.at(r.rays[k]), d1 = D.at(r.rays[k + 1]);
      if (sign(d0) * sign(d1) < 0) {
        std::int64_t cx = D.n, cy = checked_neg(D.m);
        if (cx < 0 || cy < 0) {
          cx = checked_neg(cx);
          cy = checked_neg(cy);
        }
        const Ray c = Ray::primitive(cx, cy);
        out.funcs_.push_back(pick(d0, F, G));
        out.rays_.push_back(c);
        out.funcs_.push_back(pick(d1, F, G));
      } else {
        out.funcs_.push_back(d0 + d1 >= 0 ? pick(1, F, G) : pick(-1, F, G));
      }
      out.rays_.push_back(r.rays[k + 1]);
    }
    out.canonicalize();
    return out;
  }

  void canonicalize() {
    std::vector<Ray> rays{rays_[0]};
    std::vector<Lin> funcs{funcs_[0]};
    for (std::size_t i = 1; i < funcs_.size(); ++i) {
      if (funcs_[i] == funcs.back()) continue;
      rays.push_back(rays_[i]);
      funcs.push_back(funcs_[i]);
    }
    rays.push_back(rays_.back());
    rays_ = std::move(rays);
    funcs_ = std::move(funcs);
  }

  std::vector<Ray> rays_;
  std::vector<Lin> funcs_;
};

/// Outcome of ⟨x⟩ ⊆ ⟨y⟩: the least n with |x| ≤ n|y| when it holds, else a
/// ray where |y| = 0 < |x|.
struct IdealLeq {
  bool holds = false;
  std::int64_t bound = 0;
  std::optional<Ray> witness;
};

/// On each cone of the common fan |x| and |y| are linear, so n|y| − |x| ≥ 0
/// on the cone iff it holds at the two bounding rays.
inline IdealLeq ideal_leq(const PLFun& x, const PLFun& y) {
  const PLFun ax = x.abs(), ay = y.abs();
  IdealLeq out{true, 0, std::nullopt};
  for (const auto& r : PLFun::merge_rays(ax.rays(), ay.rays())) {
    const std::int64_t vx = ax.at(r), vy = ay.at(r);
    if (vy == 0) {
      if (vx != 0) return {false, 0, r};
      continue;
    }
    out.bound = std::max(out.bound, checked_add(vx, vy - 1) / vy);
  }
  return out;
}

inline bool ideal_eq(const PLFun& x, const PLFun& y) {
  return ideal_leq(x, y).holds && ideal_leq(y, x).holds;
}

/// Number of angular components of {f ≠ 0}. The quadrant minus the origin is
/// split into atoms (each ray, each open cone, and the two halves of a cone
/// whose functional changes sign inside it, with the zero ray between);
/// components are maximal runs of nonzero atoms.
inline std::size_t support_components(const PLFun& f) {
  std::vector<bool> atoms;
  const auto& rays = f.rays();
  const auto& funcs = f.funcs();
  for (std::size_t i = 0; i < funcs.size(); ++i) {
    const std::int64_t v0 = funcs[i].at(rays[i]), v1 = funcs[i].at(rays[i + 1]);
    atoms.push_back(v0 != 0);
    if (sign(v0) * sign(v1) < 0) {
      atoms.insert(atoms.end(), {true, false, true});
    } else {
      atoms.push_back(v0 != 0 || v1 != 0);
    }
  }
  atoms.push_back(f.at(rays.back()) != 0);
  std::size_t comps = 0;
  for (std::size_t k = 0; k < atoms.size(); ++k)
    if (atoms[k] && (k == 0 || !atoms[k - 1])) ++comps;
  return comps;
}

/// Connected means at most one component; the empty support counts as
/// connected.
inline bool support_connected(const PLFun& f) { return support_components(f) <= 1; }

}  // namespace latspec
