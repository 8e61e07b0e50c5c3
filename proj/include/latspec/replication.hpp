#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "latspec/condensate.hpp"
#include "latspec/dlat.hpp"
#include "latspec/errors.hpp"
#include "latspec/hom_analysis.hpp"
#include "latspec/lathom.hpp"
#include "latspec/normality.hpp"
#include "latspec/report.hpp"

namespace latspec {

/// Subsets of {1,2,3} as bit masks: bit i-1 stands for i.
using Subset = unsigned;

inline std::string subset_name(Subset p) {
  if (p == 0) return "∅";
  std::string s;
  for (unsigned i = 0; i < 3; ++i)
    if (p & (1U << i)) s += static_cast<char>('1' + i);
  return s;
}

inline std::string cube_lattice_name(Subset p) { return "D" + subset_name(p); }

struct CubeEdge {
  Subset from, to;
  std::string name;
  LatHom hom;
};

struct CubeDiagram {
  std::array<DLat, 8> D;
  std::vector<CubeEdge> edges;

  const CubeEdge& edge(Subset p, Subset q) const {
    for (const auto& e : edges)
      if (e.from == p && e.to == q) return e;
    throw LatticeError("no cube edge " + subset_name(p) + " -> " + subset_name(q));
  }

  /// Composite f_p^q for p ⊆ q, through the lowest missing index first.
  LatHom map(Subset p, Subset q) const {
    if ((p & ~q) != 0) throw LatticeError("not a cube inclusion " + subset_name(p) + " -> " + subset_name(q));
    if (p == q) return LatHom::identity(D[p]);
    const Subset missing = q & ~p;
    const Subset r = p | (missing & (~missing + 1));
    return map(r, q).after(edge(p, r).hom);
  }

  std::string label(Subset p, std::size_t x) const { return D[p].label(x); }
};

namespace detail {

inline std::size_t bar(std::size_t x) { return x == 0 ? 0 : 2; }
inline std::size_t r2(std::size_t x) { return x == 0 ? 0 : 1; }

template <class F>
LatHom tuple_hom(const DLat& dom, const DLat& cod, F f) {
  std::vector<std::size_t> t(dom.size());
  for (std::size_t i = 0; i < dom.size(); ++i) {
    auto x = dom.shape().empty() ? std::vector<std::size_t>{i} : dom.tuple_of(i);
    t[i] = cod.from_tuple(f(x));
  }
  return LatHom(dom, cod, std::move(t));
}

inline std::string set_labels(const DLat& d, const ElemSet& s) {
  std::string out = "{";
  bool first = true;
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s.test(i)) {
      out += (first ? "" : ",") + d.label(i);
      first = false;
    }
  return out + "}";
}

inline std::vector<std::string> table_labels(const LatHom& f) {
  std::vector<std::string> out;
  for (auto y : f.table()) out.push_back(f.cod().label(y));
  return out;
}

}  // namespace detail

/// The cube of 0,1-embeddings with the explicit formulas
/// f(x) = (x̄,x), g(x) = (x,x̄), a(x,y) = (x̄,x,y,r(y)), b(x,y) = (x,x̄,y,r(x)),
/// c(x,y) = (x,y,ȳ,r(y)) and e: 2 → 3, 1 ↦ 2.
inline CubeDiagram build_cube() {
  using detail::bar;
  using detail::r2;
  using T = std::vector<std::size_t>;
  CubeDiagram c;
  c.D[0] = DLat::chain(2);
  for (Subset p : {1U, 2U, 4U}) c.D[p] = DLat::chain(3);
  for (Subset p : {3U, 5U, 6U}) c.D[p] = DLat::chain_product({3, 3});
  c.D[7] = DLat::chain_product({3, 3, 3, 2});
  const LatHom e(c.D[0], c.D[1], {0, 2});
  const LatHom f = detail::tuple_hom(c.D[1], c.D[3], [](const T& x) { return T{bar(x[0]), x[0]}; });
  const LatHom g = detail::tuple_hom(c.D[1], c.D[3], [](const T& x) { return T{x[0], bar(x[0])}; });
  const LatHom a = detail::tuple_hom(c.D[3], c.D[7], [](const T& v) {
    return T{bar(v[0]), v[0], v[1], r2(v[1])};
  });
  const LatHom b = detail::tuple_hom(c.D[3], c.D[7], [](const T& v) {
    return T{v[0], bar(v[0]), v[1], r2(v[0])};
  });
  const LatHom cc = detail::tuple_hom(c.D[3], c.D[7], [](const T& v) {
    return T{v[0], v[1], bar(v[1]), r2(v[1])};
  });
  c.edges = {{0, 1, "e", e},   {0, 2, "e", e},   {0, 4, "e", e},  {1, 3, "f", f},
             {1, 5, "f", f},   {2, 3, "g", g},   {2, 6, "f", f},  {4, 5, "g", g},
             {4, 6, "g", g},   {3, 7, "a", a},   {5, 7, "b", b},  {6, 7, "c", cc}};
  return c;
}

inline std::string edge_title(const CubeEdge& e) {
  return e.name + ": " + cube_lattice_name(e.from) + " -> " + cube_lattice_name(e.to);
}

/// The six squares p ⊂ p∪{i}, p∪{j} ⊂ p∪{i,j}.
inline std::vector<std::array<Subset, 4>> cube_squares() {
  std::vector<std::array<Subset, 4>> out;
  for (Subset p = 0; p < 8; ++p)
    for (unsigned i = 0; i < 3; ++i)
      for (unsigned j = i + 1; j < 3; ++j) {
        const Subset bi = 1U << i, bj = 1U << j;
        if ((p & bi) || (p & bj)) continue;
        out.push_back({p, p | bi, p | bj, p | bi | bj});
      }
  return out;
}

inline Report verify_cube(const CubeDiagram& c) {
  Report r;
  r.title = "cube";
  Json lats = Json::array();
  for (Subset p = 0; p < 8; ++p) {
    Json l;
    l["name"] = cube_lattice_name(p);
    l["size"] = c.D[p].size();
    lats.push_back(std::move(l));
  }
  r.data["lattices"] = std::move(lats);
  Json maps = Json::array();
  for (const auto& e : c.edges) {
    r.check(edge_title(e) + " is a 0,1-embedding", e.hom.is_injective() && e.hom.preserves_top());
    Json m;
    m["name"] = e.name;
    m["from"] = cube_lattice_name(e.from);
    m["to"] = cube_lattice_name(e.to);
    m["table"] = detail::table_labels(e.hom);
    maps.push_back(std::move(m));
  }
  r.data["maps"] = std::move(maps);
  for (Subset p = 0; p < 8; ++p) {
    const auto w = normality_violation(c.D[p]);
    r.check(cube_lattice_name(p) + " completely normal", !w,
            w ? "no splitting for (" + c.label(p, w->first) + ", " + c.label(p, w->second) + ")" : "");
  }
  Json squares = Json::array();
  for (const auto& [p, q1, q2, top] : cube_squares()) {
    const LatHom& g1 = c.edge(q1, top).hom;
    const LatHom& g2 = c.edge(q2, top).hom;
    const LatHom& h1 = c.edge(p, q1).hom;
    const LatHom& h2 = c.edge(p, q2).hom;
    const std::string sq = cube_lattice_name(p) + " -> " + cube_lattice_name(q1) + ", " +
                           cube_lattice_name(q2) + " -> " + cube_lattice_name(top);
    std::string diff;
    for (std::size_t x = 0; x < c.D[p].size() && diff.empty(); ++x)
      if (g1(h1(x)) != g2(h2(x)))
        diff = "at " + c.label(p, x) + ": " + c.label(top, g1(h1(x))) + " vs " + c.label(top, g2(h2(x)));
    r.check("face " + sq + " commutes", diff.empty(), diff);
    const ElemSet meet = g1.image() & g2.image();
    const ElemSet h = g1.after(h1).image();
    r.check("strong amalgam " + sq, meet == h,
            meet == h ? "" : detail::set_labels(c.D[top], meet) + " vs " + detail::set_labels(c.D[top], h));
    Json s;
    s["square"] = sq;
    s["image_intersection"] = detail::set_labels(c.D[top], meet);
    s["common_image"] = detail::set_labels(c.D[top], h);
    squares.push_back(std::move(s));
  }
  r.data["squares"] = std::move(squares);

  const DLat& d12 = c.D[3];
  const DLat& d123 = c.D[7];
  r.check("f(1) = (2,1)", c.edge(1, 3).hom(1) == d12.from_tuple({2, 1}));
  r.check("a(2,1) = (2,2,1,1)", c.edge(3, 7).hom(d12.from_tuple({2, 1})) == d123.from_tuple({2, 2, 1, 1}));
  r.check("c(2,0) = (2,0,0,0)", c.edge(6, 7).hom(d12.from_tuple({2, 0})) == d123.from_tuple({2, 0, 0, 0}));
  ElemSet expect(d12.size());
  expect.set(d12.from_tuple({0, 0}));
  expect.set(d12.from_tuple({2, 2}));
  const ElemSet fg = c.edge(1, 3).hom.image() & c.edge(2, 3).hom.image();
  r.check("f[3] ∩ g[3] = {(0,0),(2,2)}", fg == expect, detail::set_labels(d12, fg));

  Json closed = Json::array();
  for (const auto& e : c.edges) {
    const auto w = closed_violation(e.hom);
    Json j;
    j["map"] = edge_title(e);
    j["closed"] = !w;
    if (w)
      j["witness"] = {c.label(e.from, w->a0), c.label(e.from, w->a1), c.label(e.to, w->b)};
    closed.push_back(std::move(j));
    if (e.name != "e") r.check(edge_title(e) + " is not closed", w.has_value());
  }
  r.data["closedness"] = std::move(closed);
  return r;
}

struct CubeV0 {
  std::vector<V0Lat> v0;  // indexed by Subset; empty when the expansion failed
  Report report;
};

/// Inductive V₀ expansion of the cube. D_p is processed after all its
/// proper subsets: a pair lying in the image of some f_q^p (q ⊊ p) takes
/// f_q^p(y1∖y2) for the smallest such q; every other pair takes the least
/// splitting.
inline CubeV0 expand_cube_v0(const CubeDiagram& c) {
  CubeV0 out;
  Report& r = out.report;
  r.title = "cube V0 expansion";
  std::map<std::pair<Subset, Subset>, LatHom> comp;
  std::map<std::pair<Subset, Subset>, std::vector<std::optional<std::size_t>>> inverse;
  for (Subset p = 0; p < 8; ++p)
    for (Subset q = 0; q < 8; ++q)
      if (q != p && (q & ~p) == 0) {
        LatHom f = c.map(q, p);
        std::vector<std::optional<std::size_t>> inv(c.D[p].size());
        for (std::size_t y = 0; y < f.dom().size(); ++y) inv[f(y)] = y;
        inverse[{q, p}] = std::move(inv);
        comp.emplace(std::pair{q, p}, std::move(f));
      }
  std::vector<Subset> order = {0, 1, 2, 4, 3, 5, 6, 7};
  std::array<std::optional<V0Lat>, 8> v;
  std::string conflict, no_least;
  Json counts = Json::array();
  for (Subset p : order) {
    const DLat& d = c.D[p];
    DiffPins pins;
    std::size_t inherited = 0;
    for (std::size_t x1 = 0; x1 < d.size(); ++x1)
      for (std::size_t x2 = 0; x2 < d.size(); ++x2) {
        std::vector<Subset> S;
        for (Subset q = 0; q < 8; ++q)
          if (q != p && (q & ~p) == 0 && inverse[{q, p}][x1] && inverse[{q, p}][x2]) S.push_back(q);
        if (S.empty()) continue;
        Subset least = p;
        for (Subset q : S) least &= q;
        if (std::find(S.begin(), S.end(), least) == S.end()) {
          if (no_least.empty()) no_least = "(" + d.label(x1) + ", " + d.label(x2) + ") in " + cube_lattice_name(p);
          least = S.front();
        }
        auto value = [&](Subset q) {
          const auto& inv = inverse[{q, p}];
          return comp.at({q, p})(v[q]->diff(*inv[x1], *inv[x2]));
        };
        const std::size_t val = value(least);
        for (Subset q : S)
          if (value(q) != val && conflict.empty())
            conflict = cube_lattice_name(p) + " at (" + d.label(x1) + ", " + d.label(x2) + ") from " +
                       cube_lattice_name(least) + " and " + cube_lattice_name(q);
        pins[{x1, x2}] = val;
        ++inherited;
      }
    try {
      v[p].emplace(expand_v0(d, pins));
    } catch (const LatticeError& e) {
      r.check("expansion of " + cube_lattice_name(p), false, e.what());
      return out;
    }
    Json cnt;
    cnt["lattice"] = cube_lattice_name(p);
    cnt["pairs"] = d.size() * d.size();
    cnt["inherited"] = inherited;
    cnt["triangle_failures"] = v[p]->triangle_failures(1u << 20).size();
    counts.push_back(std::move(cnt));
  }
  r.data["lattices"] = std::move(counts);
  r.check("a smallest inheriting subset always exists", no_least.empty(), no_least);
  r.check("inherited differences agree", conflict.empty(), conflict);
  for (Subset p = 0; p < 8; ++p) {
    const auto w = v[p]->identity_violation();
    r.check("V0 identities in " + cube_lattice_name(p), !w,
            w ? "identity " + std::to_string(w->first) + " at (" + c.label(p, w->second.first) + ", " +
                    c.label(p, w->second.second) + ")"
              : "");
  }
  auto preserves = [&](const LatHom& f, Subset p, Subset q) -> std::string {
    for (std::size_t x = 0; x < c.D[p].size(); ++x)
      for (std::size_t y = 0; y < c.D[p].size(); ++y)
        if (f(v[p]->diff(x, y)) != v[q]->diff(f(x), f(y)))
          return "at (" + c.label(p, x) + ", " + c.label(p, y) + ")";
    return {};
  };
  for (const auto& e : c.edges) {
    const std::string bad = preserves(e.hom, e.from, e.to);
    r.check(edge_title(e) + " preserves difference", bad.empty(), bad);
  }
  std::string bad_comp;
  for (const auto& [k, f] : comp)
    if (bad_comp.empty()) {
      const std::string b = preserves(f, k.first, k.second);
      if (!b.empty()) bad_comp = cube_lattice_name(k.first) + " -> " + cube_lattice_name(k.second) + " " + b;
    }
  r.check("all composite maps preserve difference", bad_comp.empty(), bad_comp);
  const DLat& d12 = c.D[3];
  const std::size_t dd = v[3]->diff(d12.from_tuple({2, 1}), d12.from_tuple({1, 2}));
  r.check("(2,1)∖(1,2) = (2,0) in D12", dd == d12.from_tuple({2, 0}), d12.label(dd));
  r.check("1∖0 = 1 and 0∖1 = 0 in D∅", v[0]->diff(1, 0) == 1 && v[0]->diff(0, 1) == 0);
  for (auto& x : v) out.v0.push_back(std::move(*x));
  return out;
}

/// ρ on the generators a_i, i ∈ X, as element indices of D_X.
using RhoGenerators = std::array<std::map<unsigned, std::size_t>, 8>;

inline RhoGenerators rho_generators(const CubeDiagram& c) {
  RhoGenerators g;
  for (unsigned i = 1; i <= 3; ++i) g[1U << (i - 1)][i] = 1;
  for (Subset p : {3U, 5U, 6U}) {
    unsigned lo = 0, hi = 0;
    for (unsigned i = 1; i <= 3; ++i)
      if (p & (1U << (i - 1))) (lo ? hi : lo) = i;
    g[p][lo] = c.D[p].from_tuple({2, 1});
    g[p][hi] = c.D[p].from_tuple({1, 2});
  }
  g[7][1] = c.D[7].from_tuple({2, 2, 1, 1});
  g[7][2] = c.D[7].from_tuple({2, 1, 2, 1});
  g[7][3] = c.D[7].from_tuple({1, 2, 2, 1});
  return g;
}

/// The forced values of ρ on d_{i,j} and the failed triangle they produce.
inline Report run_rho_contradiction(const CubeDiagram& c, const CubeV0& ex) {
  Report r;
  r.title = "rho";
  if (ex.v0.size() != 8) {
    r.check("cube V0 expansion available", false);
    return r;
  }
  const auto rho = rho_generators(c);
  for (const auto& e : c.edges) {
    std::string bad;
    for (const auto& [i, x] : rho[e.from])
      if (e.hom(x) != rho[e.to].at(i) && bad.empty())
        bad = "a" + std::to_string(i) + ": " + c.label(e.to, e.hom(x)) + " vs " + c.label(e.to, rho[e.to].at(i));
    r.check("naturality on generators along " + edge_title(e), bad.empty(), bad);
  }
  // Joint closure of (ρ_X(t), ρ_Y(t)) over terms t: the sublattice of
  // D_X × D_Y generated by the generator pairs under ∨, ∧, ∖.
  Json sub = Json::array();
  for (const auto& e : c.edges) {
    const DLat& dx = c.D[e.from];
    const DLat& dy = c.D[e.to];
    const V0Lat& vx = ex.v0[e.from];
    const V0Lat& vy = ex.v0[e.to];
    std::set<std::pair<std::size_t, std::size_t>> cl = {{dx.bottom(), dy.bottom()}, {dx.top(), dy.top()}};
    for (const auto& [i, x] : rho[e.from]) cl.insert({x, rho[e.to].at(i)});
    for (bool grew = true; grew;) {
      grew = false;
      const std::vector<std::pair<std::size_t, std::size_t>> cur(cl.begin(), cl.end());
      for (const auto& [u1, w1] : cur)
        for (const auto& [u2, w2] : cur)
          for (auto p : {std::pair{dx.join(u1, u2), dy.join(w1, w2)}, std::pair{dx.meet(u1, u2), dy.meet(w1, w2)},
                         std::pair{vx.diff(u1, u2), vy.diff(w1, w2)}})
            grew = cl.insert(p).second || grew;
    }
    std::string bad;
    std::set<std::size_t> src;
    for (const auto& [u, w] : cl) {
      src.insert(u);
      if (e.hom(u) != w && bad.empty()) bad = "at " + dx.label(u);
    }
    r.check("naturality on the generated sublattice along " + edge_title(e), bad.empty(), bad);
    Json s;
    s["map"] = edge_title(e);
    s["generated_size"] = src.size();
    sub.push_back(std::move(s));
  }
  r.data["generated_sublattices"] = std::move(sub);

  // Step 1: a_i = (a_i∧a_j)∨d_{i,j}, a_j = (a_i∧a_j)∨d_{j,i}, d_{i,j}∧d_{j,i} = 0 in D_{i,j}.
  struct Pair {
    unsigned i, j;
    Subset p;
  };
  const Pair pairs[] = {{1, 2, 3}, {1, 3, 5}, {2, 3, 6}};
  std::map<Subset, std::size_t> forced;
  Json step1 = Json::array();
  for (const auto& [i, j, p] : pairs) {
    const DLat& d = c.D[p];
    const std::size_t ai = rho[p].at(i), aj = rho[p].at(j), m = d.meet(ai, aj);
    std::vector<std::pair<std::size_t, std::size_t>> sols;
    for (std::size_t u = 0; u < d.size(); ++u)
      for (std::size_t w = 0; w < d.size(); ++w)
        if (d.join(m, u) == ai && d.join(m, w) == aj && d.meet(u, w) == d.bottom()) sols.emplace_back(u, w);
    const std::string tag = std::to_string(i) + std::to_string(j);
    r.check("a" + std::to_string(i) + "∧a" + std::to_string(j) + " = (1,1) in " + cube_lattice_name(p),
            m == d.from_tuple({1, 1}), d.label(m));
    const bool unique = sols.size() == 1 && sols[0] == std::pair{d.from_tuple({2, 0}), d.from_tuple({0, 2})};
    std::string shown;
    for (const auto& [u, w] : sols) shown += (shown.empty() ? "" : " ") + ("(" + d.label(u) + ", " + d.label(w) + ")");
    r.check("d" + tag + " system has the unique solution ((2,0),(0,2))", unique, shown);
    r.check("expansion agrees: a" + std::to_string(i) + "∖a" + std::to_string(j) + " = (2,0)",
            ex.v0[p].diff(ai, aj) == d.from_tuple({2, 0}) && ex.v0[p].diff(aj, ai) == d.from_tuple({0, 2}));
    Json s;
    s["pair"] = tag;
    s["solutions"] = shown;
    step1.push_back(std::move(s));
    forced[p] = sols.empty() ? d.bottom() : sols[0].first;
  }
  r.data["step1"] = std::move(step1);

  // Step 2: ρ(d_{i,j}) is the image of the forced value under a, b, c.
  const DLat& top = c.D[7];
  const std::size_t d12 = c.edge(3, 7).hom(forced[3]);
  const std::size_t d13 = c.edge(5, 7).hom(forced[5]);
  const std::size_t d23 = c.edge(6, 7).hom(forced[6]);
  r.check("rho(d12) = (2,2,0,0)", d12 == top.from_tuple({2, 2, 0, 0}), top.label(d12));
  r.check("rho(d13) = (2,2,0,1)", d13 == top.from_tuple({2, 2, 0, 1}), top.label(d13));
  r.check("rho(d23) = (2,0,0,0)", d23 == top.from_tuple({2, 0, 0, 0}), top.label(d23));
  const V0Lat& vt = ex.v0[7];
  r.check("pushed values equal the differences of generator images in D123",
          vt.diff(rho[7].at(1), rho[7].at(2)) == d12 && vt.diff(rho[7].at(1), rho[7].at(3)) == d13 &&
              vt.diff(rho[7].at(2), rho[7].at(3)) == d23);
  r.data["pushed"] = {top.label(d12), top.label(d13), top.label(d23)};

  // Step 3: d13 ≤ d12 ∨ d23 would be needed; it fails on the last coordinate.
  const std::size_t j = top.join(d12, d23);
  r.check("rho(d12) ∨ rho(d23) = (2,2,0,0)", j == top.from_tuple({2, 2, 0, 0}), top.label(j));
  const auto t13 = top.tuple_of(d13), tj = top.tuple_of(j);
  std::vector<std::size_t> bad_coords;
  for (std::size_t k = 0; k < t13.size(); ++k)
    if (t13[k] > tj[k]) bad_coords.push_back(k);
  r.check("rho(d13) ≰ rho(d12) ∨ rho(d23)", !top.leq(d13, j));
  r.check("the inequality fails exactly on the last coordinate", bad_coords == std::vector<std::size_t>{3});
  r.data["triangle"] = {{"lhs", top.label(d13)}, {"rhs", top.label(j)}, {"failing_coordinates", bad_coords}};
  return r;
}

inline Report run_rho_contradiction() {
  const CubeDiagram c = build_cube();
  return run_rho_contradiction(c, expand_cube_v0(c));
}

/// ε: 3 → 2 with 0 < u < 1 and u ↦ 1.
inline LatHom epsilon_kernel() {
  DLat three = DLat::chain(3);
  three.set_labels({"0", "u", "1"});
  return LatHom(three, DLat::chain(2), {0, 1, 1});
}

/// φ: 4 → 3, the downset dual of 1 ↦ 1, 2 ↦ 3.
inline LatHom phi_kernel() {
  LatHom f = dual_hom(Poset::chain(3), Poset::chain(2), {0, 2});
  DLat a = f.dom(), b = f.cod();
  a.set_labels({"0", "1", "2", "3"});
  b.set_labels({"0", "1", "2"});
  return LatHom(a, b, f.table());
}

inline Report kernel_not_closed() {
  Report r;
  r.title = "closed kernel";
  const LatHom eps = epsilon_kernel();
  // Zero-separating tables (0, u, t) with u, t ≠ 0 that are homomorphisms.
  std::size_t zero_separating = 0;
  for (std::size_t u = 1; u < 2; ++u)
    for (std::size_t t = 1; t < 2; ++t)
      if (!LatHom::violation(eps.dom(), eps.cod(), {0, u, t})) ++zero_separating;
  r.check("ε is the unique zero-separating map 3 -> 2", zero_separating == 1);
  const auto w = closed_violation(eps);
  r.check("ε is not closed", w.has_value());
  const DLat& a = eps.dom();
  std::string wit;
  if (w) wit = "(" + a.label(w->a0) + "," + a.label(w->a1) + "," + eps.cod().label(w->b) + ")";
  r.check("witness (1,u,0)", w && w->a0 == 2 && w->a1 == 1 && w->b == 0, wit);
  r.data["table"] = detail::table_labels(eps);
  r.data["witness"] = wit;
  for (std::size_t n : {2, 3, 4}) {
    const DLat ch = DLat::chain(n);
    r.check("identity on " + std::to_string(n) + "-chain is closed", is_closed(LatHom::identity(ch)));
  }
  return r;
}

inline Report kernel_not_convex(std::size_t max_stage = 2) {
  Report r;
  r.title = "convex kernel";
  const LatHom phi = phi_kernel();
  r.check("φ table is (0,1,1,2)", phi.table() == std::vector<std::size_t>{0, 1, 1, 2});
  r.check("φ is a surjective 0,1-homomorphism", phi.is_surjective() && phi.preserves_top());
  r.check("φ is cofinal", is_cofinal(phi));
  const auto w = is_cofinal(phi) ? convex_violation(phi) : std::nullopt;
  r.check("φ is not convex", w.has_value());
  r.data["table"] = detail::table_labels(phi);
  if (w) {
    r.data["witness"] = {{"P", detail::set_labels(phi.dom(), w->P)},
                         {"Q0", detail::set_labels(phi.cod(), w->Q0)},
                         {"J", detail::set_labels(phi.cod(), w->J)}};
  }
  r.check("identity on 4-chain is convex", is_convex(LatHom::identity(phi.dom())));
  const auto src = Condensate::make(LatHom::identity(phi.dom()), IndexUniverse::uncountable());
  const auto dst = Condensate::make(phi, IndexUniverse::uncountable());
  std::vector<std::string> J;
  for (std::size_t k = 0; k <= max_stage; ++k) {
    if (k > 0) J.push_back("i" + std::to_string(k));
    r.append(verify_almost_constant_surjection(src, dst, J));
  }
  return r;
}

inline Report replicate_cube() { return verify_cube(build_cube()); }

inline Report replicate_cube_v0() { return expand_cube_v0(build_cube()).report; }

inline std::vector<Report> replicate_all() {
  const CubeDiagram c = build_cube();
  CubeV0 ex = expand_cube_v0(c);
  return {verify_cube(c), ex.report, run_rho_contradiction(c, ex), kernel_not_closed(), kernel_not_convex()};
}

}  // namespace latspec
