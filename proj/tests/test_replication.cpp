#include <gtest/gtest.h>

#include <array>
#include <set>
#include <vector>

#include "latspec/replication.hpp"
#include "cube_support.hpp"
#include "test_support.hpp"

using namespace latspec;
using namespace latspec::testing::cube;
using latspec::testing::chain_map_convex_by_residual;
using latspec::testing::is_closed_literal;
using latspec::testing::is_convex_literal;

namespace {

bool has_check(const Report& r, const std::string& name) {
  for (const auto& c : r.checks)
    if (c.name == name) return c.passed;
  ADD_FAILURE() << "no check named " << name;
  return false;
}

}  // namespace

TEST(Cube, MapsMatchFormulas) {
  const CubeDiagram c = build_cube();
  ASSERT_EQ(c.edges.size(), 12u);
  for (const auto& e : c.edges)
    for (std::size_t x = 0; x < e.hom.dom().size(); ++x)
      EXPECT_EQ(tup(e.hom.cod(), e.hom(x)), fml(e.name[0], tup(e.hom.dom(), x))) << edge_title(e);
  EXPECT_EQ(c.D[7].size(), 54u);
  EXPECT_EQ(c.D[3].label(c.edge(1, 3).hom(1)), "(2,1)");
  EXPECT_EQ(c.D[7].label(c.edge(3, 7).hom(c.D[3].from_tuple({2, 1}))), "(2,2,1,1)");
  EXPECT_EQ(c.D[7].label(c.edge(6, 7).hom(c.D[3].from_tuple({2, 0}))), "(2,0,0,0)");
}

TEST(Cube, VerifyPasses) {
  const Report r = verify_cube(build_cube());
  EXPECT_TRUE(r.passed()) << r.text();
  EXPECT_EQ(r.data["squares"].size(), 6u);
}

TEST(Cube, FacesByFormulaOracle) {
  // a∘f and b∘f on D1 both give (x̄,x̄,x,r(x)).
  for (std::size_t x = 0; x < 3; ++x) {
    EXPECT_EQ(fml('a', fml('f', {x})), (Tup{kBar[x], kBar[x], x, kR[x]}));
    EXPECT_EQ(fml('b', fml('f', {x})), (Tup{kBar[x], kBar[x], x, kR[x]}));
  }
  const CubeDiagram c = build_cube();
  for (const auto& [p, q1, q2, t] : cube_squares())
    EXPECT_EQ(c.map(p, t).table(), c.edge(q2, t).hom.after(c.edge(p, q2).hom).table());
}

TEST(Cube, StrongAmalgamByTupleSets) {
  const CubeDiagram c = build_cube();
  for (const auto& [p, q1, q2, t] : cube_squares()) {
    const auto& g1 = c.edge(q1, t);
    const auto& g2 = c.edge(q2, t);
    std::set<Tup> i1, i2, i0;
    for (std::size_t x = 0; x < c.D[q1].size(); ++x) i1.insert(fml(g1.name[0], tup(c.D[q1], x)));
    for (std::size_t x = 0; x < c.D[q2].size(); ++x) i2.insert(fml(g2.name[0], tup(c.D[q2], x)));
    const auto& h = c.edge(p, q1);
    for (std::size_t x = 0; x < c.D[p].size(); ++x) i0.insert(fml(g1.name[0], fml(h.name[0], tup(c.D[p], x))));
    std::set<Tup> both;
    for (const auto& v : i1)
      if (i2.count(v)) both.insert(v);
    EXPECT_EQ(both, i0) << cube_lattice_name(t);
  }
  std::set<Tup> fg;
  for (std::size_t x = 0; x < 3; ++x)
    for (std::size_t y = 0; y < 3; ++y)
      if (fml('f', {x}) == fml('g', {y})) fg.insert(fml('f', {x}));
  EXPECT_EQ(fg, (std::set<Tup>{{0, 0}, {2, 2}}));
}

TEST(Cube, NoEdgeButEIsClosedByLiteralOracle) {
  const CubeDiagram c = build_cube();
  for (const auto& e : c.edges) {
    EXPECT_EQ(is_closed(e.hom), is_closed_literal(e.hom)) << edge_title(e);
    if (e.name != "e") {
      EXPECT_FALSE(is_closed_literal(e.hom)) << edge_title(e);
    }
  }
}

TEST(Cube, CompositesFollowAnyPath) {
  const CubeDiagram c = build_cube();
  const LatHom via1 = c.edge(3, 7).hom.after(c.edge(1, 3).hom).after(c.edge(0, 1).hom);
  const LatHom via3 = c.edge(6, 7).hom.after(c.edge(4, 6).hom).after(c.edge(0, 4).hom);
  EXPECT_EQ(via1.table(), via3.table());
  EXPECT_EQ(c.map(0, 7).table(), via1.table());
  EXPECT_THROW(c.map(3, 4), LatticeError);
  EXPECT_EQ(c.map(5, 5).table(), LatHom::identity(c.D[5]).table());
}

TEST(CubeV0, ExpansionPasses) {
  const CubeDiagram c = build_cube();
  const CubeV0 ex = expand_cube_v0(c);
  EXPECT_TRUE(ex.report.passed()) << ex.report.text();
  ASSERT_EQ(ex.v0.size(), 8u);
  EXPECT_EQ(ex.v0[0].diff(1, 0), 1u);
  EXPECT_EQ(ex.v0[0].diff(0, 1), 0u);
  const DLat& d = c.D[3];
  EXPECT_EQ(d.label(ex.v0[3].diff(d.from_tuple({2, 1}), d.from_tuple({1, 2}))), "(2,0)");
}

TEST(CubeV0, IdentitiesAndPreservationByDirectScan) {
  const CubeDiagram c = build_cube();
  const CubeV0 ex = expand_cube_v0(c);
  ASSERT_EQ(ex.v0.size(), 8u);
  for (Subset p = 0; p < 8; ++p) {
    const DLat& d = c.D[p];
    for (std::size_t x = 0; x < d.size(); ++x)
      for (std::size_t y = 0; y < d.size(); ++y) {
        const std::size_t xy = ex.v0[p].diff(x, y), yx = ex.v0[p].diff(y, x);
        EXPECT_EQ(d.element(d.meet(x, y)) | d.element(xy), d.element(x));
        EXPECT_EQ(d.element(xy) & d.element(yx), 0u);
      }
  }
  for (Subset p = 0; p < 8; ++p)
    for (Subset q = 0; q < 8; ++q) {
      if ((p & ~q) != 0) continue;
      const LatHom f = c.map(p, q);
      for (std::size_t x = 0; x < c.D[p].size(); ++x)
        for (std::size_t y = 0; y < c.D[p].size(); ++y)
          ASSERT_EQ(f(ex.v0[p].diff(x, y)), ex.v0[q].diff(f(x), f(y)));
    }
}

TEST(CubeV0, InheritedEntriesComeFromSubImages) {
  const CubeDiagram c = build_cube();
  const CubeV0 ex = expand_cube_v0(c);
  // (2,2)∖(0,0) in D12 lies in the image of D∅, so it is forced
  // to the image of 1∖0 = 1.
  const DLat& d = c.D[3];
  EXPECT_EQ(d.label(ex.v0[3].diff(d.from_tuple({2, 2}), d.from_tuple({0, 0}))), "(2,2)");
  // (2,1)∖(0,0) through f.
  EXPECT_EQ(d.label(ex.v0[3].diff(d.from_tuple({2, 1}), d.from_tuple({0, 0}))), "(2,1)");
  // 2∖1 = 2 is forced in the chain, so f carries (2,2)∖(2,1) to (2,2),
  // not to the least splitting (0,2) of the pair in 3².
  EXPECT_EQ(d.label(ex.v0[3].diff(d.from_tuple({2, 2}), d.from_tuple({2, 1}))), "(2,2)");
  EXPECT_EQ(d.label(find_splitting(d, d.from_tuple({2, 2}), d.from_tuple({2, 1}))->x), "(0,2)");
}

TEST(Rho, ContradictionReplays) {
  const Report r = run_rho_contradiction();
  EXPECT_TRUE(r.passed()) << r.text();
  EXPECT_EQ(r.data["pushed"], Json({"(2,2,0,0)", "(2,2,0,1)", "(2,0,0,0)"}));
  EXPECT_EQ(r.data["triangle"]["failing_coordinates"], Json({3}));
  for (const auto& s : r.data["step1"]) EXPECT_EQ(s["solutions"], "((2,0), (0,2))");
}

TEST(Rho, SystemSolvedByHand) {
  // (1,1)∨u = (2,1), (1,1)∨v = (1,2), u∧v = 0 over coordinate tuples.
  std::vector<std::pair<Tup, Tup>> sols;
  for (std::size_t u0 = 0; u0 < 3; ++u0)
    for (std::size_t u1 = 0; u1 < 3; ++u1)
      for (std::size_t v0 = 0; v0 < 3; ++v0)
        for (std::size_t v1 = 0; v1 < 3; ++v1)
          if (std::max<std::size_t>(1, u0) == 2 && std::max<std::size_t>(1, u1) == 1 &&
              std::max<std::size_t>(1, v0) == 1 && std::max<std::size_t>(1, v1) == 2 &&
              std::min(u0, v0) == 0 && std::min(u1, v1) == 0)
            sols.push_back({{u0, u1}, {v0, v1}});
  ASSERT_EQ(sols.size(), 1u);
  EXPECT_EQ(sols[0].first, (Tup{2, 0}));
  EXPECT_EQ(fml('a', sols[0].first), (Tup{2, 2, 0, 0}));
  EXPECT_EQ(fml('b', sols[0].first), (Tup{2, 2, 0, 1}));
  EXPECT_EQ(fml('c', sols[0].first), (Tup{2, 0, 0, 0}));
}

TEST(Rho, GeneratorsMatchPaperValues) {
  const CubeDiagram c = build_cube();
  const auto g = rho_generators(c);
  EXPECT_EQ(c.D[7].label(g[7].at(1)), "(2,2,1,1)");
  EXPECT_EQ(c.D[7].label(g[7].at(2)), "(2,1,2,1)");
  EXPECT_EQ(c.D[7].label(g[7].at(3)), "(1,2,2,1)");
  EXPECT_EQ(c.D[6].label(g[6].at(2)), "(2,1)");
  EXPECT_EQ(c.D[6].label(g[6].at(3)), "(1,2)");
  EXPECT_EQ(g[4].at(3), 1u);
  EXPECT_TRUE(g[0].empty());
}

TEST(Rho, FailsWithoutExpansion) {
  const CubeDiagram c = build_cube();
  CubeV0 none;
  EXPECT_FALSE(run_rho_contradiction(c, none).passed());
}

TEST(Kernels, ClosedKernel) {
  const Report r = kernel_not_closed();
  EXPECT_TRUE(r.passed()) << r.text();
  EXPECT_EQ(r.data["witness"], "(1,u,0)");
  const LatHom eps = epsilon_kernel();
  EXPECT_FALSE(is_closed_literal(eps));
  EXPECT_TRUE(has_check(r, "identity on 3-chain is closed"));
}

TEST(Kernels, ConvexKernel) {
  const Report r = kernel_not_convex();
  EXPECT_TRUE(r.passed()) << r.text();
  const LatHom phi = phi_kernel();
  EXPECT_EQ(phi.table(), (std::vector<std::size_t>{0, 1, 1, 2}));
  EXPECT_FALSE(is_convex_literal(phi));
  EXPECT_FALSE(chain_map_convex_by_residual(phi.table(), 3));
  EXPECT_EQ(r.data["surjection stage 1"]["sources"], 16);
  EXPECT_EQ(r.data["surjection stage 1"]["targets"], 12);
  EXPECT_EQ(r.data["surjection stage 2"]["sources"], 64);
}

TEST(Kernels, DualHom) {
  const Poset p = Poset::chain(3), q = Poset::chain(2);
  EXPECT_THROW(dual_hom(p, q, {2, 0}), HomError);
  EXPECT_THROW(dual_hom(p, q, {0}), HomError);
  EXPECT_EQ(dual_hom(p, p, {0, 1, 2}).table(), LatHom::identity(DLat::downsets(p)).table());
  // Constant base map to the bottom point: S ↦ all of Q iff S ∋ 0.
  EXPECT_EQ(dual_hom(p, q, {0, 0}).table(), (std::vector<std::size_t>{0, 2, 2, 2}));
}

TEST(Replicate, AllPass) {
  const auto rs = replicate_all();
  ASSERT_EQ(rs.size(), 5u);
  for (const auto& r : rs) EXPECT_TRUE(r.passed()) << r.text();
  EXPECT_TRUE(has_check(rs[0], "f: D1 -> D12 is not closed"));
}
