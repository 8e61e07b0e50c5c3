#include <random>
#include <set>

#include <gtest/gtest.h>

#include "latspec/glambda.hpp"
#include "latspec/pl_term.hpp"
#include "pl_support.hpp"

using namespace latspec;
using namespace latspec::testing;

namespace {

const PLFun a = PLFun::gen_a();
const PLFun b = PLFun::gen_b();

Rational q(std::int64_t n, std::int64_t d = 1) { return Rational::make(n, d); }

/// Same function, re-expressed on a finer fan.
PLFun subdivided(std::mt19937_64& rng, const PLFun& f) {
  std::vector<Ray> rays = f.rays();
  std::uniform_int_distribution<std::int64_t> c(1, 50);
  for (int i = 0; i < 4; ++i) rays.push_back(Ray::primitive(c(rng), c(rng)));
  std::sort(rays.begin(), rays.end(), [](const Ray& r, const Ray& s) { return before(r, s); });
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
  std::vector<Lin> funcs;
  for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
    // Functional of f on the cone containing both endpoints.
    const Ray mid{rays[i].x + rays[i + 1].x, rays[i].y + rays[i + 1].y};
    funcs.push_back(f.funcs()[f.cone_of(mid.x, mid.y)]);
  }
  return PLFun::from_pieces(rays, funcs);
}

}  // namespace

TEST(PLFun, Generators) {
  EXPECT_EQ(a.at(3, 5), 3);
  EXPECT_EQ(b.at(3, 5), 5);
  EXPECT_EQ(a.rays(), (std::vector<Ray>{{1, 0}, {0, 1}}));
  EXPECT_EQ(a.funcs().size(), 1u);
}

TEST(PLFun, CombineExamples) {
  EXPECT_EQ(a.meet(b).at(2, 1), 1);
  EXPECT_EQ(a.diff(b).at(3, 1), 2);
  EXPECT_EQ(a.diff(b).at(1, 3), 0);
  const PLFun j = a.join(b);
  EXPECT_EQ(j.rays(), (std::vector<Ray>{{1, 0}, {1, 1}, {0, 1}}));
  EXPECT_EQ(j.funcs(), (std::vector<Lin>{{1, 0}, {0, 1}}));
  EXPECT_EQ(j.at(2, 1), 2);
  EXPECT_EQ(j.at(1, 2), 2);
}

TEST(PLFun, EvalExamples) {
  EXPECT_EQ((a + b).eval(q(1), q(1)), q(2));
  EXPECT_EQ((a - b).abs().eval(q(1), q(1)), q(0));
  const PLFun two = (a - b.scale(2)).pos().join((b - a.scale(2)).pos());
  EXPECT_EQ(two.eval(q(1), q(1)), q(0));
  EXPECT_EQ((a + b).eval(q(1, 2), q(1, 3)), q(5, 6));
  EXPECT_THROW(a.eval(q(-1), q(1)), std::domain_error);
}

TEST(PLFun, FromPiecesValidation) {
  EXPECT_THROW(PLFun::from_pieces({{1, 0}, {1, 1}, {0, 1}}, {{1, 0}, {1, 0}, {0, 1}}), std::invalid_argument);
  EXPECT_THROW(PLFun::from_pieces({{1, 0}, {2, 2}, {0, 1}}, {{1, 0}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(PLFun::from_pieces({{1, 0}, {0, 1}, {1, 1}}, {{1, 0}, {1, 0}}), std::invalid_argument);
  // Discontinuous at (1,1).
  EXPECT_THROW(PLFun::from_pieces({{1, 0}, {1, 1}, {0, 1}}, {{1, 0}, {0, 2}}), std::invalid_argument);
  const PLFun f = PLFun::from_pieces({{1, 0}, {1, 1}, {0, 1}}, {{1, 0}, {1, 0}});
  EXPECT_EQ(f, a);
}

TEST(PLFun, OverflowIsReported) {
  const PLFun big = a.scale(std::int64_t{1} << 62);
  EXPECT_THROW(big + big, std::overflow_error);
  EXPECT_THROW(big.scale(4), std::overflow_error);
}

TEST(PLFun, RandomTermsMatchPointwiseOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const PLTerm t = random_term(rng, 6);
    const PLFun f = evaluate(t);
    ASSERT_FALSE(PLFun::invalid(f.rays(), f.funcs())) << to_string(t);
    ASSERT_TRUE(f.is_canonical()) << to_string(t);
    for (const auto& r : f.rays()) ASSERT_EQ(f.at(r), term_at(t, r.x, r.y)) << to_string(t);
    for (int s = 0; s < 40; ++s) {
      const auto [x, y] = random_point(rng);
      ASSERT_EQ(f.at(x, y), term_at(t, x, y)) << to_string(t) << " at " << x << "," << y;
    }
    ASSERT_EQ(subdivided(rng, f), f);
  }
}

TEST(PLFun, LatticeGroupAxioms) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const PLFun x = random_pl(rng, 3), y = random_pl(rng, 3), z = random_pl(rng, 3);
    ASSERT_EQ((x + y) + z, x + (y + z));
    ASSERT_EQ(x + y, y + x);
    ASSERT_EQ(x - x, PLFun::zero());
    ASSERT_EQ(x.join(y).join(z), x.join(y.join(z)));
    ASSERT_EQ(x.meet(y).meet(z), x.meet(y.meet(z)));
    ASSERT_EQ(x.join(y), y.join(x));
    ASSERT_EQ(x.meet(y), y.meet(x));
    ASSERT_EQ(x.join(x.meet(y)), x);
    ASSERT_EQ(x.meet(x.join(y)), x);
    ASSERT_EQ(x.meet(y.join(z)), x.meet(y).join(x.meet(z)));
    ASSERT_EQ(x.join(y) + z, (x + z).join(y + z));
    ASSERT_EQ(x.meet(y) + z, (x + z).meet(y + z));
    if (x.leq(y)) {
      ASSERT_TRUE((x + z).leq(y + z));
    }
    ASSERT_EQ(x.leq(y), x.join(y) == y);
    ASSERT_EQ(x, x.pos() - x.negpart());
    ASSERT_EQ(x.abs(), x.pos() + x.negpart());
    ASSERT_EQ(x.join(y) + x.meet(y), x + y);
    // (a∖b)∧(b∖a) = 0 and a∖c ≤ (a∖b)+(b∖c).
    ASSERT_EQ(x.diff(y).meet(y.diff(x)), PLFun::zero());
    ASSERT_TRUE(x.diff(z).leq(x.diff(y) + y.diff(z)));
    ASSERT_EQ(x.diff(y), x - x.meet(y));
  }
}

TEST(PLFun, DifferenceIdentitiesOnDeepTerms) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 500; ++trial) {
    const PLFun x = random_pl(rng, 6), y = random_pl(rng, 6), z = random_pl(rng, 6);
    ASSERT_EQ(x.diff(y).meet(y.diff(x)), PLFun::zero());
    ASSERT_TRUE(x.diff(z).leq(x.diff(y) + y.diff(z)));
  }
}

TEST(IdealLeq, Examples) {
  EXPECT_TRUE(ideal_leq(a, a + b).holds);
  EXPECT_EQ(ideal_leq(a, a + b).bound, 1);
  const IdealLeq r = ideal_leq(a + b, a);
  EXPECT_FALSE(r.holds);
  ASSERT_TRUE(r.witness);
  EXPECT_EQ(*r.witness, (Ray{0, 1}));
  EXPECT_TRUE(ideal_eq(a.abs() + b.abs(), a + b));
  EXPECT_TRUE(ideal_eq(a - b, b - a));
  EXPECT_EQ(ideal_leq(a.scale(3), b + a).bound, 3);
  EXPECT_TRUE(ideal_leq(PLFun::zero(), PLFun::zero()).holds);
}

TEST(IdealLeq, SamplingOracle) {
  std::mt19937_64 rng(13);
  int holds = 0, fails = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const PLFun x = random_pl(rng, 4), y = random_pl(rng, 4);
    const IdealLeq r = ideal_leq(x, y);
    const PLFun ax = x.abs(), ay = y.abs();
    if (r.holds) {
      ++holds;
      for (int s = 0; s < 1000; ++s) {
        const auto [px, py] = random_point(rng);
        ASSERT_LE(ax.at(px, py), r.bound * ay.at(px, py));
      }
      if (r.bound > 1) {
        EXPECT_FALSE(ax.leq(ay.scale(r.bound - 1)));
      }
    } else {
      ++fails;
      ASSERT_TRUE(r.witness);
      EXPECT_EQ(ay.at(*r.witness), 0);
      EXPECT_GT(ax.at(*r.witness), 0);
    }
  }
  EXPECT_GT(holds, 20);
  EXPECT_GT(fails, 5);
}

TEST(IdealLeq, PrincipalIdealFormulas) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const PLFun x = random_positive(rng), y = random_positive(rng);
    // ⟨x⟩∨⟨y⟩ = ⟨x+y⟩, with x∨y as the independent generator of the join.
    ASSERT_TRUE(ideal_eq(x + y, x.join(y)));
    ASSERT_TRUE(ideal_leq(x, x + y).holds && ideal_leq(y, x + y).holds);
    // ⟨x⟩∩⟨y⟩ = ⟨x∧y⟩ through the universal property on random z.
    const PLFun m = x.meet(y);
    ASSERT_TRUE(ideal_leq(m, x).holds && ideal_leq(m, y).holds);
    for (int k = 0; k < 5; ++k) {
      const PLFun z = random_pl(rng, 3);
      if (ideal_leq(z, x).holds && ideal_leq(z, y).holds) {
        ASSERT_TRUE(ideal_leq(z, m).holds);
      }
    }
  }
}

TEST(Support, Examples) {
  EXPECT_TRUE(support_connected(a + b));
  EXPECT_TRUE(support_connected(a.meet(b)));
  const PLFun two = (a - b.scale(2)).pos().join((b - a.scale(2)).pos());
  EXPECT_FALSE(support_connected(two));
  EXPECT_EQ(support_components(two), 2u);
  EXPECT_TRUE(support_connected(PLFun::zero()));
  EXPECT_EQ(support_components(PLFun::zero()), 0u);
  EXPECT_EQ(support_components(a - b), 2u);
  EXPECT_EQ(support_components((a - b).pos()), 1u);
}

TEST(Support, ComponentsMatchSampledSigns) {
  // Sign runs along an angular sweep through every ray of f, f⁺ and f⁻ (the
  // last two contain the zero crossings) and eight points inside each cone.
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 300; ++trial) {
    const PLTerm t = random_term(rng, 5);
    const PLFun f = evaluate(t);
    const auto r = PLFun::merge_rays(PLFun::merge_rays(f.rays(), f.pos().rays()), f.negpart().rays());
    std::vector<Ray> sweep;
    for (std::size_t i = 0; i + 1 < r.size(); ++i)
      for (int s = 0; s < 8; ++s)
        sweep.push_back({r[i].x * (8 - s) + r[i + 1].x * s, r[i].y * (8 - s) + r[i + 1].y * s});
    sweep.push_back(r.back());
    std::size_t runs = 0;
    bool prev = false;
    for (const auto& p : sweep) {
      const bool nz = term_at(t, p.x, p.y) != 0;
      if (nz && !prev) ++runs;
      prev = nz;
    }
    ASSERT_EQ(support_components(f), runs) << to_string(t);
  }
}

TEST(Support, NoOrthogonalSplitOfAPlusB) {
  std::mt19937_64 rng(23);
  const PLFun apb = a + b;
  for (int trial = 0; trial < 500; ++trial) {
    const auto fam = orthogonal_family(rng);
    // Any split of the family into two nonempty groups gives g∧h = 0.
    const std::size_t cut = std::uniform_int_distribution<std::size_t>(1, fam.size() - 1)(rng);
    PLFun g, h;
    for (std::size_t i = 0; i < fam.size(); ++i) (i < cut ? g : h) = (i < cut ? g : h) + fam[i];
    ASSERT_EQ(g.meet(h), PLFun::zero());
    ASSERT_FALSE(g.is_zero() || h.is_zero());
    EXPECT_FALSE(ideal_eq(g + h, apb)) << g.to_string() << " | " << h.to_string();
  }
}

TEST(GLambda, Operations) {
  const std::size_t k = 2;
  const GLambdaElem c1{LexVec::basis(k, 1), PLFun::zero()};
  const GLambdaElem ga{LexVec::zero(k), a};
  const GLambdaElem gb{LexVec::zero(k), b};
  EXPECT_EQ(c1.join(ga), c1);
  EXPECT_EQ(ga.meet(gb), (GLambdaElem{LexVec::zero(k), a.meet(b)}));
  const GLambdaElem x{LexVec::basis(k, 0, -1), a - b};
  EXPECT_EQ(x.abs(), (GLambdaElem{LexVec::basis(k, 0), b - a}));
  EXPECT_EQ(ga.compare(gb), PartialOrder::incomparable);
  EXPECT_EQ(ga.compare(c1), PartialOrder::less);
  EXPECT_EQ(c1.compare(c1), PartialOrder::equal);
  EXPECT_THROW(c1 + (GLambdaElem{LexVec::zero(3), a}), std::invalid_argument);
}

TEST(GLambda, WayBelow) {
  const std::size_t k = 2;
  const GLambdaElem c0{LexVec::basis(k, 0), PLFun::zero()};
  const GLambdaElem c1{LexVec::basis(k, 1), PLFun::zero()};
  EXPECT_TRUE(way_below(c0, c1));
  EXPECT_FALSE(way_below(c1, c0));
  EXPECT_FALSE(way_below(c1, c1));
  EXPECT_TRUE(way_below(LexVec::basis(k, 0), LexVec::basis(k, 1)));
  EXPECT_FALSE(way_below(a, a + b));
  EXPECT_TRUE(way_below(PLFun::zero(), a));
  EXPECT_TRUE(way_below(GLambdaElem{LexVec::zero(k), a}, c0));
  EXPECT_FALSE(way_below(GLambdaElem{LexVec::zero(k), a}, GLambdaElem{LexVec::zero(k), a + b}));
  EXPECT_THROW(way_below(-c0, c1), std::invalid_argument);
}

TEST(GLambda, WayBelowMatchesBoundedMultiples) {
  // k·x ≤ y for k up to 64 decides ≪ on these small-coefficient inputs.
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<std::int64_t> coef(-2, 2);
  for (int trial = 0; trial < 400; ++trial) {
    auto gen = [&] {
      GLambdaElem e{LexVec::zero(3), random_positive(rng, 2)};
      for (auto& c : e.lex.c) c = coef(rng);
      if (e.lex.sign() < 0) e.lex = -e.lex;
      if (std::bernoulli_distribution(0.2)(rng)) e.pl = PLFun::zero();
      return e;
    };
    const GLambdaElem x = gen(), y = gen();
    bool all = true;
    for (std::int64_t m = 1; m <= 64 && all; ++m) all = GLambdaElem{x.lex.scale(m), x.pl.scale(m)}.leq(y);
    EXPECT_EQ(way_below(x, y), all) << x.to_string() << " << " << y.to_string();
  }
}

TEST(GLambda, IdealLeq) {
  const std::size_t k = 2;
  const GLambdaElem c0{LexVec::basis(k, 0), PLFun::zero()};
  const GLambdaElem c1{LexVec::basis(k, 1), PLFun::zero()};
  EXPECT_TRUE(ideal_leq(c0, c1));
  EXPECT_FALSE(ideal_leq(c1, c0));
  EXPECT_TRUE(ideal_leq(GLambdaElem{LexVec::zero(k), a}, c0));
  EXPECT_FALSE(ideal_leq(GLambdaElem{LexVec::zero(k), a + b}, GLambdaElem{LexVec::zero(k), a}));
  EXPECT_TRUE(ideal_leq(GLambdaElem{LexVec::zero(k), a}, GLambdaElem{LexVec::zero(k), a + b}));
}

TEST(GLambda, OrthogonalSetExamples) {
  const std::size_t k = 2;
  const Report r = orthogonal_set_check({{LexVec::zero(k), a.diff(b)}, {LexVec::zero(k), b.diff(a)}});
  EXPECT_TRUE(r.passed());
  EXPECT_TRUE(r.data["orthogonal"].get<bool>());
  const Report s = orthogonal_set_check({{LexVec::basis(k, 1), PLFun::zero()}, {LexVec::zero(k), a}});
  EXPECT_TRUE(s.passed());
  EXPECT_FALSE(s.data["orthogonal"].get<bool>());
  const Report t = orthogonal_set_check({{LexVec::basis(k, 1), PLFun::zero()}});
  EXPECT_TRUE(t.passed());
  EXPECT_TRUE(t.data["orthogonal"].get<bool>());
  EXPECT_FALSE(orthogonal_set_check({{LexVec::zero(k), PLFun::zero()}}).passed());
}

TEST(GLambda, OrthogonalCorpus) {
  std::mt19937_64 rng(31);
  int orthogonal_sets = 0;
  std::uniform_int_distribution<std::int64_t> coef(-2, 2);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<GLambdaElem> xs;
    const std::size_t n = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
    if (trial % 2 == 0)
      for (const auto& p : orthogonal_family(rng))
        if (xs.size() < n) xs.push_back({LexVec::zero(3), p});
    while (xs.size() < n) {
      GLambdaElem e{LexVec::zero(3), random_positive(rng, 3)};
      for (auto& c : e.lex.c) c = coef(rng);
      if (e.lex.sign() < 0) e.lex = -e.lex;
      xs.push_back(e);
    }
    const Report r = orthogonal_set_check(xs);
    ASSERT_TRUE(r.passed()) << r.text();
    orthogonal_sets += r.data["orthogonal"].get<bool>();
  }
  EXPECT_GT(orthogonal_sets, 30);
}

TEST(PLTermParser, Basics) {
  EXPECT_EQ(parse_pl("(diff a b)"), a.diff(b));
  EXPECT_EQ(parse_pl("(add a b)"), a + b);
  EXPECT_EQ(parse_pl("(join (pos (sub a (2 b))) (pos (sub b (2 a))))"),
            (a - b.scale(2)).pos().join((b - a.scale(2)).pos()));
  EXPECT_EQ(parse_pl(" ; comment\n (neg a) "), -a);
  EXPECT_EQ(parse_pl("0"), PLFun::zero());
  EXPECT_EQ(parse_pl("(meet a b a)"), a.meet(b));
}

TEST(PLTermParser, ErrorsCarryPositions) {
  auto where = [](const std::string& s) {
    try {
      parse_pl_term(s);
    } catch (const ParseError& e) {
      return std::pair{e.line(), e.column()};
    }
    return std::pair<std::size_t, std::size_t>{0, 0};
  };
  EXPECT_EQ(where("(add a c)"), (std::pair<std::size_t, std::size_t>{1, 8}));
  EXPECT_EQ(where("(foo a)"), (std::pair<std::size_t, std::size_t>{1, 2}));
  EXPECT_EQ(where("(diff a)"), (std::pair<std::size_t, std::size_t>{1, 2}));
  EXPECT_EQ(where("(add a\n  b"), (std::pair<std::size_t, std::size_t>{2, 4}));
  EXPECT_EQ(where("a b"), (std::pair<std::size_t, std::size_t>{1, 3}));
  EXPECT_EQ(where("5"), (std::pair<std::size_t, std::size_t>{1, 1}));
  EXPECT_EQ(where(")"), (std::pair<std::size_t, std::size_t>{1, 1}));
}

TEST(PLTermParser, RoundTrip) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 200; ++trial) {
    const PLTerm t = random_term(rng, 5);
    EXPECT_EQ(parse_pl_term(to_string(t)), t);
  }
}

TEST(PLTermParser, GLambdaElements) {
  const GLambdaElem e = parse_glambda("<1, -2> (add a b)");
  EXPECT_EQ(e.lex.c, (std::vector<std::int64_t>{1, -2}));
  EXPECT_EQ(e.pl, a + b);
  EXPECT_THROW(parse_glambda("(add a b)"), ParseError);
  EXPECT_THROW(parse_glambda("<1,> a"), ParseError);
  EXPECT_THROW(parse_glambda("<1> (add a"), ParseError);
}
