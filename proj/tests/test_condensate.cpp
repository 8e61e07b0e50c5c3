#include <random>

#include <gtest/gtest.h>

#include "latspec/condensate.hpp"
#include "test_support.hpp"

using namespace latspec;
using namespace latspec::testing;

namespace {

LatHom eps() { return LatHom(DLat::chain(3), DLat::chain(2), {0, 1, 1}); }
LatHom phi() { return LatHom(DLat::chain(4), DLat::chain(3), {0, 1, 1, 2}); }

const std::vector<std::string> kNames = {"i0", "i1", "i2", "i3", "i4", "i5"};

/// Random element with a random representative: deviation entries may
/// repeat φ(base).
CondElem random_raw(std::mt19937_64& rng, const Condensate& c) {
  std::uniform_int_distribution<std::size_t> pa(0, c.A().size() - 1), pb(0, c.B().size() - 1);
  std::bernoulli_distribution coin(0.4), redundant(0.3);
  const std::size_t base = pa(rng);
  std::map<std::string, std::size_t> dev;
  for (const auto& n : kNames) {
    if (coin(rng)) dev[n] = pb(rng);
    else if (redundant(rng)) dev[n] = c.phi()(base);
  }
  return c.raw(base, dev);
}

}  // namespace

TEST(IndexUniverse, Validation) {
  EXPECT_THROW(IndexUniverse::finite({"i", "j", "i"}), LatticeError);
  EXPECT_THROW(IndexUniverse::finite({""}), LatticeError);
  const auto u = IndexUniverse::finite({"i", "j"});
  EXPECT_TRUE(u.contains("i"));
  EXPECT_FALSE(u.contains("k"));
  EXPECT_TRUE(IndexUniverse::uncountable().contains("xi_7"));
  EXPECT_EQ(IndexUniverse::uncountable().cardinality_tag(), "aleph1");
  EXPECT_EQ(u.cardinality_tag(), "finite(2)");
}

TEST(Condensate, EpsilonFiniteUniverseOfSizeOne) {
  const auto c = Condensate::make(eps(), IndexUniverse::finite({"i"}));
  const auto all = c.enumerate();
  EXPECT_EQ(all.size(), 6u);
  EXPECT_THROW(c.elem(0, {{"j", 0}}), LatticeError);
}

TEST(Condensate, IdentityOnTwoChainSymbolic) {
  const auto c = Condensate::make(LatHom::identity(DLat::chain(2)), IndexUniverse::countable());
  EXPECT_EQ(c.bottom().base, 0u);
  EXPECT_TRUE(c.bottom().dev.empty());
  // (0, {i}) is 0 with the coordinate i flipped to 1.
  const CondElem flip = c.elem(0, {{"i", 1}});
  EXPECT_EQ(flip.dev.size(), 1u);
  EXPECT_TRUE(c.leq(c.bottom(), flip));
  EXPECT_THROW(c.enumerate(), LatticeError);
}

TEST(Condensate, EpsilonOperations) {
  const auto c = Condensate::make(eps(), IndexUniverse::uncountable());
  const std::size_t u = 1, one = 2;
  const CondElem s = c.elem(u, {{"i", 0}});
  EXPECT_EQ(s.dev.at("i"), 0u);
  EXPECT_EQ(c.join(s, c.bottom()), s);
  EXPECT_EQ(c.meet(s, c.elem(u)), s);
  EXPECT_EQ(c.join(c.elem(one), s), c.elem(one));
  EXPECT_TRUE(c.join(c.elem(one), s).dev.empty());
  EXPECT_TRUE(c.leq(c.bottom(), s));
  EXPECT_TRUE(c.leq(c.bottom(), c.top()));
  EXPECT_FALSE(c.leq(c.elem(u), s));
  EXPECT_TRUE(c.leq(s, c.elem(u)));
  // Normalization drops entries equal to φ(base).
  EXPECT_TRUE(c.elem(u, {{"i", 1}}).dev.empty());
  EXPECT_EQ(c.label(s), "(1, {i->0})");
}

TEST(Condensate, MixedCondensatesRejected) {
  const auto c1 = Condensate::make(eps(), IndexUniverse::countable());
  const auto c2 = Condensate::make(eps(), IndexUniverse::countable());
  EXPECT_THROW(c1.join(c1.bottom(), c2.bottom()), LatticeError);
  EXPECT_THROW(c1.leq(c1.bottom(), c2.bottom()), LatticeError);
  const Condensate copy = c1;
  EXPECT_NO_THROW(copy.join(c1.bottom(), copy.top()));
}

TEST(Condensate, StageSizes) {
  const auto ce = Condensate::make(eps(), IndexUniverse::uncountable());
  const auto cp = Condensate::make(phi(), IndexUniverse::uncountable());
  const std::size_t e_sizes[] = {3, 6, 12, 24}, p_sizes[] = {4, 12, 36, 108};
  for (std::size_t k = 0; k <= 3; ++k) {
    const std::vector<std::string> J(kNames.begin(), kNames.begin() + static_cast<long>(k));
    EXPECT_EQ(ce.stage(J).size(), e_sizes[k]);
    EXPECT_EQ(cp.stage(J).size(), p_sizes[k]);
  }
}

TEST(Condensate, FiniteStageIsomorphismBothKernels) {
  for (const auto& f : {eps(), phi()}) {
    const auto c = Condensate::make(f, IndexUniverse::uncountable());
    for (std::size_t k = 0; k <= 3; ++k) {
      const std::vector<std::string> J(kNames.begin(), kNames.begin() + static_cast<long>(k));
      const Report r = finite_stage_iso(c, J);
      EXPECT_TRUE(r.passed()) << r.text();
    }
  }
}

TEST(Condensate, FiniteUniverseIsFullProduct) {
  const auto c = Condensate::make(phi(), IndexUniverse::finite({"x", "y"}));
  const auto all = c.enumerate();
  ASSERT_EQ(all.size(), 4u * 3u * 3u);
  std::set<std::vector<std::size_t>> tuples;
  for (const auto& e : all) tuples.insert(stage_tuple(c, e, {"x", "y"}));
  // Every product tuple occurs exactly once.
  std::size_t n = 0;
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t x = 0; x < 3; ++x)
      for (std::size_t y = 0; y < 3; ++y) n += tuples.count({a, x, y});
  EXPECT_EQ(n, all.size());
}

TEST(Condensate, NormalizationIdempotentAndRepresentativeIndependent) {
  std::mt19937_64 rng(71);
  for (const auto& f : {eps(), phi()}) {
    const auto c = Condensate::make(f, IndexUniverse::countable());
    for (int trial = 0; trial < 500; ++trial) {
      const CondElem s = random_raw(rng, c), t = random_raw(rng, c);
      const CondElem ns = c.normalize(s), nt = c.normalize(t);
      ASSERT_EQ(c.normalize(ns), ns);
      ASSERT_TRUE(c.is_normalized(ns));
      for (const auto& n : kNames) ASSERT_EQ(c.value_at(s, n), c.value_at(ns, n));
      EXPECT_EQ(c.join(s, t), c.join(ns, nt));
      EXPECT_EQ(c.meet(s, t), c.meet(ns, nt));
      EXPECT_EQ(c.leq(s, t), c.leq(ns, nt));
      EXPECT_EQ(c.eq(s, t), ns == nt);
    }
  }
}

TEST(Condensate, LatticeLawsOnRandomTriples) {
  std::mt19937_64 rng(73);
  const auto c = Condensate::make(phi(), IndexUniverse::uncountable());
  for (int trial = 0; trial < 500; ++trial) {
    const CondElem x = c.normalize(random_raw(rng, c)), y = c.normalize(random_raw(rng, c)),
                   z = c.normalize(random_raw(rng, c));
    EXPECT_EQ(c.meet(x, c.join(y, z)), c.join(c.meet(x, y), c.meet(x, z)));
    EXPECT_EQ(c.join(x, c.meet(y, z)), c.meet(c.join(x, y), c.join(x, z)));
    EXPECT_EQ(c.join(x, c.meet(x, y)), x);
    EXPECT_EQ(c.leq(x, y), c.join(x, y) == y);
  }
}

TEST(AlmostConstantSurjection, Examples) {
  const auto src = Condensate::make(LatHom::identity(DLat::chain(4)), IndexUniverse::uncountable());
  const auto dst = Condensate::make(phi(), IndexUniverse::uncountable());
  EXPECT_EQ(almost_constant_surjection(src, dst, src.elem(2)), dst.elem(2));
  const CondElem y = almost_constant_surjection(src, dst, src.elem(2, {{"i", 3}}));
  EXPECT_EQ(y.base, 2u);
  EXPECT_EQ(y.dev, (std::map<std::string, std::size_t>{{"i", 2}}));
  // 2 ↦ φ(2) = 1 = φ(base), so the entry is dropped.
  EXPECT_TRUE(almost_constant_surjection(src, dst, src.elem(1, {{"i", 2}})).dev.empty());
}

TEST(AlmostConstantSurjection, SurjectiveHomOnStages) {
  const auto src = Condensate::make(LatHom::identity(DLat::chain(4)), IndexUniverse::uncountable());
  const auto dst = Condensate::make(phi(), IndexUniverse::uncountable());
  for (std::size_t k = 0; k <= 3; ++k) {
    const std::vector<std::string> J(kNames.begin(), kNames.begin() + static_cast<long>(k));
    const Report r = verify_almost_constant_surjection(src, dst, J);
    EXPECT_TRUE(r.passed()) << r.text();
    if (k == 1) {
      EXPECT_EQ(r.data["sources"], 16);
      EXPECT_EQ(r.data["targets"], 12);
    }
  }
}
