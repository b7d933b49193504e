#include <gtest/gtest.h>

#include <random>

#include "primdec/groebner.hpp"
#include "primdec/homology.hpp"
#include "primdec/verify.hpp"
#include "test_util.hpp"

using namespace primdec;
using namespace primdec::testing;

namespace {

// Every column of maps[i+1] is sent to zero by maps[i].
void expect_complex(const Resolution& res) {
  for (std::size_t i = 0; i + 1 < res.maps.size(); ++i) {
    const Submodule& f = res.maps[i];
    for (const auto& col : res.maps[i + 1].gens()) {
      FreeElement image(f.ring(), f.rank());
      for (std::size_t k = 0; k < col.rank(); ++k)
        if (!col[k].is_zero()) image = image + f.gens()[k].scaled(col[k]);
      EXPECT_TRUE(image.is_zero()) << "composition " << i << " is not zero";
    }
  }
}

Submodule hull_oracle(const Ideal& i) {
  DecompositionResult d = monomial_primdec_oracle(i);
  int top = d.components.front().prime.codim;
  Submodule acc = Submodule::free_module(i.ring(), 1);
  for (const auto& c : d.components)
    if (c.prime.codim == top) acc = intersect(acc, c.primary);
  return acc;
}

}  // namespace

TEST(Resolution, KoszulShapeForMaximalIdeal) {
  auto r = ring_of({"x", "y"});
  Resolution res = free_resolution(I(r, {"x", "y"}), 2);
  ASSERT_GE(res.length(), 2);
  EXPECT_EQ(res.rank(0), 1u);
  EXPECT_EQ(res.rank(1), 2u);
  EXPECT_EQ(res.rank(2), 1u);
  expect_complex(res);
}

TEST(Resolution, PrincipalIdealStopsAfterOneStep) {
  auto r = ring_of({"x"});
  Resolution res = free_resolution(I(r, {"x^2"}), 3);
  EXPECT_EQ(res.maps[0].gens().size(), 1u);
  for (std::size_t i = 1; i < res.maps.size(); ++i)
    for (const auto& g : res.maps[i].gens()) EXPECT_TRUE(g.is_zero());
}

TEST(Resolution, ZeroModule) {
  auto r = ring_of({"x", "y"});
  Resolution res = free_resolution(Submodule(r, 2), 2);
  for (const auto& m : res.maps)
    for (const auto& g : m.gens()) EXPECT_TRUE(g.is_zero());
}

TEST(Resolution, RandomIdealsGiveComplexes) {
  auto r = ring_of({"x", "y", "z"});
  std::mt19937 rng(7);
  for (int t = 0; t < 10; ++t) expect_complex(free_resolution(random_monomial_ideal(r, rng, 4, 3), 3));
}

TEST(Ext, TopExtOfResidueField) {
  auto r = ring_of({"x", "y"});
  Ideal m = I(r, {"x", "y"});
  ExtPresentation e = ext_module(2, m);
  EXPECT_FALSE(e.is_zero());
  EXPECT_EQ(ext_annihilator(2, m), m);
}

TEST(Ext, VanishesBelowGrade) {
  auto r = ring_of({"x", "y"});
  EXPECT_TRUE(ext_module(1, I(r, {"x", "y"})).is_zero());
  EXPECT_TRUE(ext_module(0, I(r, {"x", "y"})).is_zero());
}

TEST(Ext, HomOfFreeModule) {
  auto r = ring_of({"x", "y"});
  ExtPresentation e = ext_module(0, Submodule(r, 2));
  EXPECT_FALSE(e.is_zero());
  EXPECT_EQ(krull_dim(ext_annihilator(0, Submodule(r, 2))), 2);
  EXPECT_TRUE(canonical(ext_annihilator(0, Submodule(r, 2))).gens().empty());
}

TEST(Ext, RejectsNegativeIndex) {
  auto r = ring_of({"x"});
  EXPECT_THROW(ext_module(-1, I(r, {"x"})), InvalidArgument);
}

TEST(CanonMap, MaximalIdealIsItsOwnHull) {
  auto r = ring_of({"x", "y"});
  EXPECT_EQ(canon_map(I(r, {"x", "y"})).kernel_preimage, I(r, {"x", "y"}));
}

TEST(CanonMap, StripsEmbeddedComponent) {
  auto r = ring_of({"x", "y"});
  EXPECT_EQ(canon_map(I(r, {"x^2", "x*y"})).kernel_preimage, I(r, {"x"}));
}

TEST(CanonMap, EquidimensionalIntersection) {
  auto r = ring_of({"x", "y", "z", "w"});
  Ideal i = intersect(I(r, {"x", "y"}), I(r, {"z", "w"}));
  EXPECT_EQ(canon_map(i).kernel_preimage, i);
}

TEST(CanonMap, RejectsUnitModule) {
  auto r = ring_of({"x", "y"});
  EXPECT_THROW(canon_map(I(r, {"1"})), InvalidArgument);
}

TEST(Hull, Examples) {
  auto r = ring_of({"x", "y", "z"});
  EXPECT_EQ(equidim_hull(I(r, {"x^2", "x*y"})), I(r, {"x"}));
  Ideal q = I(r, {"x^2", "x*y", "y^3"});
  EXPECT_EQ(equidim_hull(q), q);
  Ideal i = I(r, {"x^2*y", "x*z^2", "y^2*z"});
  EXPECT_EQ(equidim_hull(i), hull_oracle(i));
}

TEST(Hull, MatchesMonomialOracle) {
  auto r = ring_of({"x", "y", "z"});
  std::mt19937 rng(11);
  for (int t = 0; t < 15; ++t) {
    Ideal i = random_monomial_ideal(r, rng, 4, 3);
    EXPECT_EQ(equidim_hull(i), hull_oracle(i)) << i.to_string();
  }
}

TEST(RemComp, Examples) {
  auto r = ring_of({"x", "y"});
  EXPECT_EQ(rem_comp(I(r, {"x^2", "x*y"}), 1), I(r, {"x"}));
  EXPECT_EQ(rem_comp(I(r, {"x", "y"}), 0), I(r, {"x", "y"}));
  EXPECT_EQ(rem_comp(I(r, {"x"}), 1), I(r, {"x"}));
  EXPECT_EQ(rem_comp(I(r, {"x^2", "x*y"}), 1), equidim_hull(I(r, {"x^2", "x*y"})));
}

TEST(AssPrimCodim, Examples) {
  auto r = ring_of({"x", "y"});
  Ideal m = I(r, {"x^2", "x*y"});
  EXPECT_EQ(radical_equidim(ass_prim_codim(m, 1)), I(r, {"x"}));
  EXPECT_EQ(radical_equidim(ass_prim_codim(m, 2)), I(r, {"x", "y"}));
  EXPECT_EQ(ass_prim_codim(I(r, {"x"}), 2), I(r, {"1"}));
}

TEST(InterAssPrim, Examples) {
  auto r = ring_of({"x", "y"});
  Ideal m = I(r, {"x^2", "x*y"});
  EXPECT_EQ(inter_ass_prim(m, 2), I(r, {"x", "y"}));
  EXPECT_EQ(inter_ass_prim(m, 1), I(r, {"x"}));
  EXPECT_EQ(inter_ass_prim(I(r, {"x"}), 2), I(r, {"1"}));
}
