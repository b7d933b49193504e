#include <gtest/gtest.h>

#include <random>

#include "primdec/error.hpp"
#include "primdec/groebner.hpp"
#include "test_util.hpp"

using namespace primdec;
using namespace primdec::testing;

TEST(NormalForm, Examples) {
  auto r = ring_of({"x", "y"});
  GroebnerBasis g = buchberger(I(r, {"x"}));
  EXPECT_EQ(normal_form(V(r, {"x*y+y^2"}), g), V(r, {"y^2"}));
  GroebnerBasis e = buchberger(Ideal(r, 1));
  EXPECT_EQ(normal_form(V(r, {"x+1"}), e), V(r, {"x+1"}));
  GroebnerBasis one = buchberger(I(r, {"1"}));
  EXPECT_TRUE(normal_form(V(r, {"x^5+3*y"}), one).is_zero());
}

TEST(NormalForm, IdempotentRandomized) {
  std::mt19937 rng(17);
  auto r = ring_of({"x", "y", "z"});
  for (int k = 0; k < 30; ++k) {
    Ideal a = Submodule::ideal(r, {random_polynomial(r, rng, 3, 3), random_polynomial(r, rng, 3, 3)});
    GroebnerBasis g = buchberger(a);
    FreeElement f(r, {random_polynomial(r, rng, 5, 4)});
    FreeElement nf = normal_form(f, g);
    EXPECT_EQ(normal_form(nf, g), nf);
    // f - NF(f) lies in the ideal.
    EXPECT_TRUE(normal_form(f - nf, g).is_zero());
  }
}

TEST(Buchberger, LexExample) {
  auto r = make_ring({"x", "y"}, MonomialOrder::lex());
  GroebnerBasis g = buchberger(I(r, {"x*y-1", "y^2-1"}));
  ASSERT_EQ(g.elements().size(), 2u);
  EXPECT_EQ(g.elements()[0], V(r, {"y^2-1"}));
  EXPECT_EQ(g.elements()[1], V(r, {"x-y"}));
}

TEST(Buchberger, UnitAndZero) {
  auto r = ring_of({"x", "y"});
  GroebnerBasis g = buchberger(I(r, {"x", "x+1"}));
  ASSERT_EQ(g.elements().size(), 1u);
  EXPECT_EQ(g.elements()[0], V(r, {"1"}));
  EXPECT_TRUE(g.is_whole_module());
  EXPECT_TRUE(buchberger(I(r, {"0"})).elements().empty());
}

TEST(Buchberger, RankMismatch) {
  auto r = ring_of({"x", "y"});
  Submodule m(r, 2);
  EXPECT_THROW(m.add(V(r, {"x"})), RankMismatch);
}

TEST(Buchberger, ReducedBasisPropertiesRandomized) {
  std::mt19937 rng(23);
  auto r = ring_of({"x", "y", "z"});
  for (int k = 0; k < 30; ++k) {
    Ideal a = Submodule::ideal(r, {random_polynomial(r, rng, 3, 3), random_polynomial(r, rng, 3, 2),
                                   random_polynomial(r, rng, 2, 3)});
    GroebnerBasis g = buchberger(a);
    // Every generator reduces to zero and every S-polynomial is covered.
    for (const auto& v : a.gens()) EXPECT_TRUE(normal_form(v, g).is_zero());
    const auto& els = g.elements();
    for (std::size_t i = 0; i < els.size(); ++i) {
      LeadingTerm li = leading_term(els[i], g.extension());
      EXPECT_EQ(li.coeff, 1);
      for (std::size_t j = 0; j < els.size(); ++j) {
        if (i == j) continue;
        LeadingTerm lj = leading_term(els[j], g.extension());
        for (const auto& t : els[j][0].terms()) EXPECT_FALSE(t.mono.divisible_by(li.mono));
        if (j < i) EXPECT_LT(r->compare(lj.mono, li.mono), 0);
      }
    }
    // Generator order does not change the reduced basis.
    std::vector<FreeElement> rev(a.gens().rbegin(), a.gens().rend());
    EXPECT_EQ(canonical(Submodule(r, 1, rev)).gens(), canonical(a).gens());
  }
}

TEST(Syzygies, Examples) {
  auto r = ring_of({"x", "y"});
  Submodule s = syzygies(I(r, {"x", "y"}));
  EXPECT_TRUE(same_submodule(s, M(r, 2, {{"y", "-x"}})));
  Submodule one = syzygies(I(r, {"x"}));
  EXPECT_EQ(one.ncols(), 0u);
  EXPECT_EQ(one.rank(), 1u);
  Submodule z = syzygies(I(r, {"x", "0"}));
  EXPECT_TRUE(same_submodule(z, M(r, 2, {{"0", "1"}})));
}

TEST(Syzygies, AreRelationsRandomized) {
  std::mt19937 rng(29);
  auto r = ring_of({"x", "y", "z"});
  for (int k = 0; k < 20; ++k) {
    Submodule a = M(r, 2, {});
    for (int g = 0; g < 3; ++g)
      a.add(FreeElement(r, {random_polynomial(r, rng, 2, 2), random_polynomial(r, rng, 2, 2)}));
    Submodule s = syzygies(a);
    Submodule prod = multiply(a, s);
    for (const auto& v : prod.gens()) EXPECT_TRUE(v.is_zero());
  }
}

TEST(Lift, Examples) {
  auto r = ring_of({"x", "y"});
  Submodule t = lift(I(r, {"x", "y"}), I(r, {"x^2+y"}));
  ASSERT_EQ(t.ncols(), 1u);
  EXPECT_EQ(multiply(I(r, {"x", "y"}), t).gen(0), V(r, {"x^2+y"}));
  Submodule t0 = lift(I(r, {"x"}), I(r, {"0"}));
  EXPECT_TRUE(t0.gen(0).is_zero());
  try {
    lift(I(r, {"x"}), I(r, {"x", "y"}));
    FAIL() << "expected NotMember";
  } catch (const NotMember& e) {
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(Lift, ReconstructsRandomized) {
  std::mt19937 rng(31);
  auto r = ring_of({"x", "y", "z"});
  for (int k = 0; k < 20; ++k) {
    Ideal a = Submodule::ideal(r, {random_polynomial(r, rng, 2, 2), random_polynomial(r, rng, 2, 2)});
    Polynomial c0 = random_polynomial(r, rng, 2, 2), c1 = random_polynomial(r, rng, 2, 2);
    Polynomial b = c0 * a.gen(0)[0] + c1 * a.gen(1)[0];
    Submodule t = lift(a, Submodule::ideal(r, {b}));
    EXPECT_EQ(multiply(a, t).gen(0)[0], b);
  }
}

TEST(Modulo, Examples) {
  auto r = ring_of({"x", "y"});
  EXPECT_TRUE(same_submodule(modulo_kernel(I(r, {"x"}), I(r, {"x^2"})), I(r, {"x"})));
  EXPECT_TRUE(same_submodule(modulo_kernel(I(r, {"x"}), Ideal(r, 1)), Ideal(r, 1)));
  EXPECT_TRUE(same_submodule(modulo_kernel(I(r, {"1"}), I(r, {"x", "y"})), I(r, {"x", "y"})));
}

TEST(Intersect, Examples) {
  auto r = ring_of({"x", "y", "z", "w"});
  EXPECT_TRUE(same_submodule(intersect(I(r, {"x", "y"}), I(r, {"z", "w"})),
                             I(r, {"x*z", "x*w", "y*z", "y*w"})));
  EXPECT_TRUE(same_submodule(intersect(I(r, {"x"}), I(r, {"1"})), I(r, {"x"})));
  EXPECT_TRUE(same_submodule(intersect(I(r, {"x"}), Ideal(r, 1)), Ideal(r, 1)));
}

TEST(Intersect, ContainedInBothRandomized) {
  std::mt19937 rng(37);
  auto r = ring_of({"x", "y", "z"});
  for (int k = 0; k < 20; ++k) {
    Ideal a = random_monomial_ideal(r, rng, 3, 3);
    Ideal b = random_monomial_ideal(r, rng, 3, 3);
    Submodule c = intersect(a, b);
    EXPECT_TRUE(is_sub(c, a));
    EXPECT_TRUE(is_sub(c, b));
    EXPECT_TRUE(is_sub(product(a, b), c));
  }
}

TEST(Quotient, Examples) {
  auto r = ring_of({"x", "y"});
  EXPECT_TRUE(same_submodule(quotient(I(r, {"x^2", "x*y"}), I(r, {"x"})), I(r, {"x", "y"})));
  EXPECT_TRUE(same_submodule(quotient(I(r, {"x^2", "x*y"}), I(r, {"y"})), I(r, {"x"})));
  EXPECT_TRUE(same_submodule(quotient(I(r, {"x"}), I(r, {"1"})), I(r, {"x"})));
  EXPECT_TRUE(same_submodule(quotient(I(r, {"x"}), I(r, {"0"})), I(r, {"1"})));
}

TEST(Quotient, ModuleAnnihilator) {
  auto r = ring_of({"x", "y"});
  // F/<(x,0),(0,y)> has annihilator <x*y>.
  EXPECT_TRUE(same_submodule(annihilator(M(r, 2, {{"x", "0"}, {"0", "y"}})), I(r, {"x*y"})));
}

TEST(Saturate, Examples) {
  auto r = ring_of({"x", "y"});
  SaturationResult s = saturate(I(r, {"x^2", "x*y"}), I(r, {"x", "y"}));
  EXPECT_TRUE(same_submodule(s.module, I(r, {"x"})));
  EXPECT_EQ(s.exponent, 1);
  SaturationResult t = saturate(I(r, {"x^2", "x*y"}), I(r, {"x"}));
  EXPECT_TRUE(same_submodule(t.module, I(r, {"1"})));
  EXPECT_EQ(t.exponent, 2);
  SaturationResult u = saturate(I(r, {"x"}), I(r, {"y"}));
  EXPECT_TRUE(same_submodule(u.module, I(r, {"x"})));
  EXPECT_EQ(u.exponent, 0);
  SaturationResult v = saturate(I(r, {"x^2", "x*y"}), I(r, {"1"}));
  EXPECT_TRUE(same_submodule(v.module, I(r, {"x^2", "x*y"})));
  EXPECT_EQ(v.exponent, 0);
}

TEST(Saturate, RandomFixedPoint) {
  auto r = ring_of({"x", "y", "z"});
  std::mt19937 rng(41);
  for (int t = 0; t < 30; ++t) {
    Ideal a = I(r, {});
    a.add(FreeElement(r, {random_polynomial(r, rng, 3, 3)}));
    a.add(FreeElement(r, {random_polynomial(r, rng, 2, 3)}));
    Ideal j = I(r, {});
    j.add(FreeElement(r, {random_polynomial(r, rng, 2, 2)}));
    SaturationResult s = saturate(a, j);
    EXPECT_EQ(saturate(s.module, j).exponent, 0);
    // J * (A : J) lies in A.
    Ideal q = quotient_by_ideal(a, j);
    for (const auto& g : q.gens()) EXPECT_TRUE(is_sub(Submodule(r, 1, {g.scaled(j.entry(0, 0))}), a));
  }
}

TEST(Eliminate, TwistedCurve) {
  auto r = ring_of({"t", "x", "y", "z"});
  int vars[] = {0};
  Ideal e = eliminate(I(r, {"x-t^3", "y-t^4", "z-t^5"}), vars);
  EXPECT_TRUE(is_sub(I(r, {"y*z-x^3"}), e));
  for (const auto& g : e.gens()) EXPECT_EQ(g[0].degree_in(0), 0);
  EXPECT_FALSE(e.gens().empty());
}

TEST(KrullDim, Examples) {
  auto r = ring_of({"x", "y", "z"});
  EXPECT_EQ(krull_dim(I(r, {"x", "y"})), 1);
  EXPECT_EQ(krull_dim(I(r, {"x*y", "x*z"})), 2);
  EXPECT_EQ(krull_dim(I(r, {"1"})), -1);
  EXPECT_EQ(krull_dim(Ideal(r, 1)), 3);
  EXPECT_EQ(krull_dim(M(r, 2, {{"x", "0"}})), 3);
  EXPECT_EQ(krull_dim(M(r, 2, {{"x", "0"}, {"0", "y"}})), 2);
  EXPECT_EQ(codim(I(r, {"x", "y"})), 2);
}

TEST(IsSub, Examples) {
  auto r = ring_of({"x", "y"});
  EXPECT_TRUE(is_sub(I(r, {"x^2"}), I(r, {"x"})));
  EXPECT_FALSE(is_sub(I(r, {"x"}), I(r, {"x^2"})));
  EXPECT_TRUE(is_sub(Ideal(r, 1), I(r, {"x"})));
}

TEST(PruneGenerators, DropsRedundant) {
  auto r = ring_of({"x", "y"});
  Submodule p = prune_generators(I(r, {"x", "x^2", "y", "x+y"}));
  EXPECT_EQ(p.ncols(), 2u);
  EXPECT_TRUE(same_submodule(p, I(r, {"x", "y"})));
}

TEST(Module, PositionOverTermBasis) {
  auto r = ring_of({"x", "y"});
  Submodule m = M(r, 2, {{"x", "y"}, {"y", "x"}});
  Submodule c = canonical(m);
  for (const auto& v : m.gens()) EXPECT_TRUE(normal_form(v, buchberger(m)).is_zero());
  EXPECT_TRUE(same_submodule(c, m));
  EXPECT_FALSE(same_submodule(m, M(r, 2, {{"x", "y"}})));
}
