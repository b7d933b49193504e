#include <gtest/gtest.h>

#include <random>

#include "primdec/groebner.hpp"
#include "primdec/verify.hpp"
#include "test_util.hpp"

using namespace primdec;
using namespace primdec::testing;

namespace {

Component component(const Ideal& q, const Ideal& p, bool embedded) {
  return Component{q, make_prime(p), embedded, q, 0, {}};
}

}  // namespace

TEST(MonomialOracle, WorkedExample) {
  auto r = ring_of({"x", "y"});
  DecompositionResult d = monomial_primdec_oracle(I(r, {"x^2", "x*y"}));
  ASSERT_EQ(d.components.size(), 2u);
  EXPECT_EQ(d.components[0].primary, I(r, {"x"}));
  EXPECT_FALSE(d.components[0].embedded);
  EXPECT_EQ(d.components[1].prime.ideal, I(r, {"x", "y"}));
  EXPECT_TRUE(d.components[1].embedded);
}

TEST(MonomialOracle, ThreeMonomials) {
  auto r = ring_of({"x", "y", "z"});
  DecompositionResult d = monomial_primdec_oracle(I(r, {"x^2*y", "x*z^2", "y^2*z"}));
  ASSERT_EQ(d.components.size(), 4u);
  auto at = [&](const std::vector<std::string>& p) {
    for (const auto& c : d.components)
      if (c.prime.ideal == I(r, p)) return c.primary;
    return I(r, {"1"});
  };
  EXPECT_EQ(at({"x", "y"}), I(r, {"x", "y^2"}));
  EXPECT_EQ(at({"x", "z"}), I(r, {"x^2", "z"}));
  EXPECT_EQ(at({"y", "z"}), I(r, {"y", "z^2"}));
  EXPECT_TRUE(d.components[3].embedded);
}

TEST(MonomialOracle, RejectsBadInput) {
  auto r = ring_of({"x", "y"});
  EXPECT_THROW(monomial_primdec_oracle(I(r, {"x+y"})), InvalidArgument);
  EXPECT_THROW(monomial_primdec_oracle(I(r, {"1"})), InvalidArgument);
}

TEST(MonomialOracle, IntersectionRecoversInput) {
  auto r = ring_of({"x", "y", "z", "w"});
  std::mt19937 rng(3);
  for (int t = 0; t < 25; ++t) {
    Ideal i = random_monomial_ideal(r, rng, 5, 4);
    DecompositionResult d = monomial_primdec_oracle(i);
    Submodule acc = Submodule::free_module(r, 1);
    for (const auto& c : d.components) acc = intersect(acc, c.primary);
    EXPECT_EQ(acc, i) << i.to_string();
  }
}

TEST(Validate, AcceptsReferenceDecomposition) {
  auto r = ring_of({"x", "y"});
  DecompositionResult d;
  d.components = {component(I(r, {"x"}), I(r, {"x"}), false),
                  component(I(r, {"x^2", "x*y", "y^2"}), I(r, {"x", "y"}), true)};
  EXPECT_TRUE(validate_decomposition(I(r, {"x^2", "x*y"}), d).ok());
}

TEST(Validate, DetectsEachFailure) {
  auto r = ring_of({"x", "y"});
  Ideal m = I(r, {"x^2", "x*y"});

  DecompositionResult wrong_intersection;
  wrong_intersection.components = {component(I(r, {"x"}), I(r, {"x"}), false),
                                   component(I(r, {"x", "y"}), I(r, {"x", "y"}), true)};
  ValidationReport rep = validate_decomposition(m, wrong_intersection);
  EXPECT_FALSE(rep.intersection_ok);
  EXPECT_FALSE(rep.irredundant_ok);

  DecompositionResult not_primary;
  not_primary.components = {component(I(r, {"x^2", "x*y"}), I(r, {"x"}), false)};
  rep = validate_decomposition(m, not_primary);
  EXPECT_TRUE(rep.intersection_ok);
  EXPECT_FALSE(rep.primaries_ok());

  DecompositionResult wrong_prime;
  wrong_prime.components = {component(I(r, {"x"}), I(r, {"y"}), false),
                            component(I(r, {"x^2", "y"}), I(r, {"x", "y"}), true)};
  rep = validate_decomposition(m, wrong_prime);
  EXPECT_FALSE(rep.primaries[0].ok);
  EXPECT_TRUE(rep.primaries[1].ok);

  DecompositionResult repeated;
  repeated.components = {component(I(r, {"x"}), I(r, {"x"}), false),
                         component(I(r, {"x^2", "x*y", "y^2"}), I(r, {"x", "y"}), true),
                         component(I(r, {"x^2", "y"}), I(r, {"x", "y"}), true)};
  rep = validate_decomposition(m, repeated);
  EXPECT_FALSE(rep.primes_distinct_ok);
}

TEST(MembershipOracle, Examples) {
  auto r = ring_of({"x", "y"});
  EXPECT_TRUE(membership_oracle(V(r, {"x^2"}), I(r, {"x"}), 2));
  for (int b = 0; b < 5; ++b) EXPECT_FALSE(membership_oracle(V(r, {"y"}), I(r, {"x"}), b));
  EXPECT_TRUE(membership_oracle(V(r, {"x^3-1"}), I(r, {"x-1"}), 3));
  EXPECT_FALSE(membership_oracle(V(r, {"x^3-1"}), I(r, {"x-1"}), 2));
}

TEST(MembershipOracle, AgreesWithNormalForm) {
  auto r = ring_of({"x", "y", "z"});
  std::mt19937 rng(17);
  for (int t = 0; t < 30; ++t) {
    Ideal a = I(r, {});
    for (int k = 0; k < 2; ++k) a.add(FreeElement(r, {random_polynomial(r, rng, 3, 2)}));
    Polynomial f = random_polynomial(r, rng, 2, 2) * a.gens()[0][0] + random_polynomial(r, rng, 2, 2) * a.gens()[1][0];
    FreeElement v(r, {f});
    EXPECT_TRUE(membership_oracle(v, a, 4));
    EXPECT_TRUE(normal_form(v, buchberger(a)).is_zero());
  }
}

TEST(MembershipOracle, RankMismatch) {
  auto r = ring_of({"x"});
  EXPECT_THROW(membership_oracle(V(r, {"x", "1"}), I(r, {"x"}), 1), RankMismatch);
}
