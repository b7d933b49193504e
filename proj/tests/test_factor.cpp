#include <gtest/gtest.h>

#include <random>

#include "primdec/factor.hpp"
#include "test_util.hpp"

using namespace primdec;
using namespace primdec::testing;

namespace {

Polynomial expand(const std::vector<Factor>& fs, const RingPtr& r) {
  Polynomial acc = Polynomial::constant(r, Rational(1));
  for (const auto& f : fs)
    for (int k = 0; k < f.multiplicity; ++k) acc = acc * f.factor;
  return acc;
}

// f equals the product of its factors up to a nonzero constant.
void expect_product(const Polynomial& f, const std::vector<Factor>& fs) {
  Polynomial p = expand(fs, f.ring());
  ASSERT_FALSE(p.is_zero());
  Rational ratio = f.leading_coeff() / p.leading_coeff();
  EXPECT_EQ(f, p.scaled(ratio)) << f.to_string();
}

}  // namespace

TEST(UnivariateFactor, Examples) {
  auto r = ring_of({"x"});
  auto fs = univariate_factor(P(r, "x^2-1"));
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].multiplicity, 1);
  EXPECT_EQ(fs[1].multiplicity, 1);
  expect_product(P(r, "x^2-1"), fs);

  EXPECT_EQ(univariate_factor(P(r, "x^2+1")).size(), 1u);

  fs = univariate_factor(P(r, "x^4-2*x^2+1"));
  ASSERT_EQ(fs.size(), 2u);
  EXPECT_EQ(fs[0].multiplicity, 2);
  EXPECT_EQ(fs[1].multiplicity, 2);
}

TEST(UnivariateFactor, RationalCoefficients) {
  auto r = ring_of({"x"});
  Polynomial f = P(r, "1/2*x^3 - 1/2*x");
  auto fs = univariate_factor(f);
  EXPECT_EQ(fs.size(), 3u);
  expect_product(f, fs);
}

TEST(UnivariateFactor, SwinnertonDyerStyleIrreducible) {
  // x^4 - 10x^2 + 1 splits modulo every prime but is irreducible over Q.
  auto r = ring_of({"x"});
  EXPECT_EQ(univariate_factor(P(r, "x^4-10*x^2+1")).size(), 1u);
}

TEST(UnivariateFactor, RandomProducts) {
  auto r = ring_of({"x"});
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> c(-4, 4);
  for (int t = 0; t < 30; ++t) {
    Polynomial f = Polynomial::constant(r, Rational(1));
    for (int k = 0; k < 3; ++k) {
      Polynomial g = P(r, "x^2") + P(r, "x").scaled(Rational(c(rng))) + Polynomial::constant(r, Rational(c(rng) | 1));
      f = f * g;
    }
    auto fs = univariate_factor(f);
    expect_product(f, fs);
    int degree = 0;
    for (const auto& x : fs) degree += static_cast<int>(x.factor.total_degree()) * x.multiplicity;
    EXPECT_EQ(degree, 6);
  }
}

TEST(Factor, Multivariate) {
  auto r = ring_of({"x", "y", "z"});
  Polynomial f = P(r, "(x^2-y)*(x+y+z)^2*(y*z-1)");
  auto fs = factor(f);
  ASSERT_EQ(fs.size(), 3u);
  expect_product(f, fs);
  EXPECT_EQ(factor(P(r, "x^2+y^2+z^2")).size(), 1u);
  EXPECT_EQ(factor(P(r, "x*y-z^2")).size(), 1u);
}

TEST(Factor, MonomialContent) {
  auto r = ring_of({"x", "y"});
  Polynomial f = P(r, "x^3*y-x*y^3");
  auto fs = factor(f);
  EXPECT_EQ(fs.size(), 4u);
  expect_product(f, fs);
}

TEST(Factor, ZeroAndConstants) {
  auto r = ring_of({"x"});
  EXPECT_THROW(factor(Polynomial(r)), InvalidArgument);
  EXPECT_TRUE(factor(Polynomial::constant(r, Rational(3))).empty());
}

TEST(SquarefreePart, Examples) {
  auto r = ring_of({"x", "y"});
  EXPECT_EQ(squarefree_part(P(r, "x^2*y^2")), P(r, "x*y"));
  EXPECT_EQ(squarefree_part(P(r, "(x-1)^3*(x+y)")), P(r, "(x-1)*(x+y)"));
}
