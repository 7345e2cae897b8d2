#include <gtest/gtest.h>

#include "psym/algebra.hpp"
#include "support/random.hpp"
#include "support/rewriting_oracle.hpp"

namespace psym {
namespace {

LaurentPoly lp(std::uint32_t p, std::int64_t c, int r = 0, int s = 0) {
  return LaurentPoly::monomial(p, c, r, s);
}

AlgebraElem mono(std::uint32_t p, std::uint32_t i, std::uint32_t j, std::int64_t c = 1, int r = 0,
                 int s = 0) {
  return AlgebraElem::monomial(lp(p, c, r, s), i, j);
}

TEST(Algebra, YTimesX) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u})
    EXPECT_EQ(alg_mul(AlgebraElem::y(p), AlgebraElem::x(p)), mono(p, 1, 1) + mono(p, 0, 1));
}

TEST(Algebra, DefiningRelationsAtThree) {
  EXPECT_EQ(alg_mul(mono(3, 2, 0), mono(3, 1, 0)), mono(3, 1, 0) + AlgebraElem::scalar(lp(3, 1, 1)));
  EXPECT_EQ(alg_mul(mono(3, 0, 2), mono(3, 0, 1)), AlgebraElem::scalar(lp(3, 1, 0, 1)));
}

// Frozen from the word-rewriting oracle: (x^2 y)(x^2 y^2) = (2x^2 + (a+2)x + 2a) b at p = 3.
TEST(Algebra, MixedProductAtThree) {
  AlgebraElem expected = AlgebraElem::zero(3);
  expected.add_term(2, 0, lp(3, 2, 0, 1));
  expected.add_term(1, 0, lp(3, 1, 1, 1) + lp(3, 2, 0, 1));
  expected.add_term(0, 0, lp(3, 2, 1, 1));
  auto lhs = mono(3, 2, 1), rhs = mono(3, 2, 2);
  EXPECT_EQ(testing::rewrite_mul(lhs, rhs), expected);
  EXPECT_EQ(alg_mul(lhs, rhs), expected);
}

TEST(Algebra, PowerExamples) {
  EXPECT_EQ(alg_pow(mono(3, 1, 1), 3), AlgebraElem::scalar(lp(3, 1, 1, 1)));
  testing::Random rnd(testing::suite_seed());
  auto z = rnd.element(5);
  EXPECT_EQ(alg_pow(z, 1), z);
  EXPECT_EQ(alg_pow(z, 0), AlgebraElem::one(5));
  EXPECT_EQ(alg_pow(AlgebraElem::x(2), 2), AlgebraElem::x(2) + AlgebraElem::scalar(lp(2, 1, 1)));
}

TEST(Algebra, SigmaExamples) {
  EXPECT_EQ(sigma_fx(AlgebraElem::x(5)), AlgebraElem::x(5) + AlgebraElem::one(5));
  auto c = AlgebraElem::scalar(lp(5, 3, 2, -1));
  EXPECT_EQ(sigma_fx(c), c);
  EXPECT_EQ(sigma_fx(mono(3, 2, 0)), mono(3, 2, 0) + mono(3, 1, 0, 2) + AlgebraElem::one(3));
  EXPECT_THROW(sigma_fx(AlgebraElem::y(3)), DomainError);
}

TEST(Algebra, SigmaIsConjugationByY) {
  testing::Random rnd(testing::suite_seed());
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int k = 0; k < 30; ++k) {
      auto lambda = rnd.fx_element(p);
      // y lambda = sigma(lambda) y
      EXPECT_EQ(AlgebraElem::y(p) * lambda, sigma_fx(lambda) * AlgebraElem::y(p));
    }
  }
}

TEST(Algebra, IsScalarExamples) {
  EXPECT_TRUE(is_scalar(AlgebraElem::scalar(lp(5, 1, 1, -1))));
  EXPECT_FALSE(is_scalar(AlgebraElem::x(5)));
  EXPECT_TRUE(is_scalar(alg_pow(AlgebraElem::y(3), 3)));
  EXPECT_TRUE(is_scalar(AlgebraElem::zero(3)));
}

TEST(Algebra, RejectsUnsupportedPrimes) {
  EXPECT_THROW(AlgebraElem::zero(17), ConfigError);
  EXPECT_THROW(AlgebraElem::zero(4), ConfigError);
  EXPECT_THROW(AlgebraElem::x(3) * AlgebraElem::x(5), ConfigError);
  EXPECT_THROW(mono(3, 3, 0), ArgumentError);
}

TEST(Algebra, RelationConformance) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    auto x = AlgebraElem::x(p), y = AlgebraElem::y(p);
    EXPECT_EQ(alg_pow(x, p), x + AlgebraElem::scalar(lp(p, 1, 1))) << p;
    EXPECT_EQ(alg_pow(y, p), AlgebraElem::scalar(lp(p, 1, 0, 1))) << p;
    EXPECT_EQ(y * x, x * y + y) << p;
  }
}

TEST(Algebra, MonomialPowerLaw) {
  for (std::uint32_t p : {2u, 3u, 5u})
    for (std::uint32_t i = 0; i < p; ++i)
      for (std::uint32_t j = 1; j < p; ++j)
        EXPECT_EQ(alg_pow(mono(p, i, j), p), AlgebraElem::scalar(lp(p, 1, i, j)))
            << "p=" << p << " i=" << i << " j=" << j;
}

TEST(Algebra, AssociativityAndDistributivity) {
  testing::Random rnd(testing::suite_seed());
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int k = 0; k < 40; ++k) {
      auto a = rnd.element(p), b = rnd.element(p), c = rnd.element(p);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ((a + b) * c, a * c + b * c);
      auto f = rnd.poly(p);
      EXPECT_EQ(a.scaled(f) * b, (a * b).scaled(f));
      EXPECT_EQ(a * b.scaled(f), (a * b).scaled(f));
    }
  }
}

TEST(Algebra, AgreesWithRewritingOracle) {
  testing::Random rnd(testing::suite_seed());
  for (std::uint32_t p : {2u, 3u, 5u}) {
    for (int k = 0; k < 60; ++k) {
      auto a = rnd.monomial_element(p), b = rnd.monomial_element(p);
      EXPECT_EQ(a * b, testing::rewrite_mul(a, b));
    }
    for (int k = 0; k < 10; ++k) {
      auto a = rnd.element(p), b = rnd.element(p);
      EXPECT_EQ(a * b, testing::rewrite_mul(a, b));
    }
  }
}

TEST(Algebra, IdentityAndZero) {
  testing::Random rnd(testing::suite_seed());
  auto z = rnd.element(7);
  EXPECT_EQ(z * AlgebraElem::one(7), z);
  EXPECT_EQ(AlgebraElem::one(7) * z, z);
  EXPECT_TRUE((z * AlgebraElem::zero(7)).is_zero());
  EXPECT_EQ(AlgebraElem::one(7).coeff(0, 0), LaurentPoly::constant(7, 1));
}

}  // namespace
}  // namespace psym
