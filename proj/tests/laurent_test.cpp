#include <gtest/gtest.h>

#include "psym/laurent.hpp"
#include "support/random.hpp"

namespace psym {
namespace {

LaurentPoly mono(std::int64_t c, int r, int s, std::uint32_t p = 5) {
  return LaurentPoly::monomial(p, c, r, s);
}

TEST(Laurent, AddExamples) {
  EXPECT_TRUE((mono(1, 1, 0) + mono(-1, 1, 0)).is_zero());
  EXPECT_EQ((mono(1, 1, 0) + mono(1, 0, 0)) + (mono(1, 0, 1) + mono(-1, 0, 0)),
            mono(1, 1, 0) + mono(1, 0, 1));
  EXPECT_EQ(LaurentPoly(5) + mono(1, 0, -1), mono(1, 0, -1));
}

TEST(Laurent, MulExamples) {
  EXPECT_EQ(mono(1, 1, 0) * mono(1, 0, 1), mono(1, 1, 1));
  EXPECT_EQ((mono(1, 1, 0) + mono(1, 0, 0)) * (mono(1, 1, 0) - mono(1, 0, 0)),
            mono(1, 2, 0) - mono(1, 0, 0));
  EXPECT_EQ(mono(1, -1, 1) * mono(1, 1, -1), LaurentPoly::constant(5, 1));
}

TEST(Laurent, Rendering) {
  EXPECT_EQ(LaurentPoly(3).to_string(), "0");
  EXPECT_EQ(LaurentPoly::constant(3, 1).to_string(), "1");
  EXPECT_EQ((mono(2, 0, 0) + mono(1, 1, 0)).to_string(), "2 + a");
  EXPECT_EQ(mono(3, -1, 2).to_string(), "3*a^-1*b^2");
  EXPECT_EQ((mono(1, 5, 0) + mono(1, 0, 1)).to_string(), "a^5 + b");
}

TEST(Laurent, OrderedByBetaThenAlpha) {
  auto u = mono(1, 3, 0) + mono(1, -2, 1) + mono(1, 0, 0) + mono(1, 1, 1);
  auto terms = u.terms();
  ASSERT_EQ(terms.size(), 4u);
  EXPECT_EQ(terms[0].s, 0);
  EXPECT_EQ(terms[0].r, 0);
  EXPECT_EQ(terms[1].r, 3);
  EXPECT_EQ(terms[2].r, -2);
  EXPECT_EQ(terms[3].r, 1);
  EXPECT_EQ(u.leading_term().r, 1);
  EXPECT_EQ(u.leading_term().s, 1);
}

TEST(Laurent, FromTermsCombinesAndDropsZeros) {
  auto u = LaurentPoly::from_terms(3, {{0, 0, 1}, {1, 0, 2}, {0, 0, 2}, {1, 0, 2}, {2, 2, 3}});
  EXPECT_EQ(u, mono(1, 1, 0, 3));
}

TEST(Laurent, MismatchedPrimesThrow) {
  EXPECT_THROW(mono(1, 0, 0, 3) + mono(1, 0, 0, 5), ConfigError);
  EXPECT_THROW(mono(1, 0, 0, 3) * mono(1, 0, 0, 5), ConfigError);
}

TEST(Laurent, DivisionByMonomial) {
  auto u = mono(2, 1, 0) + mono(3, 0, 1);
  EXPECT_EQ(u.divided_by(mono(2, 1, 1)) * mono(2, 1, 1), u);
  EXPECT_THROW(u.divided_by(u), DomainError);
  EXPECT_THROW(u.divided_by(LaurentPoly(5)), DomainError);
}

TEST(Laurent, RingAxiomsOnRandomSamples) {
  testing::Random rnd(testing::suite_seed());
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    for (int k = 0; k < 200; ++k) {
      auto u = rnd.poly(p, 4), v = rnd.poly(p, 4), w = rnd.poly(p, 4);
      EXPECT_EQ((u * v) * w, u * (v * w));
      EXPECT_EQ(u * v, v * u);
      EXPECT_EQ(u * (v + w), u * v + u * w);
      EXPECT_EQ(u + v, v + u);
      EXPECT_TRUE((u - u).is_zero());
      for (const auto* x : {&u, &v, &w}) EXPECT_TRUE(x->is_canonical());
      EXPECT_TRUE((u * v + w).is_canonical());
    }
  }
}

TEST(Laurent, MonomialProductAddsExponents) {
  testing::Random rnd(testing::suite_seed());
  for (int k = 0; k < 100; ++k) {
    int r0 = static_cast<int>(rnd.uniform(-9, 9)), s0 = static_cast<int>(rnd.uniform(-9, 9));
    int r1 = static_cast<int>(rnd.uniform(-9, 9)), s1 = static_cast<int>(rnd.uniform(-9, 9));
    std::uint32_t c0 = rnd.nonzero_residue(7), c1 = rnd.nonzero_residue(7);
    auto prod = mono(c0, r0, s0, 7) * mono(c1, r1, s1, 7);
    ASSERT_EQ(prod.size(), 1u);
    EXPECT_EQ(prod.terms()[0].r, r0 + r1);
    EXPECT_EQ(prod.terms()[0].s, s0 + s1);
    EXPECT_EQ(prod.terms()[0].c, c0 * c1 % 7);
  }
}

TEST(Laurent, Power) {
  auto u = mono(1, 1, 0, 3) + mono(1, 0, 0, 3);
  // Frobenius in characteristic 3: (a + 1)^3 = a^3 + 1
  EXPECT_EQ(u.pow(3), mono(1, 3, 0, 3) + mono(1, 0, 0, 3));
  EXPECT_EQ(u.pow(0), LaurentPoly::constant(3, 1));
}

}  // namespace
}  // namespace psym
