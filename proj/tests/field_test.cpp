#include <gtest/gtest.h>

#include <boost/multiprecision/cpp_int.hpp>

#include "psym/field.hpp"
#include "support/random.hpp"

namespace psym {
namespace {

TEST(Field, InverseExamples) {
  EXPECT_EQ(fp_inv(PrimeField(5)(1)).value(), 1u);
  EXPECT_EQ(fp_inv(PrimeField(5)(2)).value(), 3u);
  EXPECT_EQ(fp_inv(PrimeField(7)(4)).value(), 2u);
}

TEST(Field, InverseOfZeroThrows) {
  EXPECT_THROW(fp_inv(PrimeField(5)(0)), DivisionByZero);
  EXPECT_THROW(PrimeField(7)(14).inv(), DivisionByZero);
}

TEST(Field, RejectsNonPrimes) {
  for (std::uint64_t n : {0, 1, 4, 9, 15, 21, 25})
    EXPECT_THROW(PrimeField{n}, ConfigError) << n;
  EXPECT_NO_THROW(PrimeField{13});
}

TEST(Field, MixedModuliThrow) {
  EXPECT_THROW(PrimeField(5)(1) + PrimeField(7)(1), ConfigError);
  EXPECT_THROW(PrimeField(5)(1) * PrimeField(3)(1), ConfigError);
  EXPECT_FALSE(PrimeField(5)(1) == PrimeField(7)(1));
}

TEST(Field, CanonicalRepresentative) {
  PrimeField f(7);
  EXPECT_EQ(f(-1).value(), 6u);
  EXPECT_EQ(f(-14).value(), 0u);
  EXPECT_EQ(f(100).value(), 2u);
  EXPECT_EQ((-f(0)).value(), 0u);
}

TEST(Field, InverseIsInvolutionAndInverse) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    PrimeField f(p);
    for (std::uint32_t a = 1; a < p; ++a) {
      EXPECT_EQ(fp_inv(fp_inv(f(a))), f(a));
      EXPECT_EQ(f(a) * fp_inv(f(a)), f.one());
    }
  }
}

TEST(Field, PowerSumExamples) {
  EXPECT_EQ(power_sum(5, 0).value(), 0u);
  EXPECT_EQ(power_sum(5, 2).value(), 0u);
  EXPECT_EQ(power_sum(5, 4).value(), 4u);
}

TEST(Field, PowerSumVanishesBelowPMinusOne) {
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u}) {
    for (std::uint32_t l = 1; l + 2 <= p; ++l) EXPECT_EQ(power_sum(p, l).value(), 0u) << p << " " << l;
    EXPECT_EQ(power_sum(p, p - 1).value(), p - 1) << p;
  }
}

TEST(Field, AgreesWithBigIntegerArithmetic) {
  using boost::multiprecision::cpp_int;
  testing::Random rnd(testing::suite_seed());
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 2147483647u}) {
    PrimeField f(p);
    for (int k = 0; k < 200; ++k) {
      std::int64_t a = rnd.uniform(-(1LL << 40), 1LL << 40);
      std::int64_t b = rnd.uniform(-(1LL << 40), 1LL << 40);
      auto reduce = [p](cpp_int v) {
        cpp_int r = v % p;
        if (r < 0) r += p;
        return static_cast<std::uint32_t>(r);
      };
      EXPECT_EQ((f(a) + f(b)).value(), reduce(cpp_int(a) + b));
      EXPECT_EQ((f(a) - f(b)).value(), reduce(cpp_int(a) - b));
      EXPECT_EQ((f(a) * f(b)).value(), reduce(cpp_int(a) * b));
    }
  }
}

}  // namespace
}  // namespace psym
