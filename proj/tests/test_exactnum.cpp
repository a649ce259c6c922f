#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wzkit/exactnum.hpp"

using wzkit::BigInt;
using wzkit::BigRational;
using wzkit::binomial;

namespace {

BigRational q(long n, long d = 1) { return BigRational(BigInt(n), BigInt(d)); }

TEST(BigRationalTest, ArithmeticIsExactAndCanonical) {
  EXPECT_EQ(q(1, 3) + q(4, 3), q(5, 3));
  const BigRational half = q(2, 4) * q(1);
  EXPECT_EQ(half.num(), 1);
  EXPECT_EQ(half.den(), 2);
  const BigRational zero = q(-12, 35) - q(-12, 35);
  EXPECT_TRUE(zero.is_zero());
  EXPECT_EQ(zero.num(), 0);
  EXPECT_EQ(zero.den(), 1);
  EXPECT_EQ(zero.fraction_str(), "0/1");
}

TEST(BigRationalTest, DenominatorIsPositive) {
  const BigRational r = q(3, -6);
  EXPECT_EQ(r.num(), -1);
  EXPECT_EQ(r.den(), 2);
  EXPECT_EQ(r.str(), "-1/2");
}

TEST(BigRationalTest, DivisionByZeroThrows) {
  EXPECT_THROW(q(1) / q(0), wzkit::DivisionByZero);
  EXPECT_THROW(BigRational(BigInt(1), BigInt(0)), wzkit::DivisionByZero);
}

TEST(BigRationalTest, ParseAndPrint) {
  EXPECT_EQ(BigRational::parse("-6/4"), q(-3, 2));
  EXPECT_EQ(BigRational::parse("7"), q(7));
  EXPECT_EQ(q(7).fraction_str(), "7/1");
  EXPECT_THROW(BigRational::parse("x/2"), wzkit::UnsupportedArgument);
}

TEST(BigRationalTest, NegativePowers) {
  EXPECT_EQ(wzkit::pow(q(2, 3), -2), q(9, 4));
  EXPECT_EQ(wzkit::pow(q(4), 0), q(1));
  EXPECT_THROW(wzkit::pow(q(0), -1), wzkit::DivisionByZero);
}

TEST(BigRationalTest, CanonicalFormIsRepresentationIndependent) {
  auto rng = wzkit::testing::make_rng();
  std::uniform_int_distribution<long> d(-50, 50);
  for (int i = 0; i < 500; ++i) {
    const long a = d(rng);
    long b = d(rng);
    if (b == 0) b = 1;
    const long s = std::abs(d(rng)) + 1;
    const BigRational x = q(a, b);
    const BigRational y = q(a * s, b * s);
    EXPECT_EQ(x, y);
    EXPECT_EQ(x.str(), y.str());
    EXPECT_EQ(x + y - y, x);
  }
}

TEST(BinomialTest, Examples) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(3, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  EXPECT_EQ(binomial(4, -1), 0);
  EXPECT_THROW(binomial(-1, 0), wzkit::UnsupportedArgument);
}

TEST(BinomialTest, RowSumsArePowersOfTwo) {
  for (std::int64_t a = 0; a <= 20; ++a) {
    BigInt sum = 0;
    for (std::int64_t b = 0; b <= a; ++b) sum += binomial(a, b);
    EXPECT_EQ(sum, wzkit::pow_int(2, a)) << "a=" << a;
  }
}

TEST(BinomialTest, PascalRecurrenceForAllIntegerBottoms) {
  for (std::int64_t a = 1; a <= 40; ++a) {
    for (std::int64_t b = -3; b <= a + 3; ++b) {
      EXPECT_EQ(binomial(a, b), binomial(a - 1, b - 1) + binomial(a - 1, b)) << a << "," << b;
    }
  }
}

TEST(BinomialTest, AgreesWithFactorialsInsideAndBeyondTheCache) {
  for (std::int64_t a : {0, 1, 17, 300, 601, 2047, 2048, 2100}) {
    for (std::int64_t b : {std::int64_t{0}, a / 3, a / 2, a}) {
      EXPECT_EQ(binomial(a, b), wzkit::testing::binom_by_factorials(a, b)) << a << "," << b;
    }
  }
}

TEST(IntegerDivisionTest, FloorAndCeil) {
  EXPECT_EQ(wzkit::floor_div(-1, 2), -1);
  EXPECT_EQ(wzkit::floor_div(3, 2), 1);
  EXPECT_EQ(wzkit::ceil_div(-1, 2), 0);
  EXPECT_EQ(wzkit::ceil_div(3, 2), 2);
  EXPECT_EQ(wzkit::floor_div(-4, 2), -2);
}

}  // namespace
