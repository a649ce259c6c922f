#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wzkit/ratfun.hpp"

namespace {

using wzkit::BigRational;
using wzkit::MultiPoly;
using wzkit::Point;
using wzkit::RationalFunction;
using wzkit::Var;

const MultiPoly n = MultiPoly::var(Var::n);
const MultiPoly k = MultiPoly::var(Var::k);
const MultiPoly m = MultiPoly::var(Var::m);

RationalFunction rf(MultiPoly a, MultiPoly b = MultiPoly(1)) {
  return RationalFunction(std::move(a), std::move(b));
}

// R(n,k) of the corrected first certificate.
RationalFunction cert1() { return rf(k * (2 * k + 1), (n + 1 - k) * (n + 2)); }

TEST(PolyEvalTest, Examples) {
  EXPECT_EQ((n * n + n).eval({{Var::n, 3}}), BigRational(12));
  EXPECT_EQ((2 * n + 3).eval({{Var::n, -1}}), BigRational(1));
  EXPECT_EQ((k * (2 * k + 1)).eval({{Var::k, 0}}), BigRational(0));
}

TEST(PolyEvalTest, MissingAssignmentThrows) {
  EXPECT_THROW((n + k).eval({{Var::n, 1}}), wzkit::MissingVariable);
}

TEST(PolyTest, ShiftExpandsBinomially) {
  EXPECT_EQ((k * k).shifted(Var::k, 2), k * k + 4 * k + 4);
  EXPECT_EQ((n * k).shifted(Var::k, -1), n * k - n);
}

TEST(PolyTest, ExactDivision) {
  const MultiPoly a = (n + 1 - k) * (n + 2) * (2 * k + 1);
  auto q = a.divide_exact(n + 2);
  ASSERT_TRUE(q.has_value());
  EXPECT_EQ(*q, (n + 1 - k) * (2 * k + 1));
  EXPECT_FALSE(a.divide_exact(n + 3).has_value());
}

TEST(PolyTest, UnivariateGcd) {
  auto g = wzkit::univariate_gcd((n + 1) * (n + 2), (n + 2) * (n + 5), Var::n);
  ASSERT_TRUE(g.has_value());
  EXPECT_EQ(*g, n + 2);
  EXPECT_FALSE(wzkit::univariate_gcd(n + k, n, Var::n).has_value());
}

TEST(RationalFunctionTest, ArithmeticExamples) {
  EXPECT_TRUE(rf_equal(rf(1, n + 2) * rf(n + 2), RationalFunction(1)));
  EXPECT_TRUE((cert1() - cert1()).is_zero());

  const RationalFunction sum = rf(2 * (n + k + 2), n + 2) + cert1();
  const RationalFunction expected = rf(2 * (n + 1) * (n + 2) - k, (n + 1 - k) * (n + 2));
  EXPECT_TRUE(rf_equal(sum, expected));
  // Second route: pointwise values at integer points off the poles.
  for (std::int64_t nv = 0; nv < 8; ++nv) {
    for (std::int64_t kv = -3; kv < 8; ++kv) {
      if (nv + 1 - kv == 0) continue;
      const Point p{{Var::n, nv}, {Var::k, kv}};
      const BigRational direct =
          BigRational(2 * (nv + kv + 2)) / BigRational(nv + 2) +
          BigRational(kv * (2 * kv + 1)) / BigRational((nv + 1 - kv) * (nv + 2));
      EXPECT_EQ(sum.eval(p), direct) << p.str();
    }
  }
}

TEST(RationalFunctionTest, EqualityExamples) {
  EXPECT_TRUE(rf_equal(rf(MultiPoly::var(Var::l), MultiPoly::var(Var::l)), RationalFunction(1)));
  EXPECT_FALSE(rf_equal(rf(1, n + 1 - k), rf(1, n - k)));
  const RationalFunction printed_sum = rf(2 * (n + k + 2), n + 2) + cert1();
  EXPECT_FALSE(rf_equal(rf(-k * (2 * n + 3), (n + 1 - k) * (n + 2)), printed_sum));
}

TEST(RationalFunctionTest, DivisionByZeroFunctionThrows) {
  EXPECT_THROW(cert1() / RationalFunction(0), wzkit::DivisionByZero);
  EXPECT_THROW(rf(n, MultiPoly()), wzkit::DivisionByZero);
}

TEST(RationalFunctionTest, NormalizationKeepsPositiveIntegerDenominator) {
  const RationalFunction r = rf(BigRational(1) / BigRational(2) * n, -(BigRational(3) * k + 1));
  EXPECT_GT(r.den().leading_coeff().sign(), 0);
  for (const auto& [e, c] : r.num().terms()) EXPECT_TRUE(c.is_integer());
  for (const auto& [e, c] : r.den().terms()) EXPECT_TRUE(c.is_integer());
}

TEST(RationalFunctionTest, ShiftExamples) {
  EXPECT_TRUE(rf_equal(cert1().shifted(Var::k, 1), rf((k + 1) * (2 * k + 3), (n - k) * (n + 2))));
  EXPECT_TRUE(rf_equal(rf(1, n + 1).shifted(Var::n, 1), rf(1, n + 2)));
  EXPECT_TRUE(rf_equal(cert1().shifted(Var::k, 1).shifted(Var::k, 1), cert1().shifted(Var::k, 2)));
}

TEST(RationalFunctionTest, PolesRaise) {
  EXPECT_THROW(cert1().eval({{Var::n, 2}, {Var::k, 3}}), wzkit::PoleError);
}

// Random small polynomials for ring-law and shift properties.
MultiPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> deg(0, 2);
  std::uniform_int_distribution<int> count(1, 4);
  MultiPoly p;
  const int terms = count(rng);
  for (int t = 0; t < terms; ++t) {
    p += n.pow(deg(rng)) * k.pow(deg(rng)) * m.pow(deg(rng) / 2) * BigRational(coeff(rng));
  }
  return p;
}

TEST(SymalgPropertyTest, RingLaws) {
  auto rng = wzkit::testing::make_rng(11);
  for (int i = 0; i < 200; ++i) {
    const MultiPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    EXPECT_EQ((p + q) * r, p * r + q * r);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
  }
}

TEST(SymalgPropertyTest, ShiftDistributesOverArithmetic) {
  auto rng = wzkit::testing::make_rng(12);
  for (int i = 0; i < 100; ++i) {
    MultiPoly d1 = random_poly(rng), d2 = random_poly(rng);
    if (d1.is_zero()) d1 = MultiPoly(1);
    if (d2.is_zero()) d2 = MultiPoly(1);
    const RationalFunction f = rf(random_poly(rng), d1);
    const RationalFunction g = rf(random_poly(rng), d2);
    EXPECT_TRUE(rf_equal((f + g).shifted(Var::k, 1), f.shifted(Var::k, 1) + g.shifted(Var::k, 1)));
    EXPECT_TRUE(rf_equal((f * g).shifted(Var::n, -2), f.shifted(Var::n, -2) * g.shifted(Var::n, -2)));
  }
}

TEST(SymalgPropertyTest, EqualityImpliesPointwiseEquality) {
  auto rng = wzkit::testing::make_rng(13);
  std::uniform_int_distribution<std::int64_t> pt(-6, 6);
  for (int i = 0; i < 60; ++i) {
    MultiPoly d = random_poly(rng);
    if (d.is_zero()) d = MultiPoly(1);
    const MultiPoly c = random_poly(rng) + 1;
    const RationalFunction f = rf(random_poly(rng), d);
    // Same function, different representation.
    const RationalFunction g = rf(f.num() * c, f.den() * c);
    ASSERT_TRUE(rf_equal(f, g));
    int checked = 0;
    for (int s = 0; s < 200 && checked < 50; ++s) {
      const Point p{{Var::n, pt(rng)}, {Var::k, pt(rng)}, {Var::m, pt(rng)}};
      if (f.den().eval(p).is_zero() || g.den().eval(p).is_zero()) continue;
      EXPECT_EQ(f.eval(p), g.eval(p));
      ++checked;
    }
  }
}

TEST(SymalgPropertyTest, EqualityIsAnEquivalence) {
  auto rng = wzkit::testing::make_rng(14);
  for (int i = 0; i < 50; ++i) {
    MultiPoly d = random_poly(rng);
    if (d.is_zero()) d = MultiPoly(1);
    const RationalFunction f = rf(random_poly(rng), d);
    const RationalFunction g = f * rf(n + 3, n + 3);
    const RationalFunction h = g * rf(k - 1, k - 1);
    EXPECT_TRUE(rf_equal(f, f));
    EXPECT_TRUE(rf_equal(f, g) && rf_equal(g, f));
    EXPECT_TRUE(rf_equal(f, h));
  }
}

}  // namespace
