#include <gtest/gtest.h>

#include "test_support.hpp"
#include "wzkit/wzengine.hpp"

namespace {

using wzkit::BigRational;
using wzkit::Factored;
using wzkit::HyperTerm;
using wzkit::LinearForm;
using wzkit::MultiPoly;
using wzkit::Point;
using wzkit::RationalFunction;
using wzkit::Var;
using wzkit::WZProblem;

const LinearForm n(Var::n);
const LinearForm k(Var::k);
const LinearForm m(Var::m);
const MultiPoly N = MultiPoly::var(Var::n);
const MultiPoly K = MultiPoly::var(Var::k);

HyperTerm f1(bool printed_sign) {
  return HyperTerm()
      .times_binomial(n + k + 1, 2 * k + 1)
      .times_power(2, 2 * k)
      .times_sign(printed_sign ? k + n + 1 : k + n)
      .times_prefactor(Factored::from_linear(n + 1, -1));
}
HyperTerm f2() {
  return HyperTerm()
      .times_binomial(n + k + 1, 2 * k)
      .times_power(2, 2 * k)
      .times_sign(k + n + 1)
      .times_prefactor(Factored::from_linear(2 * n + 3, -1));
}
HyperTerm f3() {
  return HyperTerm().times_binomial(n + k + 1, m).times_power(2, m - 1).times_sign(m + k + n + 1);
}

RationalFunction r1() { return RationalFunction(K * (2 * K + 1), (N + 1 - K) * (N + 2)); }
RationalFunction r2() { return RationalFunction(2 * K * (2 * K - 1), (N + 2 - K) * (2 * N + 5)); }

WZProblem thm1_corrected(bool printed_sign = false) {
  return {"thm1_wz", f1(printed_sign), Var::n, Var::k, {-1, 1}, r1(), ""};
}
WZProblem thm1_literal() {
  return {"thm1_literal_wz", f1(true), Var::n, Var::k, {1, 1}, -r1(), "printed recurrence with plus sign"};
}
WZProblem thm2() { return {"thm2_wz", f2(), Var::n, Var::k, {-1, 1}, r2(), ""}; }
WZProblem eq7() { return {"thm3_recurrence", f3(), Var::n, Var::k, {-1, 1}, RationalFunction(1), ""}; }

// Independent value of the thm2 summand via factorials.
mpq_class f2_oracle(std::int64_t nv, std::int64_t kv) {
  return mpq_class(wzkit::testing::binom_by_factorials(nv + kv + 1, 2 * kv)) *
         wzkit::testing::signed_power(kv + nv + 1, 2, 2 * kv) / (2 * nv + 3);
}

TEST(VerifyCertificateTest, PrintedSecondPairPasses) {
  const auto c = wzkit::verify_certificate(thm2());
  EXPECT_TRUE(c.pass);
  EXPECT_TRUE(c.residual.is_zero());
  EXPECT_TRUE(c.lower_boundary_zero);
  ASSERT_TRUE(c.upper_support.has_value());
  EXPECT_EQ(c.upper_support->extreme({{Var::n, 3}}), 4);
}

TEST(VerifyCertificateTest, CorrectedFirstPairPassesForBothSigns) {
  EXPECT_TRUE(wzkit::verify_certificate(thm1_corrected(false)).pass);
  EXPECT_TRUE(wzkit::verify_certificate(thm1_corrected(true)).pass);
}

TEST(VerifyCertificateTest, LiteralFirstPairFailsWithKnownResidual) {
  const auto c = wzkit::verify_certificate(thm1_literal());
  EXPECT_FALSE(c.pass);
  EXPECT_FALSE(c.residual.is_zero());
  // Clearing (n+2)(n+1-k): left side -k(2n+3), right side 2(n+1)(n+2) - k.
  const RationalFunction cleared = c.residual * RationalFunction((N + 2) * (N + 1 - K));
  const MultiPoly mismatch = -(K * (2 * N + 3)) - (2 * (N + 1) * (N + 2) - K);
  EXPECT_TRUE(rf_equal(cleared, RationalFunction(mismatch)));
}

TEST(VerifyCertificateTest, ThreeVariableRecurrenceWithUnitCertificate) {
  const auto c = wzkit::verify_certificate(eq7());
  EXPECT_TRUE(c.pass);
  EXPECT_FALSE(c.upper_support.has_value());
}

TEST(VerifyCertificateTest, PassIffResidualIsZero) {
  for (const auto& p : {thm1_corrected(), thm1_literal(), thm2(), eq7()}) {
    const auto c = wzkit::verify_certificate(p);
    EXPECT_EQ(c.pass, c.residual.is_zero()) << p.id;
  }
}

TEST(TelescopeTest, SecondTheoremValues) {
  const HyperTerm g = wzkit::absorb_rational(f2(), r2());
  EXPECT_EQ(f2().eval({{Var::n, 2}, {Var::k, 1}}), BigRational(24, 7));
  EXPECT_EQ(f2().eval({{Var::n, 1}, {Var::k, 1}}), BigRational(-12, 5));
  EXPECT_EQ(g.eval({{Var::n, 1}, {Var::k, 2}}), BigRational(192, 35));
  EXPECT_EQ(g.eval({{Var::n, 1}, {Var::k, 1}}), BigRational(-12, 35));
  EXPECT_EQ(g.eval({{Var::n, 1}, {Var::k, 0}}), BigRational(0));
  const auto t = wzkit::telescope_prefix_check(thm2(), 1);
  EXPECT_TRUE(t.pass);
  EXPECT_GE(t.last_kappa, 1);
}

TEST(TelescopeTest, FirstTheoremSmallPrefix) {
  const auto p = thm1_corrected(true);
  EXPECT_EQ(p.summand.eval({{Var::n, 2}, {Var::k, 0}}), BigRational(-1));
  EXPECT_EQ(p.summand.eval({{Var::n, 3}, {Var::k, 0}}), BigRational(1));
  EXPECT_EQ(p.summand.eval({{Var::n, 2}, {Var::k, 1}}), BigRational(16, 3));
  EXPECT_EQ(r1().eval({{Var::n, 2}, {Var::k, 1}}), BigRational(3, 8));
  const auto t = wzkit::telescope_prefix_check(p, 2);
  EXPECT_TRUE(t.pass);
  // G(2, 3) sits on the pole k = n+1, so the scan stops at kappa = 1.
  EXPECT_EQ(t.last_kappa, 1);
  EXPECT_TRUE(t.pole.has_value());
}

TEST(TelescopeTest, EmptyPrefixAlwaysChecked) {
  const auto t = wzkit::telescope_prefix_check(thm1_corrected(), 0);
  EXPECT_TRUE(t.pass);
  EXPECT_GE(t.prefixes_checked, 1);
}

TEST(TelescopeTest, PassingProblemsOverRange) {
  for (std::int64_t nv = 0; nv <= 30; ++nv) {
    EXPECT_TRUE(wzkit::telescope_prefix_check(thm1_corrected(), nv).pass) << nv;
    EXPECT_TRUE(wzkit::telescope_prefix_check(thm2(), nv).pass) << nv;
  }
  for (std::int64_t nv = 0; nv <= 6; ++nv) {
    for (std::int64_t mv = 0; mv <= 8; ++mv) {
      const auto t = wzkit::telescope_prefix_check(eq7(), Point{{Var::n, nv}, {Var::m, mv}}, 12);
      EXPECT_TRUE(t.pass) << nv << "," << mv;
      EXPECT_EQ(t.prefixes_checked, 14);
    }
  }
}

TEST(TelescopeTest, LiteralPairFailsNumerically) {
  EXPECT_FALSE(wzkit::telescope_prefix_check(thm1_literal(), 2).pass);
}

TEST(SummedRecurrenceTest, FirstTheoremVanishes) {
  for (std::int64_t nv = 0; nv <= 50; ++nv) {
    const auto s = wzkit::summed_recurrence_check(thm1_corrected(), nv);
    EXPECT_TRUE(s.applicable);
    EXPECT_TRUE(s.pass) << nv;
  }
}

TEST(SummedRecurrenceTest, SecondTheoremVanishes) {
  for (std::int64_t nv = -1; nv <= 50; ++nv) EXPECT_TRUE(wzkit::summed_recurrence_check(thm2(), nv).pass) << nv;
}

TEST(SummedRecurrenceTest, WrongCoefficientsDetected) {
  WZProblem p = thm2();
  p.coeffs = {1, 1};
  const auto s = wzkit::summed_recurrence_check(p, 0);
  EXPECT_FALSE(s.pass);
  EXPECT_EQ(s.value, BigRational(2));
}

TEST(SummedRecurrenceTest, NotApplicableWithoutFiniteSupport) {
  EXPECT_FALSE(wzkit::summed_recurrence_check(eq7(), Point{{Var::n, 2}, {Var::m, 3}}).applicable);
}

TEST(SummedRecurrenceTest, AgreesWithFactorialOracle) {
  for (std::int64_t nv = -1; nv <= 20; ++nv) {
    mpq_class s0 = 0;
    mpq_class s1 = 0;
    for (std::int64_t kv = 0; kv <= nv + 2; ++kv) {
      s0 += f2_oracle(nv, kv);
      s1 += f2_oracle(nv + 1, kv);
    }
    EXPECT_EQ(s0, 1);
    EXPECT_EQ(s1, 1);
  }
}

TEST(ProveConstantSumTest, FirstTheorem) {
  const auto rep = wzkit::prove_constant_sum(thm1_corrected(), {{{Var::n, 0}}, BigRational(1)}, 0, 40);
  ASSERT_TRUE(rep.pass()) << *rep.failed_stage();
  EXPECT_EQ(*rep.conclusion, "S(n) = 1 for n >= 0");
  EXPECT_TRUE(rep.errata.empty());
  ASSERT_EQ(rep.base_cases.size(), 1U);
  EXPECT_EQ(rep.base_cases[0].second, BigRational(1));
}

TEST(ProveConstantSumTest, SecondTheorem) {
  const auto rep = wzkit::prove_constant_sum(thm2(), {{{Var::n, -1}}, BigRational(1)}, -1, 40);
  ASSERT_TRUE(rep.pass()) << *rep.failed_stage();
  EXPECT_EQ(*rep.conclusion, "S(n) = 1 for n >= -1");
}

TEST(ProveConstantSumTest, LiteralPairFlagsErratum) {
  const auto rep = wzkit::prove_constant_sum(thm1_literal(), {{{Var::n, 0}}, BigRational(1)}, 0, 20);
  EXPECT_FALSE(rep.pass());
  EXPECT_EQ(rep.failed_stage(), "certificate");
  ASSERT_EQ(rep.errata.size(), 1U);
  EXPECT_EQ(rep.errata[0], "printed recurrence with plus sign");
}

TEST(ProveConstantSumTest, WrongBaseValueBlocksConclusion) {
  const auto rep = wzkit::prove_constant_sum(thm2(), {{{Var::n, 0}}, BigRational(2)}, 0, 5);
  EXPECT_FALSE(rep.pass());
  EXPECT_EQ(rep.failed_stage(), "base-case");
}

TEST(ProveConstantSumTest, NoConclusionWhenAnyStageFails) {
  auto rng = wzkit::testing::make_rng(11);
  for (const auto& base : {thm1_corrected(), thm2()}) {
    for (int i = 0; i < 10; ++i) {
      const auto mut = wzkit::mutate(base, rng);
      const auto rep = wzkit::prove_constant_sum(mut.problem, {{{Var::n, 0}}, BigRational(1)}, 0, 6);
      bool any_fail = false;
      for (const auto& s : rep.stages) any_fail = any_fail || !s.pass;
      EXPECT_EQ(rep.pass(), !any_fail);
      EXPECT_FALSE(rep.pass()) << mut.description;
    }
  }
}

TEST(DiscoverTest, FirstTheoremOrderOne) {
  const auto d = wzkit::discover_certificate(f1(false), Var::n, Var::k, 1);
  ASSERT_TRUE(d.has_value());
  ASSERT_EQ(d->coeffs.size(), 2U);
  EXPECT_TRUE(rf_equal(d->coeffs[0], RationalFunction(-1)));
  EXPECT_TRUE(rf_equal(d->coeffs[1], RationalFunction(1)));
  EXPECT_TRUE(rf_equal(d->certificate, r1()));
}

TEST(DiscoverTest, SecondTheoremRecoversPrintedCertificate) {
  const auto d = wzkit::discover_certificate(f2(), Var::n, Var::k, 1);
  ASSERT_TRUE(d.has_value());
  EXPECT_TRUE(rf_equal(d->coeffs[0], RationalFunction(-1)));
  EXPECT_TRUE(rf_equal(d->certificate, r2()));
  WZProblem p{"found", f2(), Var::n, Var::k, d->coeffs, d->certificate, ""};
  EXPECT_TRUE(wzkit::verify_certificate(p).pass);
}

TEST(DiscoverTest, OrderZeroHasNoSolution) {
  EXPECT_FALSE(wzkit::discover_certificate(f1(false), Var::n, Var::k, 0).has_value());
}

TEST(DiscoverTest, SummableTermAtOrderZero) {
  // k binom(n+k, k) has a hypergeometric antidifference in k.
  const HyperTerm t = HyperTerm().times_binomial(n + k, k).times_prefactor(Factored::from_linear(k));
  const auto d = wzkit::discover_certificate(t, Var::n, Var::k, 0);
  ASSERT_TRUE(d.has_value());
  WZProblem p{"found", t, Var::n, Var::k, d->coeffs, d->certificate, ""};
  EXPECT_TRUE(wzkit::verify_certificate(p).pass);
}

TEST(MutationTest, EveryMutationIsCaught) {
  for (const auto& p : {thm1_corrected(), thm2(), eq7()}) {
    const auto out = wzkit::mutation_test(p, 20, 2024);
    ASSERT_EQ(out.size(), 20U);
    for (const auto& o : out) EXPECT_TRUE(o.caught) << p.id << ": " << o.description;
  }
}

TEST(SoundnessProperty, SymbolicPassImpliesSummedPass) {
  for (const auto& p : {thm1_corrected(), thm1_corrected(true), thm2()}) {
    ASSERT_TRUE(wzkit::verify_certificate(p).pass);
    for (std::int64_t nv = 0; nv <= 60; ++nv) EXPECT_TRUE(wzkit::summed_recurrence_check(p, nv).pass);
  }
}

TEST(LinearSolveTest, NullspaceOfRankDeficientMatrix) {
  // Rows (n, 1, n+1) and (2n, 2, 2n+2): rank 1, nullity 2.
  wzkit::PolyMatrix a{{N, MultiPoly(1), N + 1}, {2 * N, MultiPoly(2), 2 * N + 2}};
  const auto basis = wzkit::nullspace(a, 3);
  ASSERT_EQ(basis.size(), 2U);
  for (const auto& v : basis) {
    for (const auto& row : a) {
      RationalFunction s(0);
      for (std::size_t j = 0; j < 3; ++j) s += RationalFunction(row[j]) * v[j];
      EXPECT_TRUE(s.is_zero());
    }
  }
}

TEST(LinearSolveTest, FullRankHasTrivialNullspace) {
  wzkit::PolyMatrix a{{N, MultiPoly(1)}, {MultiPoly(1), N}};
  EXPECT_TRUE(wzkit::nullspace(a, 2).empty());
}

}  // namespace
