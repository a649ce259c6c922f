#include <gtest/gtest.h>

#include <set>

#include "wzkit/involution.hpp"
#include "wzkit/registry.hpp"

namespace {

using wzkit::WordModel;
using wzkit::WordModelId;

std::vector<wzkit::Word> words(const WordModel& m) {
  std::vector<wzkit::Word> out;
  for (std::int64_t s = 0; s < m.strata(); ++s) m.for_each_in_stratum(s, [&](const wzkit::Word& w) { out.push_back(w); });
  return out;
}

TEST(Words, Weight) {
  EXPECT_EQ(wzkit::weight("bcb"), 1);
  EXPECT_EQ(wzkit::weight("ab"), -1);
  EXPECT_EQ(wzkit::weight(""), 1);
}

TEST(Words, ScanMap) {
  EXPECT_EQ(wzkit::scan_involution("ab"), "bcb");
  EXPECT_EQ(wzkit::scan_involution("bcb"), "ab");
  EXPECT_EQ(wzkit::scan_involution("ccbb"), std::nullopt);
  EXPECT_EQ(wzkit::scan_involution("cbca"), "caa");
}

TEST(Words, Sigma) {
  EXPECT_EQ(wzkit::sigma("bbbb"), "babbb");
  EXPECT_EQ(wzkit::sigma("bcb"), "bacb");
  EXPECT_EQ(wzkit::sigma("abb"), std::nullopt);
  EXPECT_EQ(wzkit::sigma("bacb"), "bcb");
  EXPECT_EQ(wzkit::sigma("babacbcc"), "bbacbcc");
}

TEST(Enumeration, Thm1SmallCases) {
  const auto w1 = words({WordModelId::thm1, 1});
  ASSERT_EQ(w1.size(), 12u);
  EXPECT_EQ(std::count_if(w1.begin(), w1.end(), [](const auto& w) { return wzkit::weight(w) == 1; }), 8);
  EXPECT_EQ(std::set<wzkit::Word>(w1.begin(), w1.end()).size(), 12u);
  EXPECT_TRUE(std::is_sorted(w1.begin(), w1.begin() + 8));
  const auto w0 = words({WordModelId::thm1, 0});
  EXPECT_EQ(w0, (std::vector<wzkit::Word>{"b", "c"}));
  EXPECT_EQ(words({WordModelId::thm2, -1}), std::vector<wzkit::Word>{""});
}

TEST(Enumeration, MatchesMembershipAndSizes) {
  for (auto id : {WordModelId::thm1, WordModelId::thm2, WordModelId::thm3}) {
    for (std::int64_t n = 1; n <= 4; ++n) {
      const WordModel m{id, n};
      const auto ws = words(m);
      EXPECT_EQ(wzkit::BigInt(static_cast<unsigned long>(ws.size())), m.size());
      EXPECT_EQ(std::set<wzkit::Word>(ws.begin(), ws.end()).size(), ws.size());
      for (const auto& w : ws) EXPECT_TRUE(m.contains(w)) << w;
    }
  }
}

TEST(Enumeration, StratumCountsMatchBinomials) {
  for (std::int64_t n = 0; n <= 7; ++n) {
    const WordModel m{WordModelId::thm1, n};
    for (std::int64_t k = 0; k <= n; ++k) {
      EXPECT_EQ(m.stratum_size(n - k), wzkit::binomial(n + k + 1, 2 * k + 1) * wzkit::pow_int(2, 2 * k + 1));
    }
    const WordModel m2{WordModelId::thm2, n};
    for (std::int64_t k = 0; k <= n + 1; ++k) {
      EXPECT_EQ(m2.stratum_size(n + 1 - k), wzkit::binomial(n + k + 1, 2 * k) * wzkit::pow_int(2, 2 * k));
    }
  }
}

TEST(Involution, Thm1) {
  const auto r = wzkit::check_involution({WordModelId::thm1, 3});
  EXPECT_TRUE(r.violation_free());
  EXPECT_EQ(r.fixed, 8u);
  EXPECT_EQ(r.fixed_signed, 8);
  EXPECT_EQ(r.total_signed, 8);
  EXPECT_EQ(r.fixed + r.paired + r.violating_words, r.total_words);
}

TEST(Involution, Thm2) {
  const auto r = wzkit::check_involution({WordModelId::thm2, 2}, 3);
  EXPECT_TRUE(r.violation_free());
  EXPECT_EQ(r.fixed_signed, 7);
  const auto e = wzkit::check_involution({WordModelId::thm2, -1});
  EXPECT_EQ(e.total_words, 1u);
  EXPECT_EQ(e.fixed_signed, 1);
}

TEST(Involution, Thm3) {
  const auto r = wzkit::check_involution({WordModelId::thm3, 2});
  EXPECT_EQ(r.fixed, 12u);
  EXPECT_EQ(r.fixed_weight, -1);
  EXPECT_TRUE(r.fixed_weights_uniform);
  EXPECT_EQ(r.sign_count, 0u);
  EXPECT_EQ(r.involutivity_count, 0u);
  const wzkit::WordPair witness{"bbbb", "babbb"};
  EXPECT_NE(std::find(r.closure_violations.begin(), r.closure_violations.end(), witness), r.closure_violations.end());
  EXPECT_EQ(r.fixed + r.paired + r.violating_words, r.total_words);
}

TEST(Involution, Thm3SigmaIsNotAnInvolutionAtSix) {
  const auto r = wzkit::check_involution({WordModelId::thm3, 6}, 4);
  EXPECT_EQ(r.fixed, 84u);
  EXPECT_EQ(r.total_words, 56028u);
  EXPECT_EQ(r.involutivity_count, 64u);
  const wzkit::WordPair witness{"baabacbcc", "bbacbcc"};
  EXPECT_NE(std::find(r.involutivity_violations.begin(), r.involutivity_violations.end(), witness),
            r.involutivity_violations.end());
}

TEST(Involution, SignedTotalsAgreeWithSums) {
  const auto reg = wzkit::Registry::bundled();
  for (std::int64_t n = 1; n <= 5; ++n) {
    EXPECT_EQ(wzkit::BigRational(wzkit::check_involution({WordModelId::thm1, n}).total_signed),
              wzkit::BigRational(2) * wzkit::eval_sum(reg.require_sum("thm1"), n));
    EXPECT_EQ(wzkit::BigRational(wzkit::check_involution({WordModelId::thm2, n}).total_signed),
              wzkit::eval_sum(reg.require_sum("thm2"), n));
    const wzkit::BigRational sign(n % 2 == 1 ? 1 : -1);
    EXPECT_EQ(wzkit::BigRational(wzkit::check_involution({WordModelId::thm3, n}).total_signed),
              wzkit::BigRational(2) * sign * wzkit::eval_sum(reg.require_sum("thm3_printed"), n));
  }
}

TEST(Involution, SizeLimit) {
  EXPECT_THROW(wzkit::check_involution({WordModelId::thm1, 7}, 1, 1000), wzkit::SizeLimitExceeded);
}

}  // namespace
