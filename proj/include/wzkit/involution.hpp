#pragma once

// Weighted words over {a, b, c} and the sign-reversing maps on them.
//
//   thm1: 2 #a + #b + #c = 2n + 1, strata by #a
//   thm2: 2 #a + #b + #c = 2n + 2, strata by #a
//   thm3: length n + 1 + k for k in 0..n-1 with #b + #c >= 2k + 2, strata by k
//
// thm1 and thm2 use the scan map (first a <-> first bc), thm3 uses sigma.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wzkit/errors.hpp"
#include "wzkit/exactnum.hpp"
#include "wzkit/parallel.hpp"

namespace wzkit {

using Word = std::string;

enum class WordModelId { thm1, thm2, thm3 };

inline std::string_view model_name(WordModelId m) {
  switch (m) {
    case WordModelId::thm1: return "thm1";
    case WordModelId::thm2: return "thm2";
    case WordModelId::thm3: return "thm3";
  }
  return "?";
}

inline std::optional<WordModelId> parse_model(std::string_view s) {
  if (s == "thm1") return WordModelId::thm1;
  if (s == "thm2") return WordModelId::thm2;
  if (s == "thm3") return WordModelId::thm3;
  return std::nullopt;
}

inline int weight(std::string_view w) {
  std::size_t a = 0;
  for (char ch : w) a += ch == 'a';
  return a % 2 == 0 ? 1 : -1;
}

inline bool is_word(std::string_view w) {
  for (char ch : w) {
    if (ch != 'a' && ch != 'b' && ch != 'c') return false;
  }
  return true;
}

/// Swaps the first a or bc (whichever starts first) with the other;
/// nullopt when there is neither.
inline std::optional<Word> scan_involution(std::string_view w) {
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == 'a') return Word(w.substr(0, i)) + "bc" + Word(w.substr(i + 1));
    if (w[i] == 'b' && i + 1 < w.size() && w[i + 1] == 'c') return Word(w.substr(0, i)) + "a" + Word(w.substr(i + 2));
  }
  return std::nullopt;
}

/// w = a^l x a^p y a^q z ..., with x, y, z the first three non-a letters.
/// The run between x and y grows by one when p, q have equal parity and
/// p != 1, shrinks when p = 1, and for unequal parity shrinks unless p = 0.
/// nullopt (fixed) when w has fewer than three non-a letters.
inline std::optional<Word> sigma(std::string_view w) {
  std::size_t pos[3];
  std::size_t found = 0;
  for (std::size_t i = 0; i < w.size() && found < 3; ++i) {
    if (w[i] != 'a') pos[found++] = i;
  }
  if (found < 3) return std::nullopt;
  const std::size_t p = pos[1] - pos[0] - 1;
  const std::size_t q = pos[2] - pos[1] - 1;
  std::size_t run;
  if (p % 2 == q % 2) {
    run = p == 1 ? 0 : p + 1;
  } else {
    run = p == 0 ? 1 : p - 1;
  }
  return Word(w.substr(0, pos[0] + 1)) + Word(run, 'a') + Word(w.substr(pos[1]));
}

struct WordModel {
  WordModelId id = WordModelId::thm1;
  std::int64_t n = 0;

  std::int64_t cost() const { return 2 * n + (id == WordModelId::thm1 ? 1 : 2); }

  bool contains(std::string_view w) const {
    if (!is_word(w)) return false;
    std::int64_t a = 0;
    for (char ch : w) a += ch == 'a';
    const auto len = static_cast<std::int64_t>(w.size());
    if (id != WordModelId::thm3) return 2 * a + (len - a) == cost();
    const std::int64_t k = len - n - 1;
    return k >= 0 && k <= n - 1 && len - a >= 2 * k + 2;
  }

  /// thm1/thm2: stratum i holds the words with i a's. thm3: stratum k holds
  /// the words of length n + 1 + k.
  std::int64_t strata() const {
    if (id == WordModelId::thm3) return std::max<std::int64_t>(n, 0);
    return cost() < 0 ? 0 : cost() / 2 + 1;
  }

  /// Exact size of a stratum.
  BigInt stratum_size(std::int64_t i) const {
    if (id != WordModelId::thm3) {
      const std::int64_t len = cost() - i;
      return binomial(len, i) * pow_int(2, len - i);
    }
    const std::int64_t len = n + 1 + i;
    BigInt total = 0;
    for (std::int64_t a = 0; a <= len - 2 * i - 2; ++a) {
      total += binomial(len, a) * pow_int(2, len - a);
    }
    return total;
  }

  BigInt size() const {
    BigInt total = 0;
    for (std::int64_t i = 0; i < strata(); ++i) total += stratum_size(i);
    return total;
  }

  /// Calls f(word) for each word of stratum i in lexicographic order.
  template <class F>
  void for_each_in_stratum(std::int64_t i, F&& f) const {
    std::int64_t len;
    std::int64_t a_min;
    std::int64_t a_max;
    if (id != WordModelId::thm3) {
      len = cost() - i;
      a_min = a_max = i;
    } else {
      len = n + 1 + i;
      a_min = 0;
      a_max = len - 2 * i - 2;
    }
    if (len < 0 || a_max < a_min) return;
    Word w(static_cast<std::size_t>(len), 'a');
    auto rec = [&](auto&& self, std::int64_t at, std::int64_t as) -> void {
      const std::int64_t left = len - at;
      if (left == 0) {
        if (as >= a_min) f(static_cast<const Word&>(w));
        return;
      }
      if (as + left < a_min) return;
      for (char ch : {'a', 'b', 'c'}) {
        if (ch == 'a' && as == a_max) continue;
        w[static_cast<std::size_t>(at)] = ch;
        self(self, at + 1, as + (ch == 'a'));
      }
    };
    rec(rec, 0, 0);
  }

  std::optional<Word> apply(std::string_view w) const {
    return id == WordModelId::thm3 ? sigma(w) : scan_involution(w);
  }
};

struct StratumCount {
  std::int64_t index = 0;
  std::uint64_t words = 0;
  std::int64_t signed_weight = 0;
};

struct WordPair {
  Word word;
  Word image;
  friend bool operator==(const WordPair&, const WordPair&) = default;
};

struct InvolutionReport {
  /// Violation lists keep the first kExampleCap entries of each kind in
  /// enumeration order; the counts are exact.
  static constexpr std::size_t kExampleCap = 1000;

  WordModel model;
  std::vector<StratumCount> strata;
  std::uint64_t total_words = 0;
  std::uint64_t fixed = 0;
  std::int64_t fixed_signed = 0;
  std::uint64_t paired = 0;
  std::uint64_t closure_count = 0;
  std::uint64_t involutivity_count = 0;
  std::uint64_t sign_count = 0;
  std::uint64_t violating_words = 0;  // non-fixed words not cleanly paired
  std::vector<WordPair> closure_violations;
  std::vector<WordPair> involutivity_violations;  // (w, map(map(w)))
  std::vector<WordPair> sign_violations;
  std::int64_t total_signed = 0;
  bool fixed_weights_uniform = true;  // every fixed word has the same weight
  int fixed_weight = 0;               // that weight, 0 when there is no fixed word

  bool violation_free() const { return closure_count == 0 && involutivity_count == 0 && sign_count == 0; }
};

inline constexpr std::uint64_t kDefaultWordLimit = 50'000'000;

inline InvolutionReport check_involution(const WordModel& m, unsigned jobs = 1,
                                         std::uint64_t word_limit = kDefaultWordLimit) {
  const BigInt size = m.size();
  if (size > BigInt(static_cast<unsigned long>(word_limit))) {
    throw SizeLimitExceeded(std::string(model_name(m.id)) + " at n = " + std::to_string(m.n) + " has " +
                            size.get_str() + " words, limit is " + std::to_string(word_limit));
  }
  const auto count = static_cast<std::size_t>(m.strata());
  std::vector<InvolutionReport> parts(count);
  parallel_for(count, jobs, [&](std::size_t s) {
    InvolutionReport& r = parts[s];
    StratumCount sc{static_cast<std::int64_t>(s), 0, 0};
    m.for_each_in_stratum(static_cast<std::int64_t>(s), [&](const Word& w) {
      const int wt = weight(w);
      ++sc.words;
      sc.signed_weight += wt;
      const auto img = m.apply(w);
      if (!img) {
        ++r.fixed;
        r.fixed_signed += wt;
        if (r.fixed_weight == 0) r.fixed_weight = wt;
        else if (r.fixed_weight != wt) r.fixed_weights_uniform = false;
        return;
      }
      bool bad = false;
      if (!m.contains(*img)) {
        ++r.closure_count;
        if (r.closure_violations.size() < InvolutionReport::kExampleCap) r.closure_violations.push_back({w, *img});
        ++r.violating_words;
        return;
      }
      if (weight(*img) != -wt) {
        ++r.sign_count;
        if (r.sign_violations.size() < InvolutionReport::kExampleCap) r.sign_violations.push_back({w, *img});
        bad = true;
      }
      const auto back = m.apply(*img);
      if (!back || !m.contains(*back)) {
        bad = true;
      } else if (*back != w) {
        ++r.involutivity_count;
        if (r.involutivity_violations.size() < InvolutionReport::kExampleCap) {
          r.involutivity_violations.push_back({w, *back});
        }
        bad = true;
      }
      if (bad) ++r.violating_words;
      else ++r.paired;
    });
    r.strata.push_back(sc);
  });

  InvolutionReport out;
  out.model = m;
  for (auto& p : parts) {
    out.strata.insert(out.strata.end(), p.strata.begin(), p.strata.end());
    out.fixed += p.fixed;
    out.fixed_signed += p.fixed_signed;
    out.paired += p.paired;
    out.closure_count += p.closure_count;
    out.involutivity_count += p.involutivity_count;
    out.sign_count += p.sign_count;
    out.violating_words += p.violating_words;
    auto take = [](std::vector<WordPair>& dst, const std::vector<WordPair>& src) {
      for (const auto& x : src) {
        if (dst.size() == InvolutionReport::kExampleCap) break;
        dst.push_back(x);
      }
    };
    take(out.closure_violations, p.closure_violations);
    take(out.involutivity_violations, p.involutivity_violations);
    take(out.sign_violations, p.sign_violations);
    if (p.fixed_weight != 0) {
      if (!p.fixed_weights_uniform || (out.fixed_weight != 0 && out.fixed_weight != p.fixed_weight)) {
        out.fixed_weights_uniform = false;
      }
      if (out.fixed_weight == 0) out.fixed_weight = p.fixed_weight;
    }
  }
  for (const auto& s : out.strata) {
    out.total_words += s.words;
    out.total_signed += s.signed_weight;
  }
  return out;
}

}  // namespace wzkit
