#pragma once

// Exact integer and rational scalars. Integers are GMP integers; rationals
// wrap mpq_class so that every value is kept canonical (den > 0, reduced)
// and division by zero raises instead of aborting.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "wzkit/errors.hpp"

namespace wzkit {

using BigInt = mpz_class;

inline BigInt big_int(std::int64_t v) {
  BigInt r;
  mpz_set_si(r.get_mpz_t(), static_cast<long>(v));
  return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

class BigRational {
 public:
  BigRational() = default;
  BigRational(int v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(long v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(long long v) : value_(big_int(v)) {}  // NOLINT(google-explicit-constructor)
  BigRational(const BigInt& v) : value_(v) {}  // NOLINT(google-explicit-constructor)

  BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
  }

  static BigRational from_mpq(mpq_class q) {
    q.canonicalize();
    BigRational r;
    r.value_ = std::move(q);
    return r;
  }

  /// Parses "p", "-p" or "p/q".
  static BigRational parse(std::string_view text) {
    const auto slash = text.find('/');
    BigInt num;
    BigInt den = 1;
    try {
      num = BigInt(std::string(text.substr(0, slash)));
      if (slash != std::string_view::npos) den = BigInt(std::string(text.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
      throw UnsupportedArgument("not a rational literal: " + std::string(text));
    }
    return BigRational(num, den);
  }

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }
  const mpq_class& mpq() const { return value_; }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  BigRational operator-() const { return from_mpq(-value_); }

  BigRational& operator+=(const BigRational& o) {
    value_ += o.value_;
    return *this;
  }
  BigRational& operator-=(const BigRational& o) {
    value_ -= o.value_;
    return *this;
  }
  BigRational& operator*=(const BigRational& o) {
    value_ *= o.value_;
    return *this;
  }
  BigRational& operator/=(const BigRational& o) {
    if (o.is_zero()) throw DivisionByZero();
    value_ /= o.value_;
    return *this;
  }

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }

  friend bool operator==(const BigRational& a, const BigRational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const { return value_.get_str(); }
  /// Always "p/q", the exchange format used in JSON reports.
  std::string fraction_str() const {
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

 private:
  mpq_class value_;
};

inline BigRational abs(const BigRational& r) { return r.sign() < 0 ? -r : r; }

/// base^exp for any integer exponent; 0^negative raises DivisionByZero.
inline BigRational pow(const BigRational& base, std::int64_t exp) {
  if (exp < 0) {
    if (base.is_zero()) throw DivisionByZero("zero raised to a negative power");
    return pow(BigRational(base.den(), base.num()), -exp);
  }
  BigInt num;
  BigInt den;
  mpz_pow_ui(num.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(exp));
  mpz_pow_ui(den.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(exp));
  return BigRational(num, den);
}

inline BigInt pow_int(std::int64_t base, std::int64_t exp) {
  if (exp < 0) throw UnsupportedArgument("negative exponent for an integer power");
  BigInt r;
  if (base >= 0) {
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(exp));
  } else {
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(-base),
                  static_cast<unsigned long>(exp));
    if (exp % 2 != 0) r = -r;
  }
  return r;
}

namespace detail {

// Pascal rows are cached per thread; identity checks hit the same few hundred
// rows millions of times.
inline constexpr std::int64_t kBinomialCacheRows = 2048;

inline const BigInt& cached_binomial(std::int64_t a, std::int64_t b) {
  thread_local std::vector<std::vector<BigInt>> rows;
  while (static_cast<std::int64_t>(rows.size()) <= a) {
    const auto r = static_cast<std::int64_t>(rows.size());
    std::vector<BigInt> row(static_cast<std::size_t>(r / 2 + 1));
    row[0] = 1;
    for (std::int64_t j = 1; j <= r / 2; ++j) {
      const auto& prev = rows[static_cast<std::size_t>(r - 1)];
      // prev stores j' <= (r-1)/2; mirror for the upper half.
      auto at = [&](std::int64_t jj) -> const BigInt& {
        const std::int64_t m = std::min(jj, r - 1 - jj);
        return prev[static_cast<std::size_t>(m)];
      };
      row[static_cast<std::size_t>(j)] = at(j - 1) + at(j);
    }
    rows.push_back(std::move(row));
  }
  const std::int64_t m = std::min(b, a - b);
  return rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(m)];
}

}  // namespace detail

/// Binomial coefficient with the zero convention outside 0 <= b <= a.
/// Generalized binomials (a < 0) are rejected.
inline BigInt binomial(std::int64_t a, std::int64_t b) {
  if (a < 0) {
    throw UnsupportedArgument("binomial with negative top argument " + std::to_string(a));
  }
  if (b < 0 || b > a) return 0;
  if (a < detail::kBinomialCacheRows) return detail::cached_binomial(a, b);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return r;
}

/// Floor division for signed integers (rounds toward negative infinity).
inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return -floor_div(-a, b); }

}  // namespace wzkit
