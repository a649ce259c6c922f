#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "wzkit/exactnum.hpp"
#include "wzkit/linear_form.hpp"
#include "wzkit/variables.hpp"

namespace wzkit {

/// Exponent vector indexed by Var; std::array ordering is the lexicographic
/// monomial order with n most significant.
using Exponents = std::array<std::uint32_t, kVarCount>;

/// Sparse multivariate polynomial over BigRational. No zero coefficients are
/// stored, so structural equality is polynomial equality.
class MultiPoly {
 public:
  using Terms = std::map<Exponents, BigRational>;

  MultiPoly() = default;
  MultiPoly(const BigRational& c) {  // NOLINT(google-explicit-constructor)
    if (!c.is_zero()) terms_.emplace(Exponents{}, c);
  }
  MultiPoly(int c) : MultiPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(long c) : MultiPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(long long c) : MultiPoly(BigRational(c)) {}  // NOLINT(google-explicit-constructor)

  static MultiPoly var(Var v) { return monomial(v, 1); }
  static MultiPoly monomial(Var v, std::uint32_t e, const BigRational& c = 1) {
    MultiPoly p;
    if (c.is_zero()) return p;
    Exponents ex{};
    ex[index(v)] = e;
    p.terms_.emplace(ex, c);
    return p;
  }
  static MultiPoly from_terms(Terms terms) {
    MultiPoly p;
    for (auto& [e, c] : terms) {
      if (!c.is_zero()) p.terms_.emplace(e, std::move(c));
    }
    return p;
  }
  static MultiPoly from_linear(const LinearForm& f) {
    MultiPoly p(BigRational(static_cast<long long>(f.constant())));
    for (Var v : kAllVars) {
      if (f.coeff(v) != 0) p += monomial(v, 1, BigRational(static_cast<long long>(f.coeff(v))));
    }
    return p;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents{});
  }
  BigRational constant_term() const {
    auto it = terms_.find(Exponents{});
    return it == terms_.end() ? BigRational(0) : it->second;
  }

  /// Leading term under the lex order. Precondition: not zero.
  const std::pair<const Exponents, BigRational>& leading() const { return *terms_.rbegin(); }
  const BigRational& leading_coeff() const { return terms_.rbegin()->second; }

  std::uint32_t degree(Var v) const {
    std::uint32_t d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e[index(v)]);
    return d;
  }
  bool depends_on(Var v) const {
    return std::any_of(terms_.begin(), terms_.end(),
                       [&](const auto& t) { return t.first[index(v)] != 0; });
  }
  VarSet variables() const {
    VarSet s;
    for (Var v : kAllVars) {
      if (depends_on(v)) s.set(index(v));
    }
    return s;
  }

  /// Coefficient of v^i, as a polynomial in the remaining variables.
  MultiPoly coeff(Var v, std::uint32_t i) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
      if (e[index(v)] != i) continue;
      Exponents ex = e;
      ex[index(v)] = 0;
      r.terms_.emplace(ex, c);
    }
    return r;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly& operator-=(const MultiPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly r;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e;
        for (std::size_t i = 0; i < kVarCount; ++i) e[i] = ea[i] + eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  MultiPoly scaled(const BigRational& s) const {
    if (s.is_zero()) return {};
    MultiPoly a = *this;
    for (auto& [e, c] : a.terms_) c *= s;
    return a;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) { return a.terms_ == b.terms_; }

  MultiPoly pow(std::uint32_t e) const {
    MultiPoly r(1);
    MultiPoly base = *this;
    while (e != 0) {
      if (e & 1U) r *= base;
      e >>= 1U;
      if (e != 0) base *= base;
    }
    return r;
  }

  BigRational eval(const Point& p) const {
    BigRational sum;
    for (const auto& [e, c] : terms_) {
      BigRational t = c;
      for (Var v : kAllVars) {
        const auto d = e[index(v)];
        if (d != 0) t *= BigRational(pow_int(p.get(v), d));
      }
      sum += t;
    }
    return sum;
  }

  /// Substitutes v -> value, leaving the other variables symbolic.
  MultiPoly substituted(Var v, std::int64_t value) const {
    MultiPoly r;
    for (const auto& [e, c] : terms_) {
      Exponents ex = e;
      const auto d = ex[index(v)];
      ex[index(v)] = 0;
      r.add_term(ex, c * BigRational(pow_int(value, d)));
    }
    return r;
  }

  /// Substitutes v -> v + offset.
  MultiPoly shifted(Var v, std::int64_t offset) const {
    if (offset == 0 || !depends_on(v)) return *this;
    MultiPoly r;
    const BigRational off(static_cast<long long>(offset));
    for (const auto& [e, c] : terms_) {
      const auto d = e[index(v)];
      // (v + off)^d = sum_j binom(d, j) v^j off^(d-j)
      for (std::uint32_t j = 0; j <= d; ++j) {
        Exponents ex = e;
        ex[index(v)] = j;
        r.add_term(ex, c * BigRational(binomial(d, j)) * wzkit::pow(off, d - j));
      }
    }
    return r;
  }

  /// Substitutes v -> replacement (any polynomial).
  MultiPoly composed(Var v, const MultiPoly& replacement) const {
    MultiPoly r;
    std::map<std::uint32_t, MultiPoly> powers;
    for (const auto& [e, c] : terms_) {
      Exponents ex = e;
      const auto d = ex[index(v)];
      ex[index(v)] = 0;
      auto it = powers.find(d);
      if (it == powers.end()) it = powers.emplace(d, replacement.pow(d)).first;
      MultiPoly mono;
      mono.terms_.emplace(ex, c);
      r += mono * it->second;
    }
    return r;
  }

  /// Returns q with *this == q * divisor, or nullopt if the division is not exact.
  std::optional<MultiPoly> divide_exact(const MultiPoly& divisor) const {
    if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
    MultiPoly rem = *this;
    MultiPoly quot;
    const auto& [de, dc] = divisor.leading();
    while (!rem.is_zero()) {
      const auto& [re, rc] = rem.leading();
      Exponents qe;
      for (std::size_t i = 0; i < kVarCount; ++i) {
        if (re[i] < de[i]) return std::nullopt;
        qe[i] = re[i] - de[i];
      }
      MultiPoly t;
      t.terms_.emplace(qe, rc / dc);
      quot += t;
      rem -= t * divisor;
    }
    return quot;
  }

  /// Least common multiple of coefficient denominators.
  BigInt denominator_lcm() const {
    BigInt l = 1;
    for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.den().get_mpz_t());
    return l;
  }
  /// gcd of numerators (assumes integer coefficients give the content).
  BigInt numerator_gcd() const {
    BigInt g = 0;
    for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.num().get_mpz_t());
    return g;
  }

  /// Splits p = scale * primitive where primitive has coprime integer
  /// coefficients and a positive leading coefficient. Zero maps to (0, 0).
  std::pair<BigRational, MultiPoly> primitive_part() const {
    if (is_zero()) return {BigRational(0), MultiPoly()};
    const BigRational clear(denominator_lcm());
    MultiPoly q = scaled(clear);
    BigRational scale = BigRational(q.numerator_gcd()) / clear;
    q = q.scaled(BigRational(1) / BigRational(q.numerator_gcd()));
    if (q.leading_coeff().sign() < 0) {
      q = -q;
      scale = -scale;
    }
    return {scale, q};
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      const bool neg = c.sign() < 0;
      const BigRational a = neg ? -c : c;
      std::string mono;
      for (Var v : kAllVars) {
        const auto d = e[index(v)];
        if (d == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += var_name(v);
        if (d > 1) mono += "^" + std::to_string(d);
      }
      if (s.empty()) s += neg ? "-" : "";
      else s += neg ? " - " : " + ";
      if (mono.empty()) s += a.str();
      else if (a == BigRational(1)) s += mono;
      else if (a.is_integer()) s += a.str() + "*" + mono;
      else s += "(" + a.str() + ")*" + mono;
    }
    return s;
  }

 private:
  void add_term(const Exponents& e, const BigRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Terms terms_;
};

/// Univariate Euclid: monic gcd of two polynomials in at most one common
/// variable v. Returns nullopt when either argument involves another variable.
inline std::optional<MultiPoly> univariate_gcd(MultiPoly a, MultiPoly b, Var v) {
  VarSet allowed;
  allowed.set(index(v));
  if ((a.variables() & ~allowed).any() || (b.variables() & ~allowed).any()) return std::nullopt;
  auto rem = [v](MultiPoly p, const MultiPoly& d) {
    const auto dd = d.degree(v);
    const BigRational lc = d.coeff(v, dd).constant_term();
    while (!p.is_zero() && p.degree(v) >= dd) {
      const auto pd = p.degree(v);
      const BigRational f = p.coeff(v, pd).constant_term() / lc;
      p -= MultiPoly::monomial(v, pd - dd, f) * d;
    }
    return p;
  };
  while (!b.is_zero()) {
    MultiPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(BigRational(1) / a.coeff(v, a.degree(v)).constant_term());
}

}  // namespace wzkit
