#pragma once

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "wzkit/multipoly.hpp"

namespace wzkit {

/// Quotient of two polynomials, kept sign- and content-normalized:
/// integer coefficients with coprime overall content and a positive leading
/// coefficient in the denominator. Common factors are cancelled when one side
/// divides the other or both are univariate in the same variable; equality
/// never relies on that cancellation.
class RationalFunction {
 public:
  RationalFunction() : den_(1) {}
  RationalFunction(const BigRational& c) : num_(c), den_(1) {}  // NOLINT
  RationalFunction(int c) : RationalFunction(BigRational(c)) {}  // NOLINT
  RationalFunction(MultiPoly num) : num_(std::move(num)), den_(1) {  // NOLINT
    normalize();
  }
  RationalFunction(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    normalize();
  }

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool depends_on(Var v) const { return num_.depends_on(v) || den_.depends_on(v); }
  VarSet variables() const { return num_.variables() | den_.variables(); }

  RationalFunction operator-() const { return RationalFunction(-num_, den_, Raw{}); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    return a + (-b);
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.is_zero()) throw DivisionByZero("division by the zero rational function");
    return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  /// Decides equality as functions by cross-multiplication.
  friend bool rf_equal(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ * b.den_ == b.num_ * a.den_;
  }

  RationalFunction shifted(Var v, std::int64_t offset) const {
    return RationalFunction(num_.shifted(v, offset), den_.shifted(v, offset));
  }
  RationalFunction substituted(Var v, std::int64_t value) const {
    return RationalFunction(num_.substituted(v, value), den_.substituted(v, value));
  }

  BigRational eval(const Point& p) const {
    const BigRational d = den_.eval(p);
    if (d.is_zero()) throw PoleError("rational function " + str() + " has a pole at " + p.str());
    return num_.eval(p) / d;
  }

  std::string str() const {
    if (den_ == MultiPoly(1)) return "(" + num_.str() + ")";
    return "(" + num_.str() + ")/(" + den_.str() + ")";
  }

 private:
  struct Raw {};
  RationalFunction(MultiPoly num, MultiPoly den, Raw) : num_(std::move(num)), den_(std::move(den)) {}

  void normalize() {
    if (num_.is_zero()) {
      den_ = MultiPoly(1);
      return;
    }
    if (!den_.is_constant()) cancel_common();
    BigInt clear = 1;
    mpz_lcm(clear.get_mpz_t(), num_.denominator_lcm().get_mpz_t(),
            den_.denominator_lcm().get_mpz_t());
    num_ = num_.scaled(BigRational(clear));
    den_ = den_.scaled(BigRational(clear));
    BigInt g = 0;
    mpz_gcd(g.get_mpz_t(), num_.numerator_gcd().get_mpz_t(), den_.numerator_gcd().get_mpz_t());
    BigRational scale = BigRational(BigInt(1), g);
    if (den_.leading_coeff().sign() < 0) scale = -scale;
    num_ = num_.scaled(scale);
    den_ = den_.scaled(scale);
  }

  void cancel_common() {
    if (auto q = num_.divide_exact(den_)) {
      num_ = std::move(*q);
      den_ = MultiPoly(1);
      return;
    }
    if (auto q = den_.divide_exact(num_)) {
      den_ = std::move(*q);
      num_ = MultiPoly(1);
      return;
    }
    const VarSet vars = num_.variables() | den_.variables();
    if (vars.count() != 1) return;
    for (Var v : kAllVars) {
      if (!vars.test(index(v))) continue;
      auto g = univariate_gcd(num_, den_, v);
      if (g && !g->is_constant()) {
        num_ = *num_.divide_exact(*g);
        den_ = *den_.divide_exact(*g);
      }
    }
  }

  MultiPoly num_;
  MultiPoly den_;
};

/// A rational function kept as constant * prod(factor^exponent). Factors are
/// primitive integer polynomials with positive leading coefficient, so equal
/// factors merge. This is the form in which shift quotients of proper terms
/// arise, and it lets pole checks and Gosper's decomposition see factors.
class Factored {
 public:
  using Factor = std::pair<MultiPoly, int>;

  Factored() : constant_(1) {}
  Factored(const BigRational& c) : constant_(c) {}  // NOLINT(google-explicit-constructor)
  Factored(int c) : constant_(c) {}  // NOLINT(google-explicit-constructor)

  static Factored from_poly(const MultiPoly& p, int exponent = 1) {
    Factored f;
    if (p.is_zero()) {
      if (exponent < 0) throw DivisionByZero("zero polynomial in a denominator");
      return Factored(0);
    }
    auto [scale, prim] = p.primitive_part();
    f.constant_ = wzkit::pow(scale, exponent);
    if (!prim.is_constant()) f.factors_.emplace_back(std::move(prim), exponent);
    return f;
  }
  static Factored from_linear(const LinearForm& lf, int exponent = 1) {
    return from_poly(MultiPoly::from_linear(lf), exponent);
  }
  static Factored from_rational_function(const RationalFunction& r) {
    return from_poly(r.num()) * from_poly(r.den(), -1);
  }

  const BigRational& constant() const { return constant_; }
  const std::vector<Factor>& factors() const { return factors_; }
  bool is_zero() const { return constant_.is_zero(); }

  friend Factored operator*(Factored a, const Factored& b) {
    a.constant_ *= b.constant_;
    for (const auto& [p, e] : b.factors_) a.add_factor(p, e);
    return a;
  }
  friend Factored operator/(const Factored& a, const Factored& b) { return a * b.inverse(); }
  Factored& operator*=(const Factored& o) { return *this = *this * o; }

  Factored inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero");
    Factored r;
    r.constant_ = BigRational(1) / constant_;
    for (const auto& [p, e] : factors_) r.factors_.emplace_back(p, -e);
    return r;
  }

  Factored pow(int exponent) const {
    Factored r;
    r.constant_ = wzkit::pow(constant_, exponent);
    if (exponent == 0) return r;
    for (const auto& [p, e] : factors_) r.factors_.emplace_back(p, e * exponent);
    return r;
  }

  Factored shifted(Var v, std::int64_t offset) const {
    Factored r(constant_);
    for (const auto& [p, e] : factors_) r *= from_poly(p.shifted(v, offset), e);
    return r;
  }

  bool depends_on(Var v) const {
    return std::any_of(factors_.begin(), factors_.end(),
                       [&](const Factor& f) { return f.first.depends_on(v); });
  }

  MultiPoly numerator() const {
    MultiPoly r(constant_);
    for (const auto& [p, e] : factors_) {
      if (e > 0) r *= p.pow(static_cast<std::uint32_t>(e));
    }
    return r;
  }
  MultiPoly denominator() const {
    MultiPoly r(1);
    for (const auto& [p, e] : factors_) {
      if (e < 0) r *= p.pow(static_cast<std::uint32_t>(-e));
    }
    return r;
  }

  RationalFunction expand() const { return RationalFunction(numerator(), denominator()); }

  /// Exact value; any denominator factor vanishing at p raises PoleError,
  /// even when a numerator factor also vanishes there.
  BigRational eval(const Point& p) const {
    BigRational den(1);
    for (const auto& [poly, e] : factors_) {
      if (e >= 0) continue;
      const BigRational v = poly.eval(p);
      if (v.is_zero()) {
        throw PoleError("factor " + poly.str() + " of a denominator vanishes at " + p.str());
      }
      den *= wzkit::pow(v, -e);
    }
    BigRational num = constant_;
    for (const auto& [poly, e] : factors_) {
      if (e > 0) num *= wzkit::pow(poly.eval(p), e);
    }
    return num / den;
  }

  std::string str() const {
    std::string s = constant_.str();
    for (const auto& [p, e] : factors_) {
      s += (e > 0 ? " * (" : " / (") + p.str() + ")";
      const int a = e > 0 ? e : -e;
      if (a != 1) s += "^" + std::to_string(a);
    }
    return s;
  }

 private:
  void add_factor(const MultiPoly& p, int e) {
    if (e == 0) return;
    for (auto it = factors_.begin(); it != factors_.end(); ++it) {
      if (it->first == p) {
        it->second += e;
        if (it->second == 0) factors_.erase(it);
        return;
      }
    }
    factors_.emplace_back(p, e);
  }

  BigRational constant_;
  std::vector<Factor> factors_;
};

}  // namespace wzkit
