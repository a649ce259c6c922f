#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "wzkit/variables.hpp"

namespace wzkit {

/// Integer affine form c_n*n + c_k*k + c_m*m + c_l*l + constant. The dense
/// coefficient array makes the representation canonical.
class LinearForm {
 public:
  constexpr LinearForm() = default;
  constexpr LinearForm(std::int64_t constant) : constant_(constant) {}  // NOLINT
  constexpr LinearForm(Var v, std::int64_t coeff = 1, std::int64_t constant = 0)
      : constant_(constant) {
    coeffs_[index(v)] = coeff;
  }

  constexpr std::int64_t coeff(Var v) const { return coeffs_[index(v)]; }
  constexpr std::int64_t constant() const { return constant_; }

  constexpr LinearForm& set_coeff(Var v, std::int64_t c) {
    coeffs_[index(v)] = c;
    return *this;
  }
  constexpr LinearForm& set_constant(std::int64_t c) {
    constant_ = c;
    return *this;
  }

  constexpr bool depends_on(Var v) const { return coeffs_[index(v)] != 0; }
  constexpr bool is_constant() const {
    for (auto c : coeffs_) {
      if (c != 0) return false;
    }
    return true;
  }
  VarSet variables() const {
    VarSet s;
    for (Var v : kAllVars) {
      if (depends_on(v)) s.set(index(v));
    }
    return s;
  }

  std::int64_t eval(const Point& p) const {
    std::int64_t r = constant_;
    for (Var v : kAllVars) {
      if (coeffs_[index(v)] != 0) r += coeffs_[index(v)] * p.get(v);
    }
    return r;
  }

  /// Substitutes var -> var + offset.
  constexpr LinearForm shifted(Var v, std::int64_t offset) const {
    LinearForm r = *this;
    r.constant_ += coeffs_[index(v)] * offset;
    return r;
  }

  /// Substitutes var -> replacement.
  constexpr LinearForm substituted(Var v, const LinearForm& replacement) const {
    const std::int64_t c = coeffs_[index(v)];
    LinearForm r = *this;
    r.coeffs_[index(v)] = 0;
    return r + replacement * c;
  }

  /// Drops var, i.e. the form restricted to the remaining variables.
  constexpr LinearForm without(Var v) const {
    LinearForm r = *this;
    r.coeffs_[index(v)] = 0;
    return r;
  }

  constexpr LinearForm operator-() const { return *this * -1; }
  friend constexpr LinearForm operator+(LinearForm a, const LinearForm& b) {
    for (std::size_t i = 0; i < kVarCount; ++i) a.coeffs_[i] += b.coeffs_[i];
    a.constant_ += b.constant_;
    return a;
  }
  friend constexpr LinearForm operator-(const LinearForm& a, const LinearForm& b) {
    return a + (-b);
  }
  friend constexpr LinearForm operator*(LinearForm a, std::int64_t s) {
    for (auto& c : a.coeffs_) c *= s;
    a.constant_ *= s;
    return a;
  }
  friend constexpr LinearForm operator*(std::int64_t s, const LinearForm& a) { return a * s; }
  friend constexpr bool operator==(const LinearForm&, const LinearForm&) = default;

  std::string str() const {
    std::string s;
    for (Var v : kAllVars) {
      const std::int64_t c = coeffs_[index(v)];
      if (c == 0) continue;
      if (!s.empty()) s += c < 0 ? "-" : "+";
      else if (c < 0) s += "-";
      const std::int64_t a = c < 0 ? -c : c;
      if (a != 1) s += std::to_string(a) + "*";
      s += var_name(v);
    }
    if (constant_ != 0 || s.empty()) {
      if (!s.empty()) s += constant_ < 0 ? "-" : "+";
      else if (constant_ < 0) s += "-";
      s += std::to_string(constant_ < 0 ? -constant_ : constant_);
    }
    return s;
  }

 private:
  std::array<std::int64_t, kVarCount> coeffs_{};
  std::int64_t constant_ = 0;
};

}  // namespace wzkit
