#pragma once

// Proper hypergeometric terms:
//   (-1)^sign * prod base_i^exp_i * prod binom(top_j, bottom_j) * prefactor
// with integer affine exponents and binomial arguments.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wzkit/exactnum.hpp"
#include "wzkit/linear_form.hpp"
#include "wzkit/ratfun.hpp"

namespace wzkit {

struct Binomial {
  LinearForm top;
  LinearForm bottom;
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

struct Power {
  std::int64_t base = 2;
  LinearForm exponent;
  friend bool operator==(const Power&, const Power&) = default;
};

class HyperTerm {
 public:
  HyperTerm() = default;

  HyperTerm& times_sign(const LinearForm& e) {
    sign_exp_ = sign_exp_ + e;
    variables_ |= e.variables();
    return *this;
  }
  HyperTerm& times_power(std::int64_t base, const LinearForm& e) {
    if (base < 2) throw UnsupportedArgument("power base must be an integer >= 2");
    powers_.push_back({base, e});
    variables_ |= e.variables();
    return *this;
  }
  HyperTerm& times_binomial(const LinearForm& top, const LinearForm& bottom) {
    binomials_.push_back({top, bottom});
    variables_ |= top.variables() | bottom.variables();
    return *this;
  }
  HyperTerm& times_prefactor(const Factored& f) {
    prefactor_ *= f;
    for (const auto& [p, e] : f.factors()) variables_ |= p.variables();
    return *this;
  }
  HyperTerm& declare(Var v) {
    variables_.set(index(v));
    return *this;
  }

  const LinearForm& sign_exponent() const { return sign_exp_; }
  const std::vector<Power>& powers() const { return powers_; }
  const std::vector<Binomial>& binomials() const { return binomials_; }
  const Factored& prefactor_factored() const { return prefactor_; }
  RationalFunction prefactor() const { return prefactor_.expand(); }
  VarSet variables() const { return variables_; }
  bool depends_on(Var v) const { return variables_.test(index(v)); }

  /// The term with v replaced by v + offset.
  HyperTerm shifted(Var v, std::int64_t offset) const {
    HyperTerm r = *this;
    r.sign_exp_ = sign_exp_.shifted(v, offset);
    for (auto& p : r.powers_) p.exponent = p.exponent.shifted(v, offset);
    for (auto& b : r.binomials_) {
      b.top = b.top.shifted(v, offset);
      b.bottom = b.bottom.shifted(v, offset);
    }
    r.prefactor_ = prefactor_.shifted(v, offset);
    return r;
  }

  /// Exact value at an integer point. Prefactor poles are reported before
  /// anything else, so a vanishing binomial never hides a pole.
  BigRational eval(const Point& p) const {
    BigRational pre(1);
    const bool trivial_prefactor =
        prefactor_.factors().empty() && prefactor_.constant() == BigRational(1);
    if (!trivial_prefactor) pre = prefactor_.eval(p);

    std::int64_t tops[8];
    std::vector<std::int64_t> tops_heap;
    std::int64_t* top_values = tops;
    if (binomials_.size() > 8) {
      tops_heap.resize(binomials_.size());
      top_values = tops_heap.data();
    }
    for (std::size_t i = 0; i < binomials_.size(); ++i) {
      top_values[i] = binomials_[i].top.eval(p);
      if (top_values[i] < 0) {
        throw UnsupportedArgument("binomial top argument " + binomials_[i].top.str() + " = " +
                                  std::to_string(top_values[i]) + " is negative at " + p.str());
      }
    }
    BigInt num = 1;
    for (std::size_t i = 0; i < binomials_.size(); ++i) {
      const std::int64_t b = binomials_[i].bottom.eval(p);
      if (b < 0 || b > top_values[i]) return BigRational(0);
      num *= binomial(top_values[i], b);
    }
    if (pre.is_zero()) return pre;
    BigInt den = 1;
    for (const auto& pw : powers_) {
      const std::int64_t e = pw.exponent.eval(p);
      BigInt& target = e >= 0 ? num : den;
      const auto a = static_cast<unsigned long>(e >= 0 ? e : -e);
      if (pw.base == 2) {
        mpz_mul_2exp(target.get_mpz_t(), target.get_mpz_t(), a);
      } else {
        target *= pow_int(pw.base, static_cast<std::int64_t>(a));
      }
    }
    if ((sign_exp_.eval(p) & 1) != 0) num = -num;
    BigRational r = den == 1 ? BigRational(num) : BigRational(num, den);
    return trivial_prefactor ? r : r * pre;
  }

  std::string str() const {
    std::string s;
    auto append = [&s](const std::string& f) {
      if (!s.empty()) s += " * ";
      s += f;
    };
    if (!sign_exp_.is_constant() || sign_exp_.constant() != 0) {
      append("sign(" + sign_exp_.str() + ")");
    }
    for (const auto& b : binomials_) append("binom(" + b.top.str() + ", " + b.bottom.str() + ")");
    for (const auto& p : powers_) {
      append("pow(" + std::to_string(p.base) + ", " + p.exponent.str() + ")");
    }
    if (!(prefactor_.factors().empty() && prefactor_.constant() == BigRational(1)) || s.empty()) {
      append(prefactor_.str());
    }
    return s;
  }

 private:
  LinearForm sign_exp_;
  std::vector<Power> powers_;
  std::vector<Binomial> binomials_;
  Factored prefactor_;
  VarSet variables_;
};

inline BigRational term_eval(const HyperTerm& t, const Point& p) { return t.eval(p); }

namespace detail {

/// Rise(x, m) = x (x+1) ... (x+m-1) for m >= 0 and 1 / ((x-1)(x-2)...(x-|m|))
/// for m < 0, as a factored rational function.
inline Factored rising(const LinearForm& x, std::int64_t m) {
  Factored r;
  if (m >= 0) {
    for (std::int64_t i = 0; i < m; ++i) r *= Factored::from_linear(x + i);
  } else {
    for (std::int64_t i = 1; i <= -m; ++i) r *= Factored::from_linear(x - i, -1);
  }
  return r;
}

}  // namespace detail

/// t(v+1)/t(v) in factored form.
inline Factored shift_quotient_factored(const HyperTerm& t, Var v) {
  Factored q;
  if ((t.sign_exponent().coeff(v) & 1) != 0) q *= Factored(-1);
  for (const auto& pw : t.powers()) {
    const std::int64_t c = pw.exponent.coeff(v);
    if (c != 0) q *= Factored(pow(BigRational(static_cast<long long>(pw.base)), c));
  }
  for (const auto& b : t.binomials()) {
    const std::int64_t p = b.top.coeff(v);
    const std::int64_t s = b.bottom.coeff(v);
    if (p == 0 && s == 0) continue;
    // binom(A+p, B+s) / binom(A, B) = Rise(A+1, p) / (Rise(B+1, s) Rise(A-B+1, p-s))
    q *= detail::rising(b.top + 1, p);
    q = q / detail::rising(b.bottom + 1, s);
    q = q / detail::rising(b.top - b.bottom + 1, p - s);
  }
  if (t.prefactor_factored().depends_on(v)) {
    q *= t.prefactor_factored().shifted(v, 1) / t.prefactor_factored();
  }
  return q;
}

inline RationalFunction shift_quotient(const HyperTerm& t, Var v) {
  return shift_quotient_factored(t, v).expand();
}

/// Quotient t(v+j)/t(v) for j >= 0, composed from unit shifts.
inline Factored shift_quotient_factored(const HyperTerm& t, Var v, std::int64_t j) {
  const Factored unit = shift_quotient_factored(t, v);
  Factored q;
  for (std::int64_t i = 0; i < j; ++i) q *= unit.shifted(v, i);
  return q;
}

/// A half-line in one variable on which the term vanishes identically.
struct SupportBound {
  enum class Direction { upper, lower };

  Var var = Var::k;
  Direction direction = Direction::upper;
  /// Upper: the term is 0 whenever divisor*var > bound.
  /// Lower: the term is 0 whenever divisor*var < bound.
  LinearForm bound;
  std::int64_t divisor = 1;

  /// The extreme value of var at which the term may still be nonzero.
  std::int64_t extreme(const Point& p) const {
    const std::int64_t b = bound.eval(p);
    return direction == Direction::upper ? floor_div(b, divisor) : ceil_div(b, divisor);
  }

  friend bool operator==(const SupportBound&, const SupportBound&) = default;

  std::string str() const {
    std::string lhs = divisor == 1 ? std::string(var_name(var))
                                   : std::to_string(divisor) + "*" + std::string(var_name(var));
    return lhs + (direction == Direction::upper ? " <= " : " >= ") + bound.str();
  }
};

/// Vanish-beyond bounds in v implied by the binomial zero convention
/// (bottom < 0 or bottom > top, given top >= 0).
inline std::vector<SupportBound> support_bounds(const HyperTerm& t, Var v) {
  std::vector<SupportBound> out;
  auto add = [&](SupportBound b) {
    if (std::find(out.begin(), out.end(), b) == out.end()) out.push_back(std::move(b));
  };
  for (const auto& b : t.binomials()) {
    // bottom - top > 0
    const LinearForm excess = b.bottom - b.top;
    const std::int64_t c1 = excess.coeff(v);
    const LinearForm e1 = excess.without(v);
    if (c1 > 0) {
      // c1*v + e1 > 0  <=>  c1*v > -e1
      add({v, SupportBound::Direction::upper, -e1, c1});
    } else if (c1 < 0) {
      // |c1|*v < e1
      add({v, SupportBound::Direction::lower, e1, -c1});
    }
    // bottom < 0
    const std::int64_t c2 = b.bottom.coeff(v);
    const LinearForm e2 = b.bottom.without(v);
    if (c2 > 0) {
      // c2*v + e2 < 0  <=>  c2*v < -e2, i.e. vanishes when c2*v <= -e2 - 1
      add({v, SupportBound::Direction::lower, -e2, c2});
    } else if (c2 < 0) {
      // |c2|*v > e2
      add({v, SupportBound::Direction::upper, e2, -c2});
    }
  }
  return out;
}

/// Tightest upper (resp. lower) extreme at p over all bounds in that direction.
inline std::optional<std::int64_t> support_extreme(const std::vector<SupportBound>& bounds,
                                                   SupportBound::Direction dir, const Point& p) {
  std::optional<std::int64_t> best;
  for (const auto& b : bounds) {
    if (b.direction != dir) continue;
    const std::int64_t x = b.extreme(p);
    if (!best) best = x;
    else best = dir == SupportBound::Direction::upper ? std::min(*best, x) : std::max(*best, x);
  }
  return best;
}

/// The term r * t, e.g. G = R F. Poles of r survive as prefactor factors.
inline HyperTerm absorb_rational(HyperTerm t, const Factored& r) {
  return t.times_prefactor(r);
}
inline HyperTerm absorb_rational(HyperTerm t, const RationalFunction& r) {
  return t.times_prefactor(Factored::from_rational_function(r));
}

}  // namespace wzkit
