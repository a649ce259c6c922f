#pragma once

// Summation identities as data, and an exact brute-force oracle for them.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wzkit/hyperterm.hpp"
#include "wzkit/parallel.hpp"

namespace wzkit {

/// A summation limit: an affine form, or floor(form / 2).
struct SumBound {
  enum class Kind { affine, floor_half };
  Kind kind = Kind::affine;
  LinearForm form;

  static SumBound affine(const LinearForm& f) { return {Kind::affine, f}; }
  static SumBound floor_half(const LinearForm& f) { return {Kind::floor_half, f}; }

  std::int64_t eval(const Point& p) const {
    const std::int64_t v = form.eval(p);
    return kind == Kind::affine ? v : floor_div(v, 2);
  }
  std::string str() const { return kind == Kind::affine ? form.str() : "floor2(" + form.str() + ")"; }
  friend bool operator==(const SumBound&, const SumBound&) = default;
};

struct Loop {
  Var var = Var::k;
  SumBound lower;
  SumBound upper;
  friend bool operator==(const Loop&, const Loop&) = default;
};

/// var := value, evaluated inside the innermost loop before the summand.
struct Binding {
  Var var = Var::l;
  SumBound value;
  friend bool operator==(const Binding&, const Binding&) = default;
};

/// sum over entries of poly(n) * base^n * (-1)^(parity * n).
class ClosedForm {
 public:
  using Key = std::pair<std::int64_t, int>;  // (base, parity)

  ClosedForm() = default;
  ClosedForm(const MultiPoly& p) { add({1, 0}, p); }  // NOLINT(google-explicit-constructor)

  /// base^(n) * (-1)^(parity n) with coefficient 1.
  static ClosedForm exponential(std::int64_t base, int parity) {
    if (base < 1) throw UnsupportedArgument("closed-form base must be a positive integer");
    ClosedForm c;
    c.add({base, parity & 1}, MultiPoly(1));
    return c;
  }

  const std::map<Key, MultiPoly>& entries() const { return entries_; }
  bool is_zero() const { return entries_.empty(); }

  friend ClosedForm operator+(ClosedForm a, const ClosedForm& b) {
    for (const auto& [key, p] : b.entries_) a.add(key, p);
    return a;
  }
  friend ClosedForm operator-(const ClosedForm& a, const ClosedForm& b) { return a + b.scaled(BigRational(-1)); }
  friend ClosedForm operator*(const ClosedForm& a, const ClosedForm& b) {
    ClosedForm r;
    for (const auto& [ka, pa] : a.entries_) {
      for (const auto& [kb, pb] : b.entries_) r.add({ka.first * kb.first, ka.second ^ kb.second}, pa * pb);
    }
    return r;
  }
  ClosedForm scaled(const BigRational& s) const {
    ClosedForm r;
    for (const auto& [key, p] : entries_) r.add(key, p.scaled(s));
    return r;
  }
  friend bool operator==(const ClosedForm&, const ClosedForm&) = default;

  BigRational eval(Var param, std::int64_t n) const {
    const Point at{{param, n}};
    BigRational s;
    for (const auto& [key, p] : entries_) {
      BigRational t = p.eval(at);
      if (key.first != 1) t *= pow(BigRational(static_cast<long long>(key.first)), n);
      if (key.second == 1 && (n & 1) != 0) t = -t;
      s += t;
    }
    return s;
  }

  std::string str(Var param) const {
    if (entries_.empty()) return "0";
    const std::string v(var_name(param));
    std::string s;
    for (const auto& [key, p] : entries_) {
      std::string t = "(" + p.str() + ")";
      if (key.first != 1) t += "*pow(" + std::to_string(key.first) + ", " + v + ")";
      if (key.second == 1) t += "*sign(" + v + ")";
      s += s.empty() ? t : " + " + t;
    }
    return s;
  }

 private:
  void add(const Key& key, const MultiPoly& p) {
    if (p.is_zero()) return;
    auto [it, inserted] = entries_.try_emplace(key, p);
    if (!inserted) {
      it->second += p;
      if (it->second.is_zero()) entries_.erase(it);
    }
  }

  std::map<Key, MultiPoly> entries_;
};

struct IdentityCase {
  std::string id;
  Var param = Var::n;
  HyperTerm summand;
  std::vector<Loop> loops;  // outermost first
  std::vector<Binding> bindings;
  ClosedForm rhs;
  std::int64_t valid_from = 0;
  /// For a literal printed variant: the corrected id it shadows and what was printed.
  std::string literal_of;
  std::string erratum;
};

/// Exact nested summation at param = n. With clamp, every loop range is
/// intersected with the summand's support in that loop variable where the
/// support bound can be evaluated.
inline BigRational eval_sum(const IdentityCase& c, std::int64_t n, bool clamp = false) {
  mpz_class int_acc = 0;
  BigRational frac_acc;
  std::vector<std::vector<SupportBound>> supports;
  if (clamp) {
    for (const auto& loop : c.loops) supports.push_back(support_bounds(c.summand, loop.var));
  }
  Point at{{c.param, n}};
  auto body = [&](auto&& self, std::size_t depth) -> void {
    if (depth == c.loops.size()) {
      for (const auto& b : c.bindings) at.set(b.var, b.value.eval(at));
      const BigRational v = c.summand.eval(at);
      if (v.den() == 1) int_acc += v.num();
      else frac_acc += v;
      return;
    }
    const Loop& loop = c.loops[depth];
    std::int64_t lo = loop.lower.eval(at);
    std::int64_t hi = loop.upper.eval(at);
    if (clamp) {
      for (const auto& b : supports[depth]) {
        bool known = true;
        for (Var v : kAllVars) {
          if (b.bound.depends_on(v) && !at.has(v)) known = false;
        }
        if (!known) continue;
        if (b.direction == SupportBound::Direction::upper) hi = std::min(hi, b.extreme(at));
        else lo = std::max(lo, b.extreme(at));
      }
    }
    for (std::int64_t i = lo; i <= hi; ++i) {
      at.set(loop.var, i);
      self(self, depth + 1);
    }
  };
  body(body, 0);
  return frac_acc + BigRational(int_acc);
}

inline BigRational closed_form_value(const IdentityCase& c, std::int64_t n) { return c.rhs.eval(c.param, n); }

struct PointCheck {
  std::int64_t n = 0;
  BigRational lhs;
  BigRational rhs;
  bool pass() const { return lhs == rhs; }
};

inline PointCheck check_at(const IdentityCase& c, std::int64_t n) {
  return {n, eval_sum(c, n), closed_form_value(c, n)};
}

struct IdentityReport {
  std::string id;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  std::vector<PointCheck> failures;  // ordered by n
  bool pass() const { return failures.empty(); }
};

/// Runs `check(n)` for n in [lo, hi] and collects failures in order of n.
template <class Check>
IdentityReport check_range(std::string id, std::int64_t lo, std::int64_t hi, unsigned jobs, Check&& check) {
  IdentityReport rep{std::move(id), lo, hi, {}};
  if (hi < lo) return rep;
  const auto count = static_cast<std::size_t>(hi - lo + 1);
  std::vector<std::optional<PointCheck>> slots(count);
  parallel_for(count, jobs, [&](std::size_t i) {
    PointCheck r = check(lo + static_cast<std::int64_t>(i));
    if (!r.pass()) slots[i] = std::move(r);
  });
  for (auto& s : slots) {
    if (s) rep.failures.push_back(std::move(*s));
  }
  return rep;
}

inline IdentityReport check_identity(const IdentityCase& c, std::int64_t lo, std::int64_t hi, unsigned jobs = 1) {
  if (lo < c.valid_from) {
    throw UnsupportedArgument(c.id + " is asserted only for " + std::string(var_name(c.param)) +
                              " >= " + std::to_string(c.valid_from));
  }
  return check_range(c.id, lo, hi, jobs, [&c](std::int64_t n) { return check_at(c, n); });
}

/// S(n+1) - S(n) against 2(n+1).
inline PointCheck thm3_difference(const IdentityCase& s, std::int64_t n) {
  return {n, eval_sum(s, n + 1) - eval_sum(s, n), BigRational(static_cast<long long>(2 * (n + 1)))};
}

/// (diagonal boundary sum) - (binomial tail sum) at n.
inline BigRational boundary_gap(const IdentityCase& tail, const IdentityCase& diagonal, std::int64_t n) {
  return eval_sum(diagonal, n) - eval_sum(tail, n);
}

/// The gap against 2(n+1) - 3 * 4^n.
inline PointCheck boundary_gap_check(const IdentityCase& tail, const IdentityCase& diagonal, std::int64_t n) {
  const BigRational expected =
      BigRational(static_cast<long long>(2 * (n + 1))) - BigRational(3) * pow(BigRational(4), n);
  return {n, boundary_gap(tail, diagonal, n), expected};
}

}  // namespace wzkit
