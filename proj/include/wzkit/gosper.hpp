#pragma once

// Building blocks of (parameterized) Gosper summation in one variable.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wzkit/ratfun.hpp"

namespace wzkit::gosper {

struct ShiftMatch {
  std::int64_t h = 0;
  BigRational lambda;  // f(k) = lambda * g(k + h)
};

/// Finds h >= 0 and a constant lambda with f(k) = lambda * g(k + h).
inline std::optional<ShiftMatch> shift_match(const MultiPoly& f, const MultiPoly& g, Var k) {
  const std::uint32_t d = f.degree(k);
  if (d == 0 || g.degree(k) != d) return std::nullopt;
  const MultiPoly fd = f.coeff(k, d);
  const MultiPoly gd = g.coeff(k, d);
  const BigRational lambda = fd.leading_coeff() / gd.leading_coeff();
  if (!(fd == gd.scaled(lambda))) return std::nullopt;

  // k^(d-1) coefficient of g(k+h) is g1 + d*h*gd.
  const MultiPoly num = f.coeff(k, d - 1) - g.coeff(k, d - 1).scaled(lambda);
  const MultiPoly den = gd.scaled(lambda * BigRational(static_cast<long long>(d)));
  BigRational h(0);
  if (!num.is_zero()) {
    h = num.leading_coeff() / den.leading_coeff();
    if (!(num == den.scaled(h))) return std::nullopt;
  }
  if (!h.is_integer() || h.sign() < 0) return std::nullopt;
  const auto shift = static_cast<std::int64_t>(h.num().get_si());
  if (!(f == g.shifted(k, shift).scaled(lambda))) return std::nullopt;
  return ShiftMatch{shift, lambda};
}

/// ratio = (a(k)/b(k)) * (c(k+1)/c(k)) with gcd(a(k), b(k+h)) = 1 for all
/// h >= 0, checked factor by factor.
struct Decomposition {
  MultiPoly a;
  MultiPoly b;
  Factored c;
};

inline Decomposition decompose(const Factored& ratio, Var k) {
  std::vector<MultiPoly> top;
  std::vector<MultiPoly> bottom;
  for (const auto& [p, e] : ratio.factors()) {
    for (int i = 0; i < (e > 0 ? e : -e); ++i) (e > 0 ? top : bottom).push_back(p);
  }
  BigRational scale = ratio.constant();
  Factored c;
  for (bool found = true; found;) {
    found = false;
    for (std::size_t i = 0; i < top.size() && !found; ++i) {
      for (std::size_t j = 0; j < bottom.size() && !found; ++j) {
        auto m = shift_match(top[i], bottom[j], k);
        if (!m) continue;
        for (std::int64_t s = 0; s < m->h; ++s) c *= Factored::from_poly(bottom[j].shifted(k, s));
        scale *= m->lambda;
        top.erase(top.begin() + static_cast<std::ptrdiff_t>(i));
        bottom.erase(bottom.begin() + static_cast<std::ptrdiff_t>(j));
        found = true;
      }
    }
  }
  Decomposition out{MultiPoly(scale), MultiPoly(1), c};
  for (const auto& p : top) out.a *= p;
  for (const auto& p : bottom) out.b *= p;
  return out;
}

/// Upper bound on deg x for a(k) x(k+1) - bm(k) x(k) = p(k), or -1 when no
/// polynomial solution can exist. In the leading-term cancellation case the
/// larger of the two candidate degrees is used.
inline std::int64_t degree_bound(const MultiPoly& a, const MultiPoly& bm, std::int64_t deg_p, Var k) {
  const MultiPoly plus = a + bm;
  const MultiPoly minus = a - bm;
  const std::int64_t lp = plus.is_zero() ? -1 : plus.degree(k);
  const std::int64_t lm = minus.is_zero() ? -1 : minus.degree(k);
  if (plus.is_zero() || lp <= lm) return deg_p - lm;
  std::int64_t d = deg_p - lp + 1;
  const MultiPoly lead = plus.coeff(k, static_cast<std::uint32_t>(lp));
  const MultiPoly below = lp >= 1 ? minus.coeff(k, static_cast<std::uint32_t>(lp - 1)) : MultiPoly();
  const MultiPoly cand_num = below.scaled(BigRational(-2));
  if (cand_num.is_zero()) return std::max<std::int64_t>(d, 0);
  const BigRational c = cand_num.leading_coeff() / lead.leading_coeff();
  if (cand_num == lead.scaled(c) && c.is_integer() && c.sign() >= 0) {
    d = std::max<std::int64_t>(d, c.num().get_si());
  }
  return d;
}

}  // namespace wzkit::gosper
