#pragma once

// WZ-style proofs: symbolic certificate checks, exact telescoping checks,
// proof assembly for constant sums, and certificate discovery.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "wzkit/gosper.hpp"
#include "wzkit/hyperterm.hpp"
#include "wzkit/linsolve.hpp"

namespace wzkit {

/// sum_j a_j(n) F(n+j, k) = G(n, k+1) - G(n, k) with G = R F.
struct WZProblem {
  std::string id;
  HyperTerm summand;
  Var shift_var = Var::n;
  Var sum_var = Var::k;
  std::vector<RationalFunction> coeffs;
  RationalFunction certificate;
  /// Non-empty for a literal printed variant known to be wrong; names what was printed.
  std::string erratum;

  std::size_t order() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

struct CertCheck {
  bool pass = false;
  RationalFunction residual;
  /// R's numerator vanishes identically at the lower summation limit.
  bool lower_boundary_zero = false;
  std::int64_t lower_limit = 0;
  std::optional<SupportBound> upper_support;
};

namespace detail {

/// The summation lower limit: the tightest constant lower support bound, or 0.
inline std::int64_t lower_limit(const HyperTerm& f, Var k) {
  std::optional<std::int64_t> lo;
  for (const auto& b : support_bounds(f, k)) {
    if (b.direction != SupportBound::Direction::lower || !b.bound.is_constant()) continue;
    const std::int64_t x = b.extreme(Point{});
    lo = lo ? std::max(*lo, x) : x;
  }
  return lo.value_or(0);
}

inline std::optional<SupportBound> upper_bound(const HyperTerm& f, Var k) {
  for (const auto& b : support_bounds(f, k)) {
    if (b.direction == SupportBound::Direction::upper) return b;
  }
  return std::nullopt;
}

inline std::vector<BigRational> eval_coeffs(const WZProblem& p, const Point& at) {
  std::vector<BigRational> out;
  out.reserve(p.coeffs.size());
  for (const auto& a : p.coeffs) out.push_back(a.eval(at));
  return out;
}

}  // namespace detail

inline CertCheck verify_certificate(const WZProblem& p) {
  const Var n = p.shift_var;
  const Var k = p.sum_var;
  const Factored unit = shift_quotient_factored(p.summand, n);
  RationalFunction lhs(0);
  Factored q;
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
    if (j > 0) q *= unit.shifted(n, static_cast<std::int64_t>(j) - 1);
    if (!p.coeffs[j].is_zero()) lhs += p.coeffs[j] * q.expand();
  }
  const RationalFunction& r = p.certificate;
  const RationalFunction rhs = r.shifted(k, 1) * shift_quotient(p.summand, k) - r;

  CertCheck out;
  out.residual = lhs - rhs;
  out.pass = rf_equal(out.residual, RationalFunction(0));
  out.lower_limit = detail::lower_limit(p.summand, k);
  out.lower_boundary_zero = r.num().substituted(k, out.lower_limit).is_zero();
  out.upper_support = detail::upper_bound(p.summand, k);
  return out;
}

struct TelescopeResult {
  bool pass = true;
  std::int64_t prefixes_checked = 0;
  /// Last kappa for which the prefix identity was checked.
  std::int64_t last_kappa = 0;
  std::optional<std::int64_t> first_failure;
  /// Set when G hit a pole; prefixes from there on are not checked.
  std::optional<std::string> pole;
};

/// Checks, for kappa = lower-1 .. until the first pole of G or the cap,
///   sum_{k=lower}^{kappa} sum_j a_j F(n+j, k) = G(n, kappa+1) - G(n, lower)
/// by exact evaluation. `at` fixes the shift variable and any extra variables.
/// Past the k-support the scan stops two steps beyond it; without a finite
/// support kappa_cap bounds the scan.
inline TelescopeResult telescope_prefix_check(const WZProblem& p, const Point& at,
                                              std::int64_t kappa_cap = 64) {
  const Var n = p.shift_var;
  const Var k = p.sum_var;
  const std::int64_t n0 = at.get(n);
  const std::int64_t lower = detail::lower_limit(p.summand, k);
  const HyperTerm g = absorb_rational(p.summand, p.certificate);

  std::int64_t cap = lower + kappa_cap;
  const auto bounds = support_bounds(p.summand, k);
  if (auto hi = support_extreme(bounds, SupportBound::Direction::upper, at)) {
    for (std::size_t j = 1; j < p.coeffs.size(); ++j) {
      auto e = support_extreme(bounds, SupportBound::Direction::upper,
                               at.with(n, n0 + static_cast<std::int64_t>(j)));
      hi = std::max(*hi, *e);
    }
    cap = *hi + 2;
  }

  TelescopeResult out;
  out.last_kappa = lower - 1;
  BigRational g_lower;
  try {
    g_lower = g.eval(at.with(k, lower));
  } catch (const PoleError& e) {
    out.pole = e.what();
    return out;
  }
  const auto a = detail::eval_coeffs(p, at);
  BigRational lhs;
  for (std::int64_t kappa = lower - 1; kappa <= cap; ++kappa) {
    if (kappa >= lower) {
      for (std::size_t j = 0; j < a.size(); ++j) {
        if (a[j].is_zero()) continue;
        lhs += a[j] * p.summand.eval(
                          at.with(n, n0 + static_cast<std::int64_t>(j)).with(k, kappa));
      }
    }
    BigRational rhs;
    try {
      rhs = g.eval(at.with(k, kappa + 1)) - g_lower;
    } catch (const PoleError& e) {
      out.pole = e.what();
      break;
    }
    ++out.prefixes_checked;
    out.last_kappa = kappa;
    if (lhs != rhs) {
      out.pass = false;
      if (!out.first_failure) out.first_failure = kappa;
    }
  }
  return out;
}

inline TelescopeResult telescope_prefix_check(const WZProblem& p, std::int64_t n,
                                              std::int64_t kappa_cap = 64) {
  return telescope_prefix_check(p, Point{{p.shift_var, n}}, kappa_cap);
}

struct SummedCheck {
  bool applicable = true;
  bool pass = false;
  BigRational value;
};

/// sum_k sum_j a_j(n) F(n+j, k) over the full k-support, which must vanish.
/// Not applicable when F has no finite upper support bound in k.
inline SummedCheck summed_recurrence_check(const WZProblem& p, const Point& at) {
  const Var n = p.shift_var;
  const Var k = p.sum_var;
  const std::int64_t n0 = at.get(n);
  const auto bounds = support_bounds(p.summand, k);
  SummedCheck out;
  std::optional<std::int64_t> lo;
  std::optional<std::int64_t> hi;
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) {
    const Point pj = at.with(n, n0 + static_cast<std::int64_t>(j));
    auto u = support_extreme(bounds, SupportBound::Direction::upper, pj);
    if (!u) {
      out.applicable = false;
      return out;
    }
    const std::int64_t l =
        support_extreme(bounds, SupportBound::Direction::lower, pj).value_or(0);
    hi = hi ? std::max(*hi, *u) : *u;
    lo = lo ? std::min(*lo, l) : l;
  }
  const auto a = detail::eval_coeffs(p, at);
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j].is_zero()) continue;
    BigRational s;
    const Point pj = at.with(n, n0 + static_cast<std::int64_t>(j));
    for (std::int64_t kk = *lo; kk <= *hi; ++kk) s += p.summand.eval(pj.with(k, kk));
    out.value += a[j] * s;
  }
  out.pass = out.value.is_zero();
  return out;
}

inline SummedCheck summed_recurrence_check(const WZProblem& p, std::int64_t n) {
  return summed_recurrence_check(p, Point{{p.shift_var, n}});
}

/// sum_k F(n, k) over the k-support at `at`.
inline BigRational support_sum(const HyperTerm& f, Var k, const Point& at) {
  const auto bounds = support_bounds(f, k);
  const auto hi = support_extreme(bounds, SupportBound::Direction::upper, at);
  if (!hi) throw UnsupportedArgument("summand has no finite support in " + std::string(var_name(k)));
  const std::int64_t lo = support_extreme(bounds, SupportBound::Direction::lower, at).value_or(0);
  BigRational s;
  for (std::int64_t kk = lo; kk <= *hi; ++kk) s += f.eval(at.with(k, kk));
  return s;
}

struct BaseCase {
  Point point;
  BigRational value;
};

struct ProofStage {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ProofReport {
  std::string problem_id;
  CertCheck certificate;
  std::vector<ProofStage> stages;
  /// (point, computed value) for each base case.
  std::vector<std::pair<Point, BigRational>> base_cases;
  std::int64_t range_lo = 0;
  std::int64_t range_hi = 0;
  /// Values of n in the range where the summed recurrence did not vanish.
  std::vector<std::int64_t> failing_n;
  std::optional<std::string> conclusion;
  std::vector<std::string> errata;

  bool pass() const { return conclusion.has_value(); }
  std::optional<std::string> failed_stage() const {
    for (const auto& s : stages) {
      if (!s.pass) return s.name;
    }
    return std::nullopt;
  }
};

namespace detail {

/// Smallest k* > support_top such that den(n0, k) != 0 for every k >= k*,
/// using the Cauchy root bound. nullopt if den(n0, .) vanishes identically.
inline std::optional<std::int64_t> pole_free_from(const MultiPoly& den, Var n, std::int64_t n0, Var k,
                                                  std::int64_t support_top) {
  const MultiPoly d = den.substituted(n, n0);
  if (d.is_zero()) return std::nullopt;
  const std::uint32_t deg = d.degree(k);
  if (deg == 0) return support_top + 1;
  const BigRational lead = d.coeff(k, deg).constant_term();
  BigRational bound(1);
  BigRational mx(0);
  for (std::uint32_t i = 0; i < deg; ++i) mx = std::max(mx, abs(d.coeff(k, i).constant_term() / lead));
  bound += mx;
  const BigInt top = bound.num() / bound.den();
  std::int64_t start = support_top + 1;
  for (std::int64_t kk = start; kk <= top.get_si(); ++kk) {
    if (d.substituted(k, kk).is_zero()) start = kk + 1;
  }
  return start;
}

}  // namespace detail

/// Proof that S(n) = sum_k F(n, k) is constant for n in [lo, hi], from a
/// first-order certificate with coefficients (-c, c).
inline ProofReport prove_constant_sum(const WZProblem& p, const BaseCase& base, std::int64_t lo,
                                      std::int64_t hi) {
  const Var n = p.shift_var;
  const Var k = p.sum_var;
  ProofReport rep;
  rep.problem_id = p.id;
  rep.range_lo = lo;
  rep.range_hi = hi;
  rep.certificate = verify_certificate(p);
  const CertCheck& cert = rep.certificate;

  rep.stages.push_back({"certificate", cert.pass,
                        cert.pass ? "residual is the zero function"
                                  : "residual " + cert.residual.str() + " is not zero"});

  const bool shape = p.coeffs.size() == 2 && !p.coeffs[1].is_zero() &&
                     rf_equal(p.coeffs[0], -p.coeffs[1]);
  rep.stages.push_back({"recurrence", shape,
                        shape ? "coefficients give S(n+1) - S(n) = 0"
                              : "coefficients do not have the form (-c, c)"});

  rep.stages.push_back({"lower-boundary", cert.lower_boundary_zero,
                        "numerator of R at " + std::string(var_name(k)) + "=" +
                            std::to_string(cert.lower_limit) +
                            (cert.lower_boundary_zero ? " vanishes" : " does not vanish")});

  {
    ProofStage st{"upper-boundary", false, ""};
    if (!cert.upper_support) {
      st.detail = "summand has no finite upper support bound";
    } else {
      st.pass = true;
      st.detail = "F vanishes for " + std::string(var_name(k)) + " beyond " + cert.upper_support->str();
      for (std::int64_t nn = lo; nn <= hi && st.pass; ++nn) {
        const Point at{{n, nn}};
        const std::int64_t top = cert.upper_support->extreme(at);
        if (!detail::pole_free_from(p.certificate.den(), n, nn, k, top)) {
          st.pass = false;
          st.detail = "denominator of R vanishes identically at " + at.str();
        }
      }
    }
    rep.stages.push_back(st);
  }

  {
    ProofStage st{"base-case", false, ""};
    try {
      const BigRational v = support_sum(p.summand, k, base.point);
      rep.base_cases.emplace_back(base.point, v);
      st.pass = v == base.value;
      st.detail = "S" + base.point.str() + " = " + v.str() + (st.pass ? "" : ", expected " + base.value.str());
    } catch (const Error& e) {
      st.detail = e.what();
    }
    rep.stages.push_back(st);
  }

  {
    ProofStage st{"summed-recurrence", true, ""};
    for (std::int64_t nn = lo; nn <= hi; ++nn) {
      try {
        const auto s = summed_recurrence_check(p, nn);
        if (!s.applicable || !s.pass) rep.failing_n.push_back(nn);
      } catch (const Error&) {
        rep.failing_n.push_back(nn);
      }
    }
    st.pass = rep.failing_n.empty();
    st.detail = st.pass ? "vanishes for n in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]"
                        : std::to_string(rep.failing_n.size()) + " values of n fail";
    rep.stages.push_back(st);
  }

  if (!rep.failed_stage()) {
    rep.conclusion = "S(" + std::string(var_name(n)) + ") = " + base.value.str() + " for " +
                     std::string(var_name(n)) + " >= " + std::to_string(base.point.get(n));
  } else if (!p.erratum.empty()) {
    rep.errata.push_back(p.erratum);
  }
  return rep;
}

struct Discovery {
  std::vector<RationalFunction> coeffs;
  RationalFunction certificate;
};

/// Parameterized Gosper: finds a_0..a_J (normalized so the last nonzero one is
/// 1) and R with sum_j a_j F(n+j, k) = G(n, k+1) - G(n, k), G = R F.
/// Returns nullopt when no such pair exists at this order.
inline std::optional<Discovery> discover_certificate(const HyperTerm& f, Var n, Var k, std::size_t order) {
  const std::size_t terms = order + 1;
  std::vector<Factored> ratios;
  for (std::size_t j = 0; j < terms; ++j) {
    ratios.push_back(shift_quotient_factored(f, n, static_cast<std::int64_t>(j)));
  }
  std::map<MultiPoly, int, decltype([](const MultiPoly& a, const MultiPoly& b) {
             return a.terms() < b.terms();
           })>
      lcm_exp;
  for (const auto& r : ratios) {
    for (const auto& [poly, e] : r.factors()) {
      if (e < 0) lcm_exp[poly] = std::max(lcm_exp[poly], -e);
    }
  }
  Factored lcm;
  for (const auto& [poly, e] : lcm_exp) lcm *= Factored::from_poly(poly, e);

  const gosper::Decomposition dec =
      gosper::decompose(shift_quotient_factored(f, k) * lcm / lcm.shifted(k, 1), k);
  const MultiPoly c_num = dec.c.numerator();
  const MultiPoly bm = dec.b.shifted(k, -1);

  std::vector<MultiPoly> parts;
  std::int64_t deg_p = 0;
  for (const auto& r : ratios) {
    const Factored scaled = r * lcm;
    parts.push_back(scaled.numerator() * c_num);
    deg_p = std::max<std::int64_t>(deg_p, parts.back().degree(k));
  }
  const std::int64_t d = gosper::degree_bound(dec.a, bm, deg_p, k);
  const std::size_t nx = d >= 0 ? static_cast<std::size_t>(d) + 1 : 0;

  std::vector<MultiPoly> columns;
  MultiPoly kp(1);
  MultiPoly kp1(1);
  const MultiPoly kvar = MultiPoly::var(k);
  for (std::size_t i = 0; i < nx; ++i) {
    columns.push_back(dec.a * kp1 - bm * kp);
    kp = kp * kvar;
    kp1 = kp1 * (kvar + MultiPoly(1));
  }
  for (const auto& part : parts) columns.push_back(-part);

  std::uint32_t rows = 0;
  for (const auto& c : columns) rows = std::max(rows, c.degree(k) + 1);
  PolyMatrix m(rows, std::vector<MultiPoly>(columns.size()));
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::uint32_t t = 0; t < rows; ++t) m[t][c] = columns[c].coeff(k, t);
  }

  const auto basis = nullspace(m, columns.size());
  const std::vector<RationalFunction>* sol = nullptr;
  for (const auto& v : basis) {
    if (std::any_of(v.begin() + static_cast<std::ptrdiff_t>(nx), v.end(),
                    [](const RationalFunction& x) { return !x.is_zero(); })) {
      sol = &v;
      break;
    }
  }
  if (!sol) return std::nullopt;

  std::size_t last = columns.size() - 1;
  while ((*sol)[last].is_zero()) --last;
  const RationalFunction norm = (*sol)[last];

  Discovery out;
  for (std::size_t j = 0; j < terms; ++j) out.coeffs.push_back((*sol)[nx + j] / norm);

  // x(k) with the n-denominators cleared into `clear`.
  std::vector<RationalFunction> xs;
  for (std::size_t i = 0; i < nx; ++i) xs.push_back((*sol)[i] / norm);
  std::vector<MultiPoly> dens;
  for (const auto& x : xs) {
    if (std::find(dens.begin(), dens.end(), x.den()) == dens.end()) dens.push_back(x.den());
  }
  MultiPoly clear(1);
  for (const auto& dd : dens) clear *= dd;
  MultiPoly x_poly;
  MultiPoly kpow(1);
  for (const auto& x : xs) {
    x_poly += x.num() * *clear.divide_exact(x.den()) * kpow;
    kpow = kpow * kvar;
  }

  Factored r = Factored::from_poly(bm) / (dec.c * lcm * Factored::from_poly(clear));
  MultiPoly top = r.numerator() * x_poly;
  MultiPoly bottom(1);
  for (const auto& [poly, e] : r.factors()) {
    for (int i = 0; i < -e; ++i) {
      if (auto q = top.divide_exact(poly)) top = std::move(*q);
      else bottom *= poly;
    }
  }
  out.certificate = RationalFunction(top, bottom);

  WZProblem check{"discovered", f, n, k, out.coeffs, out.certificate, ""};
  if (!verify_certificate(check).pass) {
    throw std::logic_error("discovered certificate failed its self-check");
  }
  return out;
}

struct Mutation {
  WZProblem problem;
  std::string description;
};

/// Perturbs one integer coefficient of R or of one a_j by +-1.
inline Mutation mutate(const WZProblem& p, std::mt19937_64& rng) {
  struct Slot {
    int target;  // -1: certificate, j >= 0: coefficient j
    bool numerator;
    Exponents exps;
  };
  auto slots_of = [](const RationalFunction& r, int target, std::vector<Slot>& out) {
    for (const auto& [e, c] : r.num().terms()) out.push_back({target, true, e});
    for (const auto& [e, c] : r.den().terms()) out.push_back({target, false, e});
  };
  std::vector<Slot> slots;
  slots_of(p.certificate, -1, slots);
  for (std::size_t j = 0; j < p.coeffs.size(); ++j) slots_of(p.coeffs[j], static_cast<int>(j), slots);

  for (;;) {
    const Slot s = slots[std::uniform_int_distribution<std::size_t>(0, slots.size() - 1)(rng)];
    const int delta = std::uniform_int_distribution<int>(0, 1)(rng) == 0 ? -1 : 1;
    const RationalFunction& r = s.target < 0 ? p.certificate : p.coeffs[static_cast<std::size_t>(s.target)];
    MultiPoly::Terms t = (s.numerator ? r.num() : r.den()).terms();
    BigRational& c = t[s.exps];
    c += BigRational(delta);
    MultiPoly changed = MultiPoly::from_terms(std::move(t));
    if (!s.numerator && changed.is_zero()) continue;
    const RationalFunction nr = s.numerator ? RationalFunction(changed, r.den()) : RationalFunction(r.num(), changed);

    Mutation m{p, ""};
    (s.target < 0 ? m.problem.certificate : m.problem.coeffs[static_cast<std::size_t>(s.target)]) = nr;
    m.description = (s.target < 0 ? std::string("R") : "a_" + std::to_string(s.target)) + ": " + r.str() +
                    " -> " + nr.str();
    return m;
  }
}

struct MutationOutcome {
  std::string description;
  bool caught = false;
};

inline std::vector<MutationOutcome> mutation_test(const WZProblem& p, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<MutationOutcome> out;
  for (int i = 0; i < count; ++i) {
    Mutation m = mutate(p, rng);
    out.push_back({m.description, !verify_certificate(m.problem).pass});
  }
  return out;
}

}  // namespace wzkit
