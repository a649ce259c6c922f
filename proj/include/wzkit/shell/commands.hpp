#pragma once

// The subcommands, each producing one or more reports.

#include <chrono>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "wzkit/involution.hpp"
#include "wzkit/registry.hpp"
#include "wzkit/shell/report.hpp"
#include "wzkit/wzengine.hpp"

namespace wzkit::shell {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::optional<std::string> spec;
  std::optional<std::string> id;
  Mode mode = Mode::corrected;
  std::optional<std::int64_t> n_min;
  std::optional<std::int64_t> n_max;
  bool json = false;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 1;
  std::size_t order = 1;
};

inline constexpr int kMutations = 20;
inline constexpr std::int64_t kTelescopeMaxN = 30;

namespace detail {

class Stopwatch {
 public:
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

inline std::pair<std::int64_t, std::int64_t> range(const Options& o, std::int64_t lo, std::int64_t hi) {
  const std::int64_t a = o.n_min.value_or(lo);
  const std::int64_t b = o.n_max.value_or(std::max(hi, a));
  if (b < a) throw UsageError("malformed range: --n-min " + std::to_string(a) + " exceeds --n-max " + std::to_string(b));
  return {a, b};
}

inline BigRational big(std::int64_t v) { return BigRational(static_cast<long long>(v)); }

inline std::string stage_line(const ProofStage& s) {
  return "stage " + s.name + ": " + (s.pass ? "ok" : "FAILED") + (s.detail.empty() ? "" : " (" + s.detail + ")");
}

inline void mutation_details(const WZProblem& p, std::uint64_t seed, Report& r) {
  const auto outcomes = mutation_test(p, kMutations, seed);
  int caught = 0;
  for (const auto& m : outcomes) {
    if (m.caught) {
      ++caught;
    } else {
      r.pass = false;
      r.details.push_back("mutation not caught: " + m.description);
    }
  }
  r.details.push_back("mutations caught: " + std::to_string(caught) + "/" + std::to_string(outcomes.size()) +
                      " (seed " + std::to_string(seed) + ")");
}

inline void telescope_details(const WZProblem& p, const Point& at, Report& r, std::int64_t& prefixes) {
  const TelescopeResult t = telescope_prefix_check(p, at);
  prefixes += t.prefixes_checked;
  if (!t.pass) {
    r.pass = false;
    r.details.push_back("telescoped prefix fails at " + at.str() + ", kappa = " + std::to_string(*t.first_failure));
  }
}

}  // namespace detail

inline Report verify_check(const dsl::CheckCase& c, const Options& o) {
  detail::Stopwatch clock;
  Report r;
  r.command = "verify";
  r.id = c.id;
  r.mode = c.literal_of.empty() ? Mode::corrected : Mode::literal;
  if (o.mode == Mode::literal && r.mode == Mode::corrected) {
    r.details.push_back("no printed variant differs from the corrected one");
  }
  const WZProblem& p = c.problem;
  const Var n = p.shift_var;
  const auto declared = c.ranges.count(n) ? c.ranges.at(n) : std::make_pair<std::int64_t, std::int64_t>(0, 30);
  std::tie(r.lo, r.hi) = detail::range(o, declared.first, declared.second);
  std::int64_t prefixes = 0;

  if (c.kind == dsl::CheckDef::Kind::prove) {
    const ProofReport proof = prove_constant_sum(p, *c.base, r.lo, r.hi);
    for (const auto& s : proof.stages) r.details.push_back(detail::stage_line(s));
    for (const auto& [pt, v] : proof.base_cases) {
      if (v != c.base->value) r.fail({pt.get(n), v, c.base->value, "base case"});
    }
    for (std::int64_t m : proof.failing_n) {
      r.fail({m, summed_recurrence_check(p, m).value, BigRational(0), "summed recurrence"});
    }
    if (proof.conclusion) r.details.push_back("conclusion: " + *proof.conclusion);
    r.pass = r.pass && proof.pass();
    r.errata = proof.errata;
    for (std::int64_t m = std::max<std::int64_t>(r.lo, 0); m <= std::min(r.hi, kTelescopeMaxN); ++m) {
      detail::telescope_details(p, Point{{n, m}}, r, prefixes);
    }
  } else {
    const CertCheck cert = verify_certificate(p);
    r.details.push_back(cert.pass ? "stage certificate: ok (residual is the zero function)"
                                  : "stage certificate: FAILED (residual " + cert.residual.str() + ")");
    r.pass = cert.pass;
    if (!cert.pass && !p.erratum.empty()) r.errata.push_back(p.erratum);
    // Extra variables range over their declared values; n is capped for the telescoping scan.
    std::vector<std::pair<Var, std::pair<std::int64_t, std::int64_t>>> extra;
    for (const auto& [v, rg] : c.ranges) {
      if (v != n) extra.emplace_back(v, rg);
    }
    std::size_t summed = 0;
    for (std::int64_t m = r.lo; m <= std::min(r.hi, kTelescopeMaxN); ++m) {
      auto rec = [&](auto&& self, std::size_t i, Point at) -> void {
        if (i == extra.size()) {
          const SummedCheck s = summed_recurrence_check(p, at);
          summed += s.applicable;
          if (s.applicable && !s.pass) r.fail({m, s.value, BigRational(0), "summed recurrence at " + at.str()});
          detail::telescope_details(p, at, r, prefixes);
          return;
        }
        for (std::int64_t x = extra[i].second.first; x <= extra[i].second.second; ++x) {
          self(self, i + 1, at.with(extra[i].first, x));
        }
      };
      rec(rec, 0, Point{{n, m}});
    }
    r.details.push_back(summed ? "summed recurrence checked at " + std::to_string(summed) + " points"
                               : "summed recurrence: not applicable, the k-support is unbounded");
  }
  r.details.push_back("telescoped prefixes checked: " + std::to_string(prefixes));
  if (verify_certificate(p).pass) detail::mutation_details(p, o.seed, r);
  r.ms = clock.ms();
  return r;
}

inline std::vector<Report> verify(const Registry& reg, const Options& o) {
  std::vector<Report> out;
  if (o.id) {
    const auto* c = reg.resolve_check(*o.id, o.mode);
    if (!c) throw UsageError("unknown check '" + *o.id + "'");
    out.push_back(verify_check(*c, o));
    return out;
  }
  for (const auto* c : reg.checks()) {
    if (c->literal_of.empty()) out.push_back(verify_check(*reg.resolve_check(c->id, o.mode), o));
  }
  return out;
}

inline Report oracle_case(const IdentityCase& c, const Options& o) {
  detail::Stopwatch clock;
  Report r;
  r.command = "oracle";
  r.id = c.id;
  r.mode = c.literal_of.empty() ? Mode::corrected : Mode::literal;
  std::tie(r.lo, r.hi) = detail::range(o, c.valid_from, 100);
  if (r.lo < c.valid_from) {
    throw UsageError("malformed range: " + c.id + " is asserted only for " + std::string(var_name(c.param)) +
                     " >= " + std::to_string(c.valid_from));
  }
  r.absorb(check_identity(c, r.lo, r.hi, o.jobs));
  if (!r.pass && !c.erratum.empty()) r.errata.push_back(c.erratum);
  r.details.push_back("closed form: " + c.rhs.str(c.param));
  r.ms = clock.ms();
  return r;
}

inline std::vector<Report> oracle(const Registry& reg, const Options& o) {
  std::vector<Report> out;
  if (o.id) {
    const auto* c = reg.resolve_sum(*o.id, o.mode);
    if (!c) throw UsageError("unknown identity '" + *o.id + "'");
    out.push_back(oracle_case(*c, o));
    return out;
  }
  for (const auto* c : reg.sums()) {
    if (c->literal_of.empty()) out.push_back(oracle_case(*reg.resolve_sum(c->id, o.mode), o));
  }
  return out;
}

/// Checks the word model at n against what the corresponding proof claims.
inline void involution_at(const Registry& reg, WordModelId id, std::int64_t n, unsigned jobs, Report& r) {
  const InvolutionReport ir = check_involution({id, n}, jobs);
  auto expect = [&](const BigRational& got, const BigRational& want, const std::string& what) {
    if (got != want) r.fail({n, got, want, what});
  };
  using detail::big;
  std::string line = "n=" + std::to_string(n) + ": |S| " + std::to_string(ir.total_words) + ", fixed " +
                     std::to_string(ir.fixed) + " (signed " + std::to_string(ir.fixed_signed) + "), paired " +
                     std::to_string(ir.paired) + ", signed total " + std::to_string(ir.total_signed) +
                     ", violations closure " + std::to_string(ir.closure_count) + " involutivity " +
                     std::to_string(ir.involutivity_count) + " sign " + std::to_string(ir.sign_count);
  r.details.push_back(std::move(line));
  auto examples = [&](const char* kind, const std::vector<WordPair>& v) {
    for (std::size_t i = 0; i < std::min<std::size_t>(v.size(), 3); ++i) {
      r.details.push_back("  " + std::string(kind) + " violation: " + v[i].word + " -> " + v[i].image);
    }
  };
  examples("closure", ir.closure_violations);
  examples("involutivity", ir.involutivity_violations);
  examples("sign", ir.sign_violations);
  expect(big(static_cast<std::int64_t>(ir.fixed + ir.paired + ir.violating_words)),
         big(static_cast<std::int64_t>(ir.total_words)), "accounting");

  if (id == WordModelId::thm3) {
    const std::int64_t w = n % 2 == 0 ? -1 : 1;
    expect(big(static_cast<std::int64_t>(ir.fixed)), big(2 * n * (n + 1)), "fixed points");
    expect(big(ir.fixed_signed), big(w * 2 * n * (n + 1)), "fixed-point weight");
    expect(big(static_cast<std::int64_t>(ir.involutivity_count)), BigRational(0), "involutivity violations");
    expect(big(static_cast<std::int64_t>(ir.sign_count)), BigRational(0), "sign violations");
    if (n >= 2 && ir.closure_count == 0) r.fail({n, BigRational(0), BigRational(1), "closure violations expected"});
    if (n == 2) {
      const WordPair witness{"bbbb", "babbb"};
      if (std::find(ir.closure_violations.begin(), ir.closure_violations.end(), witness) ==
          ir.closure_violations.end()) {
        r.fail({n, BigRational(0), BigRational(1), "closure violation bbbb -> babbb"});
      }
    }
    expect(big(ir.total_signed), BigRational(2 * w) * eval_sum(reg.require_sum("thm3_printed"), n), "signed total");
    return;
  }
  const bool one = id == WordModelId::thm1;
  const std::int64_t t = one ? 2 * n + 2 : 2 * n + 3;
  expect(big(static_cast<std::int64_t>(ir.closure_count)), BigRational(0), "closure violations");
  expect(big(static_cast<std::int64_t>(ir.involutivity_count)), BigRational(0), "involutivity violations");
  expect(big(static_cast<std::int64_t>(ir.sign_count)), BigRational(0), "sign violations");
  expect(big(static_cast<std::int64_t>(ir.fixed)), big(t), "fixed points");
  expect(big(ir.fixed_signed), big(t), "fixed-point weight");
  const BigRational sum = eval_sum(reg.require_sum(one ? "thm1" : "thm2"), n);
  expect(big(ir.total_signed), one ? BigRational(2) * sum : sum, "signed total");
  for (const auto& s : ir.strata) {
    const std::int64_t k = (one ? n : n + 1) - s.index;
    const BigInt want = one ? binomial(n + k + 1, 2 * k + 1) * pow_int(2, 2 * k + 1)
                            : binomial(n + k + 1, 2 * k) * pow_int(2, 2 * k);
    expect(big(static_cast<std::int64_t>(s.words)), BigRational(want),
           "stratum with " + std::to_string(s.index) + " a's");
  }
}

inline std::pair<std::int64_t, std::int64_t> default_involution_range(WordModelId id) {
  switch (id) {
    case WordModelId::thm1: return {0, 7};
    case WordModelId::thm2: return {-1, 7};
    case WordModelId::thm3: return {1, 6};
  }
  return {0, 0};
}

inline Report involution_report(const Registry& reg, WordModelId id, const Options& o) {
  detail::Stopwatch clock;
  Report r;
  r.command = "involution";
  r.id = std::string(model_name(id));
  const auto [lo, hi] = default_involution_range(id);
  std::tie(r.lo, r.hi) = detail::range(o, lo, hi);
  const std::int64_t min_n = id == WordModelId::thm1 ? 0 : id == WordModelId::thm2 ? -1 : 1;
  if (r.lo < min_n) throw UsageError("malformed range: the " + r.id + " word model needs n >= " + std::to_string(min_n));
  for (std::int64_t n = r.lo; n <= r.hi; ++n) involution_at(reg, id, n, o.jobs, r);
  r.ms = clock.ms();
  return r;
}

inline std::vector<Report> involution(const Registry& reg, const Options& o) {
  std::vector<Report> out;
  if (o.id) {
    std::string name = *o.id;
    if (name.ends_with("_wz")) name.resize(name.size() - 3);
    const auto id = parse_model(name);
    if (!id) throw UsageError("no word model for '" + *o.id + "' (expected thm1, thm2 or thm3)");
    out.push_back(involution_report(reg, *id, o));
    return out;
  }
  for (auto id : {WordModelId::thm1, WordModelId::thm2, WordModelId::thm3}) out.push_back(involution_report(reg, id, o));
  return out;
}

inline Report discover_check(const dsl::CheckCase& c, std::size_t order) {
  detail::Stopwatch clock;
  Report r;
  r.command = "discover";
  r.id = c.id;
  r.mode = c.literal_of.empty() ? Mode::corrected : Mode::literal;
  r.lo = r.hi = static_cast<std::int64_t>(order);
  const WZProblem& p = c.problem;
  const auto found = discover_certificate(p.summand, p.shift_var, p.sum_var, order);
  if (!found) {
    r.pass = false;
    r.details.push_back("no recurrence of order " + std::to_string(order) + " with a hypergeometric certificate");
  } else {
    for (std::size_t j = 0; j < found->coeffs.size(); ++j) {
      r.details.push_back("a_" + std::to_string(j) + " = " + found->coeffs[j].str());
    }
    r.details.push_back("R = " + found->certificate.str());
    WZProblem q = p;
    q.coeffs = found->coeffs;
    q.certificate = found->certificate;
    const bool ok = verify_certificate(q).pass;
    r.pass = ok;
    r.details.push_back(ok ? "discovered pair verifies" : "discovered pair does not verify");
    if (found->coeffs.size() == p.coeffs.size()) {
      bool same = rf_equal(found->certificate, p.certificate);
      for (std::size_t j = 0; j < p.coeffs.size(); ++j) same = same && rf_equal(found->coeffs[j], p.coeffs[j]);
      r.details.push_back(same ? "equal to the bundled certificate" : "differs from the bundled certificate");
    }
  }
  r.ms = clock.ms();
  return r;
}

inline std::vector<Report> discover(const Registry& reg, const Options& o) {
  std::vector<Report> out;
  if (o.id) {
    const auto* c = reg.resolve_check(*o.id, o.mode);
    if (!c) throw UsageError("unknown check '" + *o.id + "'");
    out.push_back(discover_check(*c, o.order));
    return out;
  }
  for (const auto* c : reg.checks()) {
    if (c->literal_of.empty()) out.push_back(discover_check(*c, o.order));
  }
  return out;
}

inline std::vector<Report> lemmas(const Registry& reg, const Options& o) {
  std::vector<Report> out;
  for (const char* id : {"lemma_binom_tail", "lemma_floor_diag"}) {
    Options so = o;
    if (!so.n_max) so.n_max = 200;
    out.push_back(oracle_case(reg.require_sum(id), so));
  }
  const IdentityCase& thm3 = reg.require_sum("thm3");
  const IdentityCase& tail = reg.require_sum("lemma_binom_tail");
  const IdentityCase& diag = reg.require_sum("lemma_floor_diag");
  auto custom = [&](const std::string& id, std::int64_t hi, std::string note, auto&& check) {
    detail::Stopwatch clock;
    Report r;
    r.command = "lemmas";
    r.id = id;
    std::tie(r.lo, r.hi) = detail::range(o, 1, hi);
    if (r.lo < 1) throw UsageError("malformed range: " + id + " needs n >= 1");
    r.absorb(check_range(id, r.lo, r.hi, o.jobs, check));
    r.details.push_back(std::move(note));
    r.ms = clock.ms();
    out.push_back(std::move(r));
  };
  custom("thm3_difference", 200, "S(n+1) - S(n) against 2(n+1)",
         [&](std::int64_t n) { return thm3_difference(thm3, n); });
  custom("boundary_gap", 100, "diagonal minus tail against 2(n+1) - 3*4^n",
         [&](std::int64_t n) { return boundary_gap_check(tail, diag, n); });
  for (auto& r : out) r.command = "lemmas";
  return out;
}

}  // namespace wzkit::shell
