#pragma once

// The acceptance suite behind `wzcheck all`: one verdict per criterion, each
// backed by the reports it was decided from.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "wzkit/bundled_data.hpp"
#include "wzkit/dsl/parser.hpp"
#include "wzkit/dsl/printer.hpp"
#include "wzkit/shell/commands.hpp"
#include "wzkit/shell/schema.hpp"

namespace wzkit::shell {

struct Criterion {
  int number = 0;
  std::string title;
  bool pass = false;
  double ms = 0;
  std::vector<std::string> notes;
  std::vector<Report> reports;
};

/// Runs a command line quietly and returns its exit code.
using ExitProbe = std::function<int(const std::vector<std::string>&)>;

inline constexpr double kThm1Budget = 10'000;  // ms
inline constexpr double kSuiteBudget = 60'000;  // ms

namespace detail {

inline Options with_range(const Options& o, std::string id, std::int64_t lo, std::int64_t hi,
                          Mode mode = Mode::corrected) {
  Options x = o;
  x.id = std::move(id);
  x.n_min = lo;
  x.n_max = hi;
  x.mode = mode;
  return x;
}

inline bool all_pass(const std::vector<Report>& rs) {
  for (const auto& r : rs) {
    if (!r.pass) return false;
  }
  return true;
}

inline Report derivation_report(const Registry& reg, std::int64_t hi, unsigned jobs) {
  Stopwatch clock;
  Report r;
  r.command = "oracle";
  r.id = "corollary_derivations";
  r.lo = 0;
  r.hi = hi;
  for (const auto& d : corollary_derivations(reg, hi, jobs)) {
    r.absorb(d, d.id);
    r.details.push_back(d.id + ": " + (d.pass() ? "ok" : "FAILED"));
  }
  r.ms = clock.ms();
  return r;
}

}  // namespace detail

inline std::vector<Criterion> run_acceptance(const Registry& reg, const Options& base, const ExitProbe& probe) {
  using detail::with_range;
  const detail::Stopwatch suite;
  std::vector<Criterion> out;
  auto run = [&](int number, std::string title, auto&& body) {
    const detail::Stopwatch clock;
    Criterion c;
    c.number = number;
    c.title = std::move(title);
    c.pass = body(c);
    c.ms = clock.ms();
    out.push_back(std::move(c));
  };

  run(1, "thm1 oracle, n in 0..300, under 10 s", [&](Criterion& c) {
    c.reports = oracle(reg, with_range(base, "thm1", 0, 300));
    c.notes.push_back("oracle time " + std::to_string(static_cast<long>(c.reports[0].ms)) + " ms");
    return c.reports[0].pass && c.reports[0].ms < kThm1Budget;
  });

  run(2, "thm2 oracle, n in -1..300", [&](Criterion& c) {
    c.reports = oracle(reg, with_range(base, "thm2", -1, 300));
    return detail::all_pass(c.reports);
  });

  run(3, "thm3 holds on 1..300; printed form is (-1)^(n+1) n(n+1) on 1..100 and fails at even n", [&](Criterion& c) {
    c.reports = oracle(reg, with_range(base, "thm3", 1, 300));
    const Report printed = oracle(reg, with_range(base, "thm3", 1, 100, Mode::literal)).front();
    bool ok = c.reports[0].pass && printed.mode == Mode::literal && !printed.errata.empty();
    std::size_t at = 0;
    for (std::int64_t n = 1; n <= 100; ++n) {
      const BigRational nn(static_cast<long long>(n * (n + 1)));
      const bool even = n % 2 == 0;
      if (even) {
        ok = ok && at < printed.failures.size() && printed.failures[at].n == n &&
             printed.failures[at].lhs == -nn && printed.failures[at].rhs == nn;
        ++at;
      }
    }
    ok = ok && at == printed.failures.size();
    c.notes.push_back("printed form fails at " + std::to_string(printed.failures.size()) + " even n");
    c.reports.push_back(printed);
    return ok;
  });

  run(4, "corollaries and their derivations", [&](Criterion& c) {
    c.reports = oracle(reg, with_range(base, "cor1", 0, 200));
    for (const char* id : {"cor2", "cor3", "cor4", "cor5"}) {
      c.reports.push_back(oracle(reg, with_range(base, id, 0, 100)).front());
    }
    c.reports.push_back(detail::derivation_report(reg, 100, base.jobs));
    return detail::all_pass(c.reports);
  });

  run(5, "lemmas, thm3 difference on 1..200, boundary gap on 1..100", [&](Criterion& c) {
    Options o = base;
    o.id.reset();
    c.reports = lemmas(reg, o);
    return detail::all_pass(c.reports);
  });

  run(6, "certificates: corrected pairs pass, printed thm1 pair fails, mutations caught", [&](Criterion& c) {
    Options o = base;
    o.n_min.reset();
    o.n_max.reset();
    for (const char* id : {"thm1_wz", "thm2_wz", "thm3_wz"}) {
      o.id = id;
      c.reports.push_back(verify(reg, o).front());
    }
    o.id = "thm1";
    o.mode = Mode::literal;
    const Report lit = verify(reg, o).front();
    const bool residual = !verify_certificate(reg.resolve_check("thm1", Mode::literal)->problem).residual.is_zero();
    c.notes.push_back(std::string("printed thm1 residual ") + (residual ? "nonzero" : "zero"));
    c.reports.push_back(lit);
    bool ok = detail::all_pass({c.reports[0], c.reports[1], c.reports[2]});
    for (std::size_t i = 0; i < 3; ++i) {
      const std::string want = "mutations caught: " + std::to_string(kMutations) + "/" + std::to_string(kMutations);
      bool caught = false;
      for (const auto& d : c.reports[i].details) caught = caught || d.starts_with(want);
      ok = ok && caught;
    }
    return ok && !lit.pass && lit.mode == Mode::literal && residual && !lit.errata.empty();
  });

  run(7, "certificate discovery", [&](Criterion& c) {
    const auto& thm1 = *reg.resolve_check("thm1", Mode::corrected);
    const auto& thm2 = *reg.resolve_check("thm2", Mode::corrected);
    c.reports.push_back(discover_check(thm1, 1));
    c.reports.push_back(discover_check(thm2, 1));
    const auto found2 = discover_certificate(thm2.problem.summand, Var::n, Var::k, 1);
    const bool same = found2 && rf_equal(found2->certificate, thm2.problem.certificate);
    c.notes.push_back(std::string("thm2 certificate ") + (same ? "equals" : "differs from") + " the printed one");
    Report zero = discover_check(thm1, 0);
    const bool none = !zero.pass;
    c.notes.push_back(std::string("order 0 on thm1: ") + (none ? "no solution" : "unexpected solution"));
    c.reports.push_back(zero);
    return c.reports[0].pass && c.reports[1].pass && same && none;
  });

  auto invol = [&](Criterion& c, const char* id, std::int64_t lo, std::int64_t hi) {
    c.reports = involution(reg, with_range(base, id, lo, hi));
    return detail::all_pass(c.reports);
  };
  run(8, "thm1 words, n in 0..7", [&](Criterion& c) { return invol(c, "thm1", 0, 7); });
  run(9, "thm2 words, n in -1..7", [&](Criterion& c) { return invol(c, "thm2", -1, 7); });
  run(10, "thm3 words, n in 1..6", [&](Criterion& c) { return invol(c, "thm3", 1, 6); });

  run(11, "definitions round-trip, reports match the schema, exit codes, suite under 60 s", [&](Criterion& c) {
    bool ok = true;
    for (const auto& f : bundled::kFiles) {
      const auto a = dsl::parse_document(f.text);
      const auto b = dsl::parse_document(dsl::print(a));
      if (!(a == b) || dsl::print(b) != dsl::print(a)) {
        ok = false;
        c.notes.push_back(std::string(f.name) + " does not round-trip");
      }
    }
    std::size_t validated = 0;
    for (const auto& prev : out) {
      for (const auto& r : prev.reports) {
        const auto errors = validate(nlohmann::json::parse(to_json(r).dump()));
        ++validated;
        for (const auto& e : errors) {
          ok = false;
          c.notes.push_back(r.id + ": " + e);
        }
        std::ostringstream text;
        write_text(text, r);
        for (const auto& f : r.failures) {
          if (text.str().find(failure_line(f)) == std::string::npos) {
            ok = false;
            c.notes.push_back(r.id + ": text rendering lacks " + failure_line(f));
          }
        }
      }
    }
    c.notes.push_back(std::to_string(validated) + " reports validated");
    const std::vector<std::pair<std::vector<std::string>, int>> cases{
        {{"oracle", "--id", "thm1", "--n-min", "0", "--n-max", "30"}, 0},
        {{"oracle", "--id", "thm3_printed", "--n-min", "1", "--n-max", "10"}, 1},
        {{"verify", "--id", "thm1", "--mode", "literal"}, 1},
        {{"oracle", "--id", "no_such_identity"}, 2},
        {{"oracle", "--id", "thm1", "--n-min", "5", "--n-max", "1"}, 2},
        {{"oracle", "--n-max", "ten"}, 2},
        {{"frobnicate"}, 2},
    };
    for (const auto& [args, want] : cases) {
      const int got = probe(args);
      if (got != want) {
        ok = false;
        std::string line;
        for (const auto& a : args) line += a + " ";
        c.notes.push_back("exit " + std::to_string(got) + " (expected " + std::to_string(want) + "): " + line);
      }
    }
    const double elapsed = suite.ms();
    c.notes.push_back("suite time " + std::to_string(static_cast<long>(elapsed)) + " ms");
    return ok && elapsed < kSuiteBudget;
  });
  return out;
}

/// Folds the criteria into one summary report.
inline Report acceptance_summary(const std::vector<Criterion>& cs, double ms) {
  Report r;
  r.command = "all";
  r.id = "acceptance";
  r.lo = 1;
  r.hi = static_cast<std::int64_t>(cs.size());
  for (const auto& c : cs) {
    r.pass = r.pass && c.pass;
    std::string line = "criterion " + std::to_string(c.number) + ": " + (c.pass ? "PASS" : "FAIL") + "  " + c.title;
    for (const auto& n : c.notes) line += "; " + n;
    r.details.push_back(std::move(line));
  }
  r.ms = ms;
  return r;
}

}  // namespace wzkit::shell
