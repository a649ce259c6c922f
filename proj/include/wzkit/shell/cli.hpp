#pragma once

// Command-line front end. Exit codes: 0 all checks pass, 1 a mathematical
// failure was found, 2 usage or parse error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wzkit/shell/acceptance.hpp"

namespace wzkit::shell {

inline constexpr int kExitPass = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

namespace detail {

inline Registry load_registry(const Options& o) {
  Registry reg = Registry::bundled();
  if (o.spec) {
    std::ifstream in(*o.spec);
    if (!in) throw UsageError("cannot read " + *o.spec);
    std::stringstream ss;
    ss << in.rdbuf();
    reg.add(*o.spec, ss.str());
  }
  return reg;
}

inline void emit(std::ostream& out, const Options& o, const Report& r) {
  if (o.json) write_json(out, r);
  else write_text(out, r);
}

}  // namespace detail

inline int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of binomial summation identities and their proofs", "wzcheck"};
  app.require_subcommand(1);
  Options o;
  std::string mode = "corrected";
  std::string format = "text";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--spec", o.spec, "Extra definition file loaded after the bundled ones");
    sub->add_option("--id", o.id, "Identity, check or word model to run (default: all)");
    sub->add_option("--mode", mode, "Which variant to run")->check(CLI::IsMember({"literal", "corrected"}));
    sub->add_option("--n-min", o.n_min, "First parameter value");
    sub->add_option("--n-max", o.n_max, "Last parameter value");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--seed", o.seed, "Seed for certificate mutation tests");
  };
  CLI::App* verify_cmd = app.add_subcommand("verify", "Check certificates and run the proof pipeline");
  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Evaluate sums exactly against their closed forms");
  CLI::App* invol_cmd = app.add_subcommand("involution", "Enumerate words and check the sign-reversing maps");
  CLI::App* discover_cmd = app.add_subcommand("discover", "Search for a recurrence and certificate");
  CLI::App* lemmas_cmd = app.add_subcommand("lemmas", "Check the auxiliary sums used by the double-sum proof");
  CLI::App* all_cmd = app.add_subcommand("all", "Run the full acceptance suite");
  for (auto* s : {verify_cmd, oracle_cmd, invol_cmd, discover_cmd, lemmas_cmd, all_cmd}) common(s);
  discover_cmd->add_option("--order", o.order, "Recurrence order");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "wzcheck: " << e.what() << '\n';
    return kExitUsage;
  }
  o.mode = mode == "literal" ? Mode::literal : Mode::corrected;
  o.json = format == "json";

  try {
    const Registry reg = detail::load_registry(o);
    if (all_cmd->parsed()) {
      const detail::Stopwatch clock;
      auto probe = [](const std::vector<std::string>& a) {
        std::ostringstream sink;
        return run_command(a, sink, sink);
      };
      const auto criteria = run_acceptance(reg, o, probe);
      for (const auto& c : criteria) {
        for (const auto& r : c.reports) detail::emit(out, o, r);
      }
      const Report summary = acceptance_summary(criteria, clock.ms());
      detail::emit(out, o, summary);
      return summary.pass ? kExitPass : kExitFailure;
    }
    std::vector<Report> reports;
    if (verify_cmd->parsed()) reports = verify(reg, o);
    else if (oracle_cmd->parsed()) reports = oracle(reg, o);
    else if (invol_cmd->parsed()) reports = involution(reg, o);
    else if (discover_cmd->parsed()) reports = discover(reg, o);
    else reports = lemmas(reg, o);
    bool pass = true;
    for (const auto& r : reports) {
      detail::emit(out, o, r);
      pass = pass && r.pass;
    }
    return pass ? kExitPass : kExitFailure;
  } catch (const ParseError& e) {
    err << "wzcheck: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "wzcheck: " << e.what() << '\n';
    return kExitUsage;
  }
}

inline int run_command(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run_command(args, std::cout, std::cerr);
}

}  // namespace wzkit::shell
