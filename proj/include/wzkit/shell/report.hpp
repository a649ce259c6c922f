#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "wzkit/exactnum.hpp"
#include "wzkit/registry.hpp"

namespace wzkit::shell {

struct Failure {
  std::int64_t n = 0;
  BigRational lhs;
  BigRational rhs;
  std::string what;  // optional label for non-sum checks
};

struct Report {
  std::string command;
  std::string id;
  Mode mode = Mode::corrected;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  bool pass = true;
  std::vector<Failure> failures;
  std::vector<std::string> errata;
  std::vector<std::string> details;
  double ms = 0;

  void fail(Failure f) {
    pass = false;
    failures.push_back(std::move(f));
  }
  void absorb(const IdentityReport& r, const std::string& what = {}) {
    for (const auto& f : r.failures) fail({f.n, f.lhs, f.rhs, what});
  }
};

inline nlohmann::ordered_json to_json(const Report& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["id"] = r.id;
  j["mode"] = std::string(mode_name(r.mode));
  j["range"] = {r.lo, r.hi};
  j["status"] = r.pass ? "pass" : "fail";
  auto fails = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json x;
    x["n"] = f.n;
    x["lhs"] = f.lhs.fraction_str();
    x["rhs"] = f.rhs.fraction_str();
    if (!f.what.empty()) x["what"] = f.what;
    fails.push_back(std::move(x));
  }
  j["failures"] = std::move(fails);
  j["errata"] = r.errata;
  if (!r.details.empty()) j["details"] = r.details;
  j["ms"] = r.ms;
  return j;
}

inline std::string failure_line(const Failure& f) {
  std::string s = "n=" + std::to_string(f.n) + ": lhs " + f.lhs.fraction_str() + ", rhs " + f.rhs.fraction_str();
  if (!f.what.empty()) s += " (" + f.what + ")";
  return s;
}

inline void write_text(std::ostream& os, const Report& r) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.1f", r.ms);
  os << r.command << ' ' << r.id << " [" << mode_name(r.mode) << "] " << r.lo << ".." << r.hi << ": "
     << (r.pass ? "PASS" : "FAIL") << " (" << ms << " ms)\n";
  for (const auto& f : r.failures) os << "  failure " << failure_line(f) << '\n';
  for (const auto& e : r.errata) os << "  erratum: " << e << '\n';
  for (const auto& d : r.details) os << "  " << d << '\n';
}

inline void write_json(std::ostream& os, const Report& r) { os << to_json(r).dump() << '\n'; }

}  // namespace wzkit::shell
