#pragma once

// All identity definitions known to the tool: the bundled files plus any
// user-supplied ones, with lookup by id and literal/corrected mode.

#include <algorithm>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wzkit/bundled_data.hpp"
#include "wzkit/dsl/semantic.hpp"

namespace wzkit {

enum class Mode { literal, corrected };

inline std::string_view mode_name(Mode m) { return m == Mode::literal ? "literal" : "corrected"; }

class Registry {
 public:
  /// Parses every bundled definition file. Throws ParseError (prefixed with
  /// the file name) on malformed content.
  static Registry bundled() {
    Registry r;
    for (const auto& f : bundled::kFiles) r.add(std::string(f.name), f.text);
    return r;
  }

  void add(const std::string& source, std::string_view text) {
    dsl::SpecDocument doc;
    try {
      doc = dsl::parse_spec(text);
    } catch (const ParseError& e) {
      throw ParseError(e.kind(), e.line(), e.column(), source + ": " + e.message());
    }
    for (const auto& name : doc.names) {
      for (const auto& [src, other] : docs_) {
        if (std::find(other.names.begin(), other.names.end(), name) != other.names.end()) {
          throw ParseError(ParseError::Kind::resolution, 1, 1,
                           source + ": '" + name + "' is already defined in " + src);
        }
      }
    }
    docs_.emplace_back(source, std::move(doc));
  }

  const std::vector<std::pair<std::string, dsl::SpecDocument>>& documents() const { return docs_; }

  const IdentityCase* sum(std::string_view id) const {
    for (const auto& [src, d] : docs_) {
      if (auto* s = d.find_sum(id)) return s;
    }
    return nullptr;
  }
  const dsl::CheckCase* check(std::string_view id) const {
    for (const auto& [src, d] : docs_) {
      if (auto* c = d.find_check(id)) return c;
    }
    return nullptr;
  }

  std::vector<const IdentityCase*> sums() const {
    std::vector<const IdentityCase*> out;
    for (const auto& [src, d] : docs_) {
      for (const auto& s : d.sums) out.push_back(&s);
    }
    return out;
  }
  std::vector<const dsl::CheckCase*> checks() const {
    std::vector<const dsl::CheckCase*> out;
    for (const auto& [src, d] : docs_) {
      for (const auto& c : d.checks) out.push_back(&c);
    }
    return out;
  }

  /// The sum to run for `id` in `mode`: in literal mode a corrected id is
  /// replaced by the entry declared as its literal variant, if any.
  const IdentityCase* resolve_sum(std::string_view id, Mode mode) const {
    const IdentityCase* s = sum(id);
    if (!s || mode == Mode::corrected || !s->literal_of.empty()) return s;
    for (const auto* c : sums()) {
      if (c->literal_of == id) return c;
    }
    return s;
  }

  /// As resolve_sum, for checks; `thm1` also finds `thm1_wz`.
  const dsl::CheckCase* resolve_check(std::string_view id, Mode mode) const {
    const dsl::CheckCase* c = check(id);
    if (!c) c = check(std::string(id) + "_wz");
    if (!c || mode == Mode::corrected || !c->literal_of.empty()) return c;
    for (const auto* x : checks()) {
      if (x->literal_of == c->id) return x;
    }
    return c;
  }

  const IdentityCase& require_sum(std::string_view id) const {
    if (auto* s = sum(id)) return *s;
    throw UnsupportedArgument("unknown identity '" + std::string(id) + "'");
  }

 private:
  std::vector<std::pair<std::string, dsl::SpecDocument>> docs_;
};

/// Re-derives each corollary from the theorem oracles per its proof recipe
/// and compares with the corollary's own sum. lhs = direct sum, rhs = derived.
inline std::vector<IdentityReport> corollary_derivations(const Registry& reg, std::int64_t hi, unsigned jobs = 1) {
  const IdentityCase& thm1 = reg.require_sum("thm1");
  const IdentityCase& thm3 = reg.require_sum("thm3");
  const IdentityCase& cor1 = reg.require_sum("cor1");
  const IdentityCase& cor2 = reg.require_sum("cor2");
  const IdentityCase& cor3 = reg.require_sum("cor3");
  const IdentityCase& cor4 = reg.require_sum("cor4");
  const IdentityCase& cor5 = reg.require_sum("cor5");
  std::vector<IdentityReport> out;
  out.push_back(check_range("cor1 = thm1 + thm3", 1, hi, jobs, [&](std::int64_t n) {
    return PointCheck{n, eval_sum(cor1, n), eval_sum(thm1, n) + eval_sum(thm3, n)};
  }));
  out.push_back(check_range("cor2 = 2 (thm3 + cor1)", 1, hi, jobs, [&](std::int64_t n) {
    return PointCheck{n, eval_sum(cor2, n), BigRational(2) * (eval_sum(thm3, n) + eval_sum(cor1, n))};
  }));
  out.push_back(check_range("cor3(n) = cor1(2n+1)", 0, hi, jobs, [&](std::int64_t n) {
    return PointCheck{n, eval_sum(cor3, n), eval_sum(cor1, 2 * n + 1)};
  }));
  out.push_back(check_range("cor4(n) = cor1(2n)", 0, hi, jobs, [&](std::int64_t n) {
    return PointCheck{n, eval_sum(cor4, n), eval_sum(cor1, 2 * n)};
  }));
  out.push_back(check_range("cor5(l) = sum of thm1(2k+1), k = 0..2l", 0, hi, jobs, [&](std::int64_t l) {
    BigRational derived;
    for (std::int64_t k = 0; k <= 2 * l; ++k) derived += eval_sum(thm1, 2 * k + 1);
    return PointCheck{l, eval_sum(cor5, l), derived};
  }));
  return out;
}

}  // namespace wzkit
