#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <utility>

#include "wzkit/errors.hpp"

namespace wzkit {

/// The fixed, globally ordered variable set. Declaration order is the
/// lexicographic order used by polynomial normal forms.
enum class Var : std::uint8_t { n = 0, k = 1, m = 2, l = 3 };

inline constexpr std::size_t kVarCount = 4;
inline constexpr std::array<Var, kVarCount> kAllVars{Var::n, Var::k, Var::m, Var::l};

constexpr std::size_t index(Var v) { return static_cast<std::size_t>(v); }

inline std::string_view var_name(Var v) {
  static constexpr std::array<std::string_view, kVarCount> names{"n", "k", "m", "l"};
  return names[index(v)];
}

inline std::optional<Var> parse_var(std::string_view name) {
  for (Var v : kAllVars) {
    if (var_name(v) == name) return v;
  }
  return std::nullopt;
}

using VarSet = std::bitset<kVarCount>;

/// Integer assignment to a subset of the variables.
class Point {
 public:
  Point() = default;
  Point(std::initializer_list<std::pair<Var, std::int64_t>> values) {
    for (const auto& [v, x] : values) set(v, x);
  }

  Point& set(Var v, std::int64_t x) {
    values_[index(v)] = x;
    assigned_.set(index(v));
    return *this;
  }
  Point with(Var v, std::int64_t x) const {
    Point p = *this;
    return p.set(v, x);
  }

  bool has(Var v) const { return assigned_.test(index(v)); }
  std::int64_t get(Var v) const {
    if (!has(v)) {
      throw MissingVariable("no value assigned to variable " + std::string(var_name(v)));
    }
    return values_[index(v)];
  }
  std::int64_t operator[](Var v) const { return get(v); }

  std::string str() const {
    std::string s = "(";
    bool first = true;
    for (Var v : kAllVars) {
      if (!has(v)) continue;
      if (!first) s += ", ";
      first = false;
      s += std::string(var_name(v)) + "=" + std::to_string(values_[index(v)]);
    }
    return s + ")";
  }

 private:
  std::array<std::int64_t, kVarCount> values_{};
  VarSet assigned_;
};

}  // namespace wzkit
