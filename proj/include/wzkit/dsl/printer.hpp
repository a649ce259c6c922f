#pragma once

// Canonical text for documents. Parentheses are emitted exactly where the
// parser's precedences need them, so printing and re-parsing yields the same
// tree.

#include <string>
#include <variant>

#include "wzkit/dsl/ast.hpp"

namespace wzkit::dsl {

namespace detail {

inline int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::add:
    case Expr::Kind::sub: return 10;
    case Expr::Kind::mul:
    case Expr::Kind::div: return 20;
    case Expr::Kind::neg: return 30;
    case Expr::Kind::power: return 40;
    default: return 50;
  }
}

inline std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace detail

inline std::string print(const Expr& e) {
  auto wrap = [](const Expr& x, bool parens) { return parens ? "(" + print(x) + ")" : print(x); };
  const int p = detail::precedence(e);
  switch (e.kind) {
    case Expr::Kind::number: return e.value.get_str();
    case Expr::Kind::name: return e.name;
    case Expr::Kind::call: {
      std::string s = e.name + "(";
      for (std::size_t i = 0; i < e.args.size(); ++i) s += (i ? ", " : "") + print(e.args[i]);
      return s + ")";
    }
    case Expr::Kind::neg: return "-" + wrap(e.args[0], detail::precedence(e.args[0]) < p);
    case Expr::Kind::power:
      return wrap(e.args[0], detail::precedence(e.args[0]) <= p) + "^" +
             wrap(e.args[1], detail::precedence(e.args[1]) < p);
    default: {
      const char* op = e.kind == Expr::Kind::add   ? " + "
                       : e.kind == Expr::Kind::sub ? " - "
                       : e.kind == Expr::Kind::mul ? "*"
                                                   : "/";
      return wrap(e.args[0], detail::precedence(e.args[0]) < p) + op +
             wrap(e.args[1], detail::precedence(e.args[1]) <= p);
    }
  }
}

inline std::string print(const SumExpr& s) {
  return "sum(" + s.var + ", " + print(s.lower) + ", " + print(s.upper) + ", " +
         (s.inner.empty() ? s.term : print(s.inner.front())) + ")";
}

namespace detail {

inline std::string params(const std::vector<std::string>& ps) {
  std::string s = "(";
  for (std::size_t i = 0; i < ps.size(); ++i) s += (i ? ", " : "") + ps[i];
  return s + ")";
}

inline std::string literal(const std::optional<Literal>& lit) {
  return lit ? " literal of " + lit->of + " " + quote(lit->text) : "";
}

}  // namespace detail

inline std::string print(const Statement& st) {
  return std::visit(
      [](const auto& s) -> std::string {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TermDef>) {
          return "term " + s.name + detail::params(s.params) + " := " + print(s.body);
        } else if constexpr (std::is_same_v<T, CertDef>) {
          return "cert " + s.name + detail::params(s.params) + " := " + print(s.body);
        } else if constexpr (std::is_same_v<T, RecurrenceDef>) {
          return "recurrence " + s.name + detail::params(s.params) + " := " + print(s.lhs) + " == delta(" +
                 s.cert + ")";
        } else if constexpr (std::is_same_v<T, SumDef>) {
          std::string out = "sum " + s.name + "(" + s.param + ") := " + print(s.sum) + " == " + print(s.rhs);
          if (s.valid_from) out += " for " + s.param + " >= " + std::to_string(*s.valid_from);
          for (std::size_t i = 0; i < s.where.size(); ++i) {
            out += (i ? ", " : " where ") + s.where[i].var + " = " + print(s.where[i].value);
          }
          return out + detail::literal(s.literal);
        } else {
          std::string out = "check " + s.name + " := ";
          if (s.kind == CheckDef::Kind::certify) {
            out += "certify " + s.recurrence;
          } else {
            out += "prove " + s.recurrence + " base " + std::to_string(s.base_point) + " = " + print(s.base_value);
          }
          for (std::size_t i = 0; i < s.ranges.size(); ++i) {
            const auto& r = s.ranges[i];
            out += (i ? ", " : " for ") + r.var + " in " + std::to_string(r.lo) + ".." + std::to_string(r.hi);
          }
          return out + detail::literal(s.literal);
        }
      },
      st);
}

inline std::string print(const Document& doc) {
  std::string out;
  for (const auto& st : doc.statements) out += print(st) + "\n";
  return out;
}

}  // namespace wzkit::dsl
