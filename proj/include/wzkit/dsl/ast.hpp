#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wzkit/exactnum.hpp"

namespace wzkit::dsl {

struct Position {
  int line = 1;
  int column = 1;
};

struct Expr {
  enum class Kind { number, name, call, neg, add, sub, mul, div, power };

  Kind kind = Kind::number;
  BigInt value;        // number
  std::string name;    // name, call
  std::vector<Expr> args;  // call arguments or operands
  Position pos;

  static Expr number(BigInt v, Position p = {}) {
    Expr e;
    e.kind = Kind::number;
    e.value = std::move(v);
    e.pos = p;
    return e;
  }
  static Expr identifier(std::string n, Position p = {}) {
    Expr e;
    e.kind = Kind::name;
    e.name = std::move(n);
    e.pos = p;
    return e;
  }
  static Expr call(std::string n, std::vector<Expr> a, Position p = {}) {
    Expr e;
    e.kind = Kind::call;
    e.name = std::move(n);
    e.args = std::move(a);
    e.pos = p;
    return e;
  }
  static Expr unary(Expr operand, Position p = {}) {
    Expr e;
    e.kind = Kind::neg;
    e.args.push_back(std::move(operand));
    e.pos = p;
    return e;
  }
  static Expr binary(Kind k, Expr l, Expr r, Position p = {}) {
    Expr e;
    e.kind = k;
    e.args.push_back(std::move(l));
    e.args.push_back(std::move(r));
    e.pos = p;
    return e;
  }

  /// Structural equality; positions are ignored.
  friend bool operator==(const Expr& a, const Expr& b) {
    return a.kind == b.kind && a.value == b.value && a.name == b.name && a.args == b.args;
  }
};

struct Literal {
  std::string of;
  std::string text;
  friend bool operator==(const Literal&, const Literal&) = default;
};

struct RangeSpec {
  std::string var;
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  friend bool operator==(const RangeSpec&, const RangeSpec&) = default;
};

struct TermDef {
  std::string name;
  std::vector<std::string> params;
  Expr body;
  Position pos;
  friend bool operator==(const TermDef& a, const TermDef& b) {
    return a.name == b.name && a.params == b.params && a.body == b.body;
  }
};

struct CertDef {
  std::string name;
  std::vector<std::string> params;
  Expr body;
  Position pos;
  friend bool operator==(const CertDef& a, const CertDef& b) {
    return a.name == b.name && a.params == b.params && a.body == b.body;
  }
};

/// lhs == delta(cert)
struct RecurrenceDef {
  std::string name;
  std::vector<std::string> params;
  Expr lhs;
  std::string cert;
  Position pos;
  friend bool operator==(const RecurrenceDef& a, const RecurrenceDef& b) {
    return a.name == b.name && a.params == b.params && a.lhs == b.lhs && a.cert == b.cert;
  }
};

/// sum(var, lower, upper, body) where body is a term name or another sum.
struct SumExpr {
  std::string var;
  Expr lower;
  Expr upper;
  std::string term;                  // innermost summand, when inner is empty
  std::vector<SumExpr> inner;        // zero or one nested sum
  Position pos;
  friend bool operator==(const SumExpr& a, const SumExpr& b) {
    return a.var == b.var && a.lower == b.lower && a.upper == b.upper && a.term == b.term &&
           a.inner == b.inner;
  }
};

struct WhereBinding {
  std::string var;
  Expr value;
  friend bool operator==(const WhereBinding&, const WhereBinding&) = default;
};

struct SumDef {
  std::string name;
  std::string param;
  SumExpr sum;
  Expr rhs;
  std::optional<std::int64_t> valid_from;
  std::vector<WhereBinding> where;
  std::optional<Literal> literal;
  Position pos;
  friend bool operator==(const SumDef& a, const SumDef& b) {
    return a.name == b.name && a.param == b.param && a.sum == b.sum && a.rhs == b.rhs &&
           a.valid_from == b.valid_from && a.where == b.where && a.literal == b.literal;
  }
};

struct CheckDef {
  enum class Kind { certify, prove };
  std::string name;
  Kind kind = Kind::certify;
  std::string recurrence;
  std::int64_t base_point = 0;  // prove only
  Expr base_value;              // prove only
  std::vector<RangeSpec> ranges;
  std::optional<Literal> literal;
  Position pos;
  friend bool operator==(const CheckDef& a, const CheckDef& b) {
    return a.name == b.name && a.kind == b.kind && a.recurrence == b.recurrence &&
           a.base_point == b.base_point && a.base_value == b.base_value && a.ranges == b.ranges &&
           a.literal == b.literal;
  }
};

using Statement = std::variant<TermDef, CertDef, RecurrenceDef, SumDef, CheckDef>;

struct Document {
  std::vector<Statement> statements;
  friend bool operator==(const Document&, const Document&) = default;
};

}  // namespace wzkit::dsl
