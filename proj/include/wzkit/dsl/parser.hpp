#pragma once

// Recursive-descent statement parser with a Pratt expression parser.
//
//   document    := { statement [";"] }
//   statement   := term | cert | recurrence | sum | check
//   term        := "term" NAME "(" params ")" ":=" expr
//   cert        := "cert" NAME "(" params ")" ":=" expr
//   recurrence  := "recurrence" NAME "(" params ")" ":=" expr "==" "delta" "(" NAME ")"
//   sum         := "sum" NAME "(" NAME ")" ":=" sumexpr "==" expr { sumclause }
//   sumexpr     := "sum" "(" NAME "," expr "," expr "," ( NAME | sumexpr ) ")"
//   sumclause   := "for" NAME ">=" int | "where" NAME "=" expr { "," NAME "=" expr } | literal
//   check       := "check" NAME ":=" ( "certify" NAME | "prove" NAME "base" int "=" expr )
//                  { "for" range { "," range } | literal }
//   range       := NAME "in" int ".." int
//   literal     := "literal" "of" NAME STRING
//   expr        := operators + - * / ^ and unary -, calls NAME "(" args ")", NAME, INT

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "wzkit/dsl/ast.hpp"
#include "wzkit/dsl/lexer.hpp"

namespace wzkit::dsl {

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  Document parse_document() {
    Document doc;
    while (peek().kind != Tok::end) {
      doc.statements.push_back(parse_statement());
      while (peek().kind == Tok::semicolon) next();
    }
    return doc;
  }

  Expr parse_expression() {
    Expr e = expr(0);
    expect(Tok::end, "end of expression");
    return e;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const {
    return toks_[std::min(pos_ + ahead, toks_.size() - 1)];
  }
  const Token& next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }
  [[noreturn]] static void fail(const Token& at, const std::string& msg) {
    throw ParseError(ParseError::Kind::syntax, static_cast<std::size_t>(at.pos.line),
                     static_cast<std::size_t>(at.pos.column), msg);
  }
  static std::string describe(const Token& t) {
    if (t.kind == Tok::name) return "'" + t.text + "'";
    if (t.kind == Tok::integer) return "integer " + t.text;
    if (t.kind == Tok::string) return "string \"" + t.text + "\"";
    return tok_name(t.kind);
  }
  const Token& expect(Tok kind, const std::string& context) {
    if (peek().kind != kind) {
      fail(peek(), std::string("expected ") + tok_name(kind) + " in " + context + ", found " + describe(peek()));
    }
    return next();
  }
  bool at_keyword(std::string_view word) const { return peek().kind == Tok::name && peek().text == word; }
  void expect_keyword(std::string_view word, const std::string& context) {
    if (!at_keyword(word)) {
      fail(peek(), "expected '" + std::string(word) + "' in " + context + ", found " + describe(peek()));
    }
    next();
  }
  std::string expect_name(const std::string& context) { return expect(Tok::name, context).text; }

  std::int64_t signed_int(const std::string& context) {
    bool neg = false;
    if (peek().kind == Tok::minus) {
      next();
      neg = true;
    }
    const Token& t = expect(Tok::integer, context);
    if (t.text.size() > 18) fail(t, "integer " + t.text + " is out of range");
    const std::int64_t v = std::stoll(t.text);
    return neg ? -v : v;
  }

  std::vector<std::string> params(const std::string& context) {
    std::vector<std::string> out;
    expect(Tok::lparen, context);
    if (peek().kind == Tok::rparen) {
      next();
      return out;
    }
    for (;;) {
      if (peek().kind != Tok::name) {
        fail(peek(), "expected parameter name in " + context + ", found " + describe(peek()));
      }
      out.push_back(next().text);
      if (peek().kind == Tok::comma) {
        next();
        continue;
      }
      if (peek().kind != Tok::rparen) {
        fail(peek(), "expected ',' or ')' to close the parameter list of " + context + ", found " +
                         describe(peek()));
      }
      next();
      return out;
    }
  }

  std::optional<Literal> literal_clause() {
    if (!at_keyword("literal")) return std::nullopt;
    next();
    expect_keyword("of", "literal clause");
    Literal lit;
    lit.of = expect_name("literal clause");
    lit.text = expect(Tok::string, "literal clause").text;
    return lit;
  }

  Statement parse_statement() {
    const Token& head = peek();
    if (head.kind != Tok::name) fail(head, "expected a statement keyword, found " + describe(head));
    if (head.text == "term" || head.text == "cert") {
      const bool is_term = head.text == "term";
      const Position p = next().pos;
      std::string name = expect_name(head.text + " definition");
      auto ps = params(head.text + " " + name);
      expect(Tok::define, head.text + " " + name);
      Expr body = expr(0);
      if (is_term) return TermDef{std::move(name), std::move(ps), std::move(body), p};
      return CertDef{std::move(name), std::move(ps), std::move(body), p};
    }
    if (head.text == "recurrence") {
      const Position p = next().pos;
      RecurrenceDef r;
      r.pos = p;
      r.name = expect_name("recurrence definition");
      r.params = params("recurrence " + r.name);
      expect(Tok::define, "recurrence " + r.name);
      r.lhs = expr(0);
      expect(Tok::equal2, "recurrence " + r.name);
      expect_keyword("delta", "recurrence " + r.name);
      expect(Tok::lparen, "delta(...)");
      r.cert = expect_name("delta(...)");
      expect(Tok::rparen, "delta(...)");
      return r;
    }
    if (head.text == "sum") {
      const Position p = next().pos;
      SumDef s;
      s.pos = p;
      s.name = expect_name("sum definition");
      expect(Tok::lparen, "sum " + s.name);
      s.param = expect_name("parameter of sum " + s.name);
      expect(Tok::rparen, "sum " + s.name);
      expect(Tok::define, "sum " + s.name);
      s.sum = sum_expr();
      expect(Tok::equal2, "sum " + s.name);
      s.rhs = expr(0);
      for (;;) {
        if (at_keyword("for")) {
          next();
          const std::string v = expect_name("for clause");
          if (v != s.param) fail(toks_[pos_ - 1], "for clause must constrain the parameter " + s.param);
          expect(Tok::ge, "for clause");
          s.valid_from = signed_int("for clause");
        } else if (at_keyword("where")) {
          next();
          for (;;) {
            WhereBinding b;
            b.var = expect_name("where clause");
            expect(Tok::equal, "where clause");
            b.value = expr(0);
            s.where.push_back(std::move(b));
            if (peek().kind != Tok::comma) break;
            next();
          }
        } else if (auto lit = literal_clause()) {
          s.literal = std::move(lit);
        } else {
          break;
        }
      }
      return s;
    }
    if (head.text == "check") {
      const Position p = next().pos;
      CheckDef c;
      c.pos = p;
      c.name = expect_name("check definition");
      expect(Tok::define, "check " + c.name);
      if (at_keyword("certify")) {
        next();
        c.kind = CheckDef::Kind::certify;
        c.recurrence = expect_name("certify");
      } else if (at_keyword("prove")) {
        next();
        c.kind = CheckDef::Kind::prove;
        c.recurrence = expect_name("prove");
        expect_keyword("base", "prove");
        c.base_point = signed_int("base case");
        expect(Tok::equal, "base case");
        c.base_value = expr(0);
      } else {
        fail(peek(), "expected 'certify' or 'prove' in check " + c.name + ", found " + describe(peek()));
      }
      for (;;) {
        if (at_keyword("for")) {
          next();
          for (;;) {
            RangeSpec r;
            r.var = expect_name("range");
            expect_keyword("in", "range");
            r.lo = signed_int("range");
            expect(Tok::dotdot, "range");
            r.hi = signed_int("range");
            c.ranges.push_back(std::move(r));
            if (peek().kind != Tok::comma) break;
            next();
          }
        } else if (auto lit = literal_clause()) {
          c.literal = std::move(lit);
        } else {
          break;
        }
      }
      return c;
    }
    fail(head, "unknown statement " + describe(head));
  }

  SumExpr sum_expr() {
    SumExpr s;
    s.pos = peek().pos;
    expect_keyword("sum", "summation");
    expect(Tok::lparen, "sum(...)");
    s.var = expect_name("summation variable");
    expect(Tok::comma, "sum(...)");
    s.lower = expr(0);
    expect(Tok::comma, "sum(...)");
    s.upper = expr(0);
    expect(Tok::comma, "sum(...)");
    if (at_keyword("sum") && peek(1).kind == Tok::lparen) {
      s.inner.push_back(sum_expr());
    } else {
      s.term = expect_name("summand");
    }
    expect(Tok::rparen, "sum(...)");
    return s;
  }

  Expr expr(int min_bp) {
    Expr lhs = prefix();
    for (;;) {
      const Token& op = peek();
      Expr::Kind kind;
      int lbp;
      int rbp;
      switch (op.kind) {
        case Tok::plus: kind = Expr::Kind::add; lbp = 10; rbp = 11; break;
        case Tok::minus: kind = Expr::Kind::sub; lbp = 10; rbp = 11; break;
        case Tok::star: kind = Expr::Kind::mul; lbp = 20; rbp = 21; break;
        case Tok::slash: kind = Expr::Kind::div; lbp = 20; rbp = 21; break;
        case Tok::caret: kind = Expr::Kind::power; lbp = 41; rbp = 40; break;
        default: return lhs;
      }
      if (lbp < min_bp) return lhs;
      const Position p = next().pos;
      Expr rhs = expr(rbp);
      lhs = Expr::binary(kind, std::move(lhs), std::move(rhs), p);
    }
  }

  Expr prefix() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::integer: {
        next();
        return Expr::number(BigInt(t.text), t.pos);
      }
      case Tok::name: {
        next();
        if (peek().kind != Tok::lparen) return Expr::identifier(t.text, t.pos);
        next();
        std::vector<Expr> args;
        if (peek().kind != Tok::rparen) {
          for (;;) {
            args.push_back(expr(0));
            if (peek().kind == Tok::comma) {
              next();
              continue;
            }
            break;
          }
        }
        expect(Tok::rparen, "arguments of " + t.text);
        return Expr::call(t.text, std::move(args), t.pos);
      }
      case Tok::lparen: {
        next();
        Expr e = expr(0);
        expect(Tok::rparen, "parenthesized expression");
        return e;
      }
      case Tok::minus: {
        next();
        return Expr::unary(expr(30), t.pos);
      }
      default:
        fail(t, "expected an expression, found " + describe(t));
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

inline Document parse_document(std::string_view src) { return Parser(src).parse_document(); }
inline Expr parse_expression(std::string_view src) { return Parser(src).parse_expression(); }

}  // namespace wzkit::dsl
