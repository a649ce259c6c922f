#include <gtest/gtest.h>

#include "wzkit/bundled_data.hpp"
#include "wzkit/dsl/parser.hpp"
#include "wzkit/dsl/printer.hpp"
#include "wzkit/dsl/semantic.hpp"

namespace {

using namespace wzkit::dsl;
using wzkit::ParseError;

ParseError parse_failure(std::string_view src) {
  try {
    parse_spec(src);
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no error for: " << src;
  return ParseError(ParseError::Kind::syntax, 0, 0, "");
}

TEST(Lexer, TokensAndPositions) {
  const auto toks = tokenize("term F(n) := 2^k # comment\n  x .. >=");
  ASSERT_EQ(toks.size(), 13u);
  EXPECT_EQ(toks.back().kind, Tok::end);
  EXPECT_EQ(toks[4].kind, Tok::rparen);
  EXPECT_EQ(toks[5].kind, Tok::define);
  EXPECT_EQ(toks[9].pos.line, 2);
  EXPECT_EQ(toks[9].pos.column, 3);
  EXPECT_EQ(toks[10].kind, Tok::dotdot);
  EXPECT_EQ(toks[11].kind, Tok::ge);
}

TEST(Lexer, Errors) {
  const ParseError e = parse_failure("term F(n) := 1 $");
  EXPECT_EQ(e.kind(), ParseError::Kind::lexical);
  EXPECT_EQ(e.column(), 16u);
  EXPECT_EQ(parse_failure("sum s(n) := sum(k, 0, n, T) == 1 literal of x \"abc").kind(), ParseError::Kind::lexical);
}

TEST(Parser, Precedence) {
  EXPECT_EQ(print(parse_expression("a - b - c")), "a - b - c");
  EXPECT_EQ(print(parse_expression("a - (b - c)")), "a - (b - c)");
  EXPECT_EQ(print(parse_expression("2^3^2")), "2^3^2");
  EXPECT_EQ(print(parse_expression("(2^3)^2")), "(2^3)^2");
  EXPECT_EQ(print(parse_expression("-2^2")), "-2^2");
  EXPECT_EQ(print(parse_expression("(-2)^2")), "(-2)^2");
  EXPECT_EQ(print(parse_expression("a/(b*c)")), "a/(b*c)");
  EXPECT_EQ(print(parse_expression("-(a + b)*c")), "-(a + b)*c");
  EXPECT_EQ(parse_expression("1 + 2*3"), parse_expression("1 + (2*3)"));
}

TEST(Parser, SyntaxErrorPositions) {
  const ParseError e = parse_failure("term X( := 1");
  EXPECT_EQ(e.kind(), ParseError::Kind::syntax);
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 9u);
  EXPECT_NE(e.message().find("parameter name"), std::string::npos);

  const ParseError e2 = parse_failure("term A(n, k) := 1\nterm B(n, k) := 2 +\n");
  EXPECT_EQ(e2.line(), 3u);
  EXPECT_EQ(parse_failure("frob x").kind(), ParseError::Kind::syntax);
}

TEST(Semantic, Errors) {
  EXPECT_EQ(parse_failure("term A(n, k) := 1\nterm A(n, k) := 2").kind(), ParseError::Kind::resolution);
  EXPECT_EQ(parse_failure("term A(n, q) := 1").kind(), ParseError::Kind::semantic);
  EXPECT_EQ(parse_failure("sum s(n) := sum(k, 0, n, Nope) == 1").kind(), ParseError::Kind::resolution);
  EXPECT_EQ(parse_failure("term A(n, k) := binom(n)").kind(), ParseError::Kind::arity);
  EXPECT_EQ(parse_failure("term A(n, k, m) := 1\nsum s(n) := sum(k, 0, n, A) == 1").kind(),
            ParseError::Kind::semantic);
}

TEST(Semantic, CertificateDefinition) {
  const SpecDocument d = parse_spec(
      "term F2(n, k) := sign(k + n + 1)*binom(n + k + 1, 2*k)*pow(2, 2*k)/(2*n + 3)\n"
      "cert R2(n, k) := 2*k*(2*k - 1)/((n + 2 - k)*(2*n + 5))\n"
      "recurrence r(n, k) := F2(n + 1, k) - F2(n, k) == delta(R2)\n");
  const auto& p = d.recurrences.at("r");
  EXPECT_TRUE(wzkit::verify_certificate(p).pass);
  EXPECT_EQ(p.coeffs.size(), 2u);
}

TEST(RoundTrip, BundledFiles) {
  for (const auto& f : wzkit::bundled::kFiles) {
    const Document a = parse_document(f.text);
    const std::string printed = print(a);
    const Document b = parse_document(printed);
    EXPECT_EQ(a, b) << f.name;
    EXPECT_EQ(print(b), printed) << f.name;
    EXPECT_NO_THROW(parse_spec(printed)) << f.name;
  }
}

}  // namespace
