#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "wzkit/dsl/ast.hpp"
#include "wzkit/errors.hpp"

namespace wzkit::dsl {

enum class Tok {
  end,
  name,
  integer,
  string,
  lparen,
  rparen,
  comma,
  define,   // :=
  equal2,   // ==
  equal,    // =
  ge,       // >=
  dotdot,   // ..
  plus,
  minus,
  star,
  slash,
  caret,
  semicolon,
};

inline const char* tok_name(Tok t) {
  switch (t) {
    case Tok::end: return "end of input";
    case Tok::name: return "name";
    case Tok::integer: return "integer";
    case Tok::string: return "string";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::define: return "':='";
    case Tok::equal2: return "'=='";
    case Tok::equal: return "'='";
    case Tok::ge: return "'>='";
    case Tok::dotdot: return "'..'";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::slash: return "'/'";
    case Tok::caret: return "'^'";
    case Tok::semicolon: return "';'";
  }
  return "token";
}

struct Token {
  Tok kind = Tok::end;
  std::string text;
  Position pos;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1;
  int col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t count = 1) {
    for (std::size_t j = 0; j < count && i < src.size(); ++j, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  auto fail = [&](const std::string& msg) {
    throw ParseError(ParseError::Kind::lexical, static_cast<std::size_t>(line), static_cast<std::size_t>(col), msg);
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    Token t;
    t.pos = {line, col};
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      t.kind = Tok::name;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      t.kind = Tok::integer;
      t.text = std::string(src.substr(i, j - i));
      advance(j - i);
    } else if (c == '"') {
      advance();
      t.kind = Tok::string;
      for (;;) {
        if (i >= src.size() || src[i] == '\n') fail("unterminated string");
        if (src[i] == '"') {
          advance();
          break;
        }
        if (src[i] == '\\') {
          advance();
          if (i >= src.size() || (src[i] != '"' && src[i] != '\\')) fail("unknown escape in string");
        }
        t.text += src[i];
        advance();
      }
    } else {
      const std::string_view rest = src.substr(i);
      auto two = [&](std::string_view s, Tok k) {
        if (rest.substr(0, 2) != s) return false;
        t.kind = k;
        t.text = std::string(s);
        advance(2);
        return true;
      };
      if (two(":=", Tok::define) || two("==", Tok::equal2) || two(">=", Tok::ge) || two("..", Tok::dotdot)) {
        out.push_back(std::move(t));
        continue;
      }
      switch (c) {
        case '(': t.kind = Tok::lparen; break;
        case ')': t.kind = Tok::rparen; break;
        case ',': t.kind = Tok::comma; break;
        case '=': t.kind = Tok::equal; break;
        case '+': t.kind = Tok::plus; break;
        case '-': t.kind = Tok::minus; break;
        case '*': t.kind = Tok::star; break;
        case '/': t.kind = Tok::slash; break;
        case '^': t.kind = Tok::caret; break;
        case ';': t.kind = Tok::semicolon; break;
        default: fail(std::string("unexpected character '") + c + "'");
      }
      t.text = std::string(1, c);
      advance();
    }
    out.push_back(std::move(t));
  }
  Token e;
  e.kind = Tok::end;
  e.pos = {line, col};
  out.push_back(e);
  return out;
}

}  // namespace wzkit::dsl
