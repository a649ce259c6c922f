#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace wzkit {

/// Base of every error raised by the toolkit.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : Error(what) {}
};

/// Raised for arguments outside the supported domain, e.g. binomial(a, b)
/// with a < 0.
class UnsupportedArgument : public Error {
 public:
  using Error::Error;
};

/// A rational prefactor was evaluated where its denominator vanishes.
class PoleError : public Error {
 public:
  using Error::Error;
};

class MissingVariable : public Error {
 public:
  using Error::Error;
};

class SizeLimitExceeded : public Error {
 public:
  using Error::Error;
};

/// DSL error carrying a 1-based source position.
class ParseError : public Error {
 public:
  enum class Kind { lexical, syntax, resolution, arity, semantic };

  ParseError(Kind kind, std::size_t line, std::size_t column, const std::string& message)
      : Error(format(kind, line, column, message)),
        kind_(kind),
        line_(line),
        column_(column),
        message_(message) {}

  Kind kind() const { return kind_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

  static const char* kind_name(Kind kind) {
    switch (kind) {
      case Kind::lexical: return "lexical error";
      case Kind::syntax: return "syntax error";
      case Kind::resolution: return "resolution error";
      case Kind::arity: return "arity error";
      case Kind::semantic: return "semantic error";
    }
    return "error";
  }

 private:
  static std::string format(Kind kind, std::size_t line, std::size_t column,
                            const std::string& message) {
    return std::to_string(line) + ":" + std::to_string(column) + ": " + kind_name(kind) + ": " +
           message;
  }

  Kind kind_;
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

}  // namespace wzkit
