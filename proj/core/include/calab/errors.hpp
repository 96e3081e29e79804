#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace calab {

/// Error taxonomy shared by the library and the CLI. The CLI maps codes to
/// exit statuses: E_ARG/E_PARSE -> 1, E_DOMAIN -> 2, E_VERIFY -> 3.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Syntax error in a ring file or polynomial expression, with position.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line, int col)
      : Error("E_PARSE", what + " (line " + std::to_string(line) + ", col " +
                             std::to_string(col) + ")"),
        line_(line),
        col_(col) {}
  int line() const noexcept { return line_; }
  int col() const noexcept { return col_; }

 private:
  int line_;
  int col_;
};

/// Bad or missing argument (wrong name, unresolved symbol, bad flag value).
class ArgError : public Error {
 public:
  explicit ArgError(const std::string& what) : Error("E_ARG", what) {}
};

/// Mathematically meaningless request: ring mismatch, unit defining ideal,
/// exponent overflow, zero divisor where a unit is required, and the like.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("E_DOMAIN", what) {}
};

/// A machine-checked verification gate failed (component certification,
/// multiplier-harness violation). Distinct from DomainError so callers can
/// surface it as a hard red flag.
class VerifyError : public Error {
 public:
  explicit VerifyError(const std::string& what) : Error("E_VERIFY", what) {}
};

}  // namespace calab
