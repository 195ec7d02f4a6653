#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace shiftalg {

enum class ErrorCode {
  InvalidValue,
  SignatureMismatch,
  Singular,
  Domain,
  UnsupportedSignature,
  NotNull,
  NotOnDiagonal,
  NormTooLarge,
  UndefinedArg,
  Shape,
  KindMismatch,
  NullDirection,
  Evaluation,
  NotClosed,
  InvalidContour,
  InvalidGrid,
  InvalidSignal,
  Lex,
  Parse,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

/// Base of every exception thrown by the library. The code lets callers
/// (notably the CLI) map failures onto exit statuses without RTTI chains.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

class SingularError : public Error {
 public:
  explicit SingularError(double det);
  SingularError(double det, const std::string& what)
      : Error(ErrorCode::Singular, what), det_(det) {}

  double det() const noexcept { return det_; }

 private:
  double det_;
};

class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what)
      : Error(ErrorCode::Domain, what) {}
};

/// Lexing and parsing failures carry the 0-based source offset.
class SyntaxError : public Error {
 public:
  SyntaxError(ErrorCode code, std::size_t position, const std::string& what)
      : Error(code, what), position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

class LexError : public SyntaxError {
 public:
  LexError(std::size_t position, char ch);

  char character() const noexcept { return ch_; }

 private:
  char ch_;
};

class ParseError : public SyntaxError {
 public:
  ParseError(std::size_t position, const std::string& expected);

  const std::string& expected() const noexcept { return expected_; }

 private:
  std::string expected_;
};

}  // namespace shiftalg
