#pragma once

// A small expression language over one algebra signature.
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' ['-'] INTEGER)*
//   primary := NUMBER [ 'I' | 'E' | 'L' ] | 'I' | 'E' | 'L'
//            | IDENT '(' expr ')' | '(' expr ')'
//
// IDENT is one of exp ln sin cos sqrt conj inv det tr. `L` is the free
// variable used when an expression is evaluated as a function of L.
// Exponent markers in numbers are lowercase only ("2e3"), so "2E" is always
// 2 times the unit shift.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "shiftalg/algebra.hpp"
#include "shiftalg/field.hpp"

namespace shiftalg {

enum class TokenKind {
  Number,
  AtomI,
  AtomE,
  AtomL,
  Ident,
  Plus,
  Minus,
  Star,
  Slash,
  Caret,
  LParen,
  RParen,
};

const char* token_kind_name(TokenKind k) noexcept;

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t position;
};

/// Throws LexError at the first character that starts no token.
std::vector<Token> tokenize(std::string_view src);

enum class NodeKind { Literal, Variable, Neg, Add, Sub, Mul, Div, Pow, Call };
enum class Func { Exp, Ln, Sin, Cos, Sqrt, Conj, Inv, Det, Tr };

const char* func_name(Func f) noexcept;

struct Node {
  NodeKind kind = NodeKind::Literal;
  std::size_t position = 0;
  double lit_x = 0.0;  // Literal: identity component
  double lit_y = 0.0;  // Literal: shift component
  int exponent = 0;    // Pow
  Func func = Func::Exp;
  std::unique_ptr<Node> lhs;  // Neg/Call operand, left operand, Pow base
  std::unique_ptr<Node> rhs;
};

using Ast = std::unique_ptr<Node>;

/// Structural equality; source positions are ignored.
bool same_tree(const Node& a, const Node& b) noexcept;

/// Throws ParseError on malformed input.
Ast parse(const std::vector<Token>& tokens);
Ast parse(std::string_view src);

/// Fully parenthesized source that reparses to the same tree.
std::string to_source(const Node& n);

/// Errors from the algebra (Singular, DomainError, ...) re-thrown with the
/// source position of the node that raised them. code() is preserved.
class EvalError : public Error {
 public:
  EvalError(ErrorCode code, std::size_t position, const std::string& what);
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// det and tr come back as scalar * I. `var` binds L; using L while unbound
/// throws EvalError with code Evaluation.
Binarion eval(const Node& n, Signature sig, const std::optional<Binarion>& var = std::nullopt);

/// Parses once; the returned function evaluates with L bound to its argument
/// (in the argument's signature).
BinarionFn compile_function(std::string_view src);

}  // namespace shiftalg
