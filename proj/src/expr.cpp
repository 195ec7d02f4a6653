#include "shiftalg/expr.hpp"

#include <charconv>
#include <cctype>
#include <climits>
#include <memory>

#include "shiftalg/functions.hpp"

namespace shiftalg {

const char* token_kind_name(TokenKind k) noexcept {
  switch (k) {
    case TokenKind::Number: return "number";
    case TokenKind::AtomI: return "I";
    case TokenKind::AtomE: return "E";
    case TokenKind::AtomL: return "L";
    case TokenKind::Ident: return "identifier";
    case TokenKind::Plus: return "'+'";
    case TokenKind::Minus: return "'-'";
    case TokenKind::Star: return "'*'";
    case TokenKind::Slash: return "'/'";
    case TokenKind::Caret: return "'^'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
  }
  return "?";
}

const char* func_name(Func f) noexcept {
  switch (f) {
    case Func::Exp: return "exp";
    case Func::Ln: return "ln";
    case Func::Sin: return "sin";
    case Func::Cos: return "cos";
    case Func::Sqrt: return "sqrt";
    case Func::Conj: return "conj";
    case Func::Inv: return "inv";
    case Func::Det: return "det";
    case Func::Tr: return "tr";
  }
  return "?";
}

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }

std::optional<Func> lookup_func(std::string_view name) {
  for (Func f : {Func::Exp, Func::Ln, Func::Sin, Func::Cos, Func::Sqrt, Func::Conj, Func::Inv,
                 Func::Det, Func::Tr}) {
    if (name == func_name(f)) return f;
  }
  return std::nullopt;
}

// Length of the number starting at src[i], 0 if none.
std::size_t scan_number(std::string_view src, std::size_t i) {
  std::size_t j = i;
  bool digits = false;
  while (j < src.size() && is_digit(src[j])) {
    ++j;
    digits = true;
  }
  if (j < src.size() && src[j] == '.') {
    std::size_t k = j + 1;
    while (k < src.size() && is_digit(src[k])) {
      ++k;
      digits = true;
    }
    if (!digits) return 0;
    j = k;
  }
  if (!digits) return 0;
  if (j < src.size() && src[j] == 'e') {
    std::size_t k = j + 1;
    if (k < src.size() && (src[k] == '+' || src[k] == '-')) ++k;
    if (k < src.size() && is_digit(src[k])) {
      while (k < src.size() && is_digit(src[k])) ++k;
      j = k;
    }
  }
  return j - i;
}

}  // namespace

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    auto single = [&](TokenKind k) {
      out.push_back({k, std::string(1, c), i});
      ++i;
    };
    switch (c) {
      case '+': single(TokenKind::Plus); continue;
      case '-': single(TokenKind::Minus); continue;
      case '*': single(TokenKind::Star); continue;
      case '/': single(TokenKind::Slash); continue;
      case '^': single(TokenKind::Caret); continue;
      case '(': single(TokenKind::LParen); continue;
      case ')': single(TokenKind::RParen); continue;
      case 'I': single(TokenKind::AtomI); continue;
      case 'E': single(TokenKind::AtomE); continue;
      case 'L': single(TokenKind::AtomL); continue;
      default: break;
    }
    if (const std::size_t len = scan_number(src, i); len > 0) {
      out.push_back({TokenKind::Number, std::string(src.substr(i, len)), i});
      i += len;
      continue;
    }
    if (is_lower(c)) {
      std::size_t j = i;
      while (j < src.size() && is_lower(src[j])) ++j;
      out.push_back({TokenKind::Ident, std::string(src.substr(i, j - i)), i});
      i = j;
      continue;
    }
    throw LexError(i, c);
  }
  return out;
}

namespace {

Ast make(NodeKind kind, std::size_t pos) {
  auto n = std::make_unique<Node>();
  n->kind = kind;
  n->position = pos;
  return n;
}

Ast make_literal(double x, double y, std::size_t pos) {
  Ast n = make(NodeKind::Literal, pos);
  n->lit_x = x;
  n->lit_y = y;
  return n;
}

class Parser {
 public:
  Parser(const std::vector<Token>& toks, std::size_t end_pos) : toks_(toks), end_pos_(end_pos) {}

  Ast parse_all() {
    Ast e = expr();
    if (!at_end()) throw ParseError(pos(), "end of input");
    return e;
  }

 private:
  const std::vector<Token>& toks_;
  std::size_t end_pos_;
  std::size_t k_ = 0;

  bool at_end() const { return k_ >= toks_.size(); }
  std::size_t pos() const { return at_end() ? end_pos_ : toks_[k_].position; }
  bool peek(TokenKind kind) const { return !at_end() && toks_[k_].kind == kind; }

  const Token& expect(TokenKind kind, const char* what) {
    if (!peek(kind)) throw ParseError(pos(), what);
    return toks_[k_++];
  }

  Ast expr() {
    Ast lhs = term();
    while (peek(TokenKind::Plus) || peek(TokenKind::Minus)) {
      const Token& op = toks_[k_++];
      Ast n = make(op.kind == TokenKind::Plus ? NodeKind::Add : NodeKind::Sub, op.position);
      n->lhs = std::move(lhs);
      n->rhs = term();
      lhs = std::move(n);
    }
    return lhs;
  }

  Ast term() {
    Ast lhs = unary();
    while (peek(TokenKind::Star) || peek(TokenKind::Slash)) {
      const Token& op = toks_[k_++];
      Ast n = make(op.kind == TokenKind::Star ? NodeKind::Mul : NodeKind::Div, op.position);
      n->lhs = std::move(lhs);
      n->rhs = unary();
      lhs = std::move(n);
    }
    return lhs;
  }

  Ast unary() {
    if (peek(TokenKind::Minus)) {
      const std::size_t p = toks_[k_++].position;
      Ast n = make(NodeKind::Neg, p);
      n->lhs = unary();
      return n;
    }
    return power();
  }

  Ast power() {
    Ast base = primary();
    while (peek(TokenKind::Caret)) {
      const std::size_t p = toks_[k_++].position;
      bool negative = false;
      if (peek(TokenKind::Minus)) {
        ++k_;
        negative = true;
      }
      const std::size_t epos = pos();
      const Token& num = expect(TokenKind::Number, "integer exponent");
      int value = 0;
      const char* first = num.lexeme.data();
      const char* last = first + num.lexeme.size();
      auto [ptr, ec] = std::from_chars(first, last, value);
      if (ec != std::errc() || ptr != last) throw ParseError(epos, "integer exponent");
      Ast n = make(NodeKind::Pow, p);
      n->exponent = negative ? -value : value;
      n->lhs = std::move(base);
      base = std::move(n);
    }
    return base;
  }

  Ast primary() {
    if (at_end()) throw ParseError(pos(), "expression");
    const Token& t = toks_[k_];
    switch (t.kind) {
      case TokenKind::Number: {
        ++k_;
        double v = 0.0;
        const char* first = t.lexeme.data();
        const char* last = first + t.lexeme.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last) throw ParseError(t.position, "finite number");
        if (peek(TokenKind::AtomI)) {
          ++k_;
          return make_literal(v, 0.0, t.position);
        }
        if (peek(TokenKind::AtomE)) {
          ++k_;
          return make_literal(0.0, v, t.position);
        }
        if (peek(TokenKind::AtomL)) {
          // 3L reads as 3 * L
          const std::size_t lp = toks_[k_++].position;
          Ast n = make(NodeKind::Mul, lp);
          n->lhs = make_literal(v, 0.0, t.position);
          n->rhs = make(NodeKind::Variable, lp);
          return n;
        }
        return make_literal(v, 0.0, t.position);
      }
      case TokenKind::AtomI: ++k_; return make_literal(1.0, 0.0, t.position);
      case TokenKind::AtomE: ++k_; return make_literal(0.0, 1.0, t.position);
      case TokenKind::AtomL: ++k_; return make(NodeKind::Variable, t.position);
      case TokenKind::Ident: {
        const auto f = lookup_func(t.lexeme);
        if (!f) {
          throw ParseError(t.position,
                           "function name (exp, ln, sin, cos, sqrt, conj, inv, det, tr)");
        }
        ++k_;
        expect(TokenKind::LParen, "'('");
        Ast n = make(NodeKind::Call, t.position);
        n->func = *f;
        n->lhs = expr();
        expect(TokenKind::RParen, "')'");
        return n;
      }
      case TokenKind::LParen: {
        ++k_;
        Ast e = expr();
        expect(TokenKind::RParen, "')'");
        return e;
      }
      default: throw ParseError(t.position, "expression");
    }
  }
};

}  // namespace

Ast parse(const std::vector<Token>& tokens) {
  std::size_t end_pos = 0;
  if (!tokens.empty()) end_pos = tokens.back().position + tokens.back().lexeme.size();
  return Parser(tokens, end_pos).parse_all();
}

Ast parse(std::string_view src) {
  const std::vector<Token> toks = tokenize(src);
  return Parser(toks, src.size()).parse_all();
}

bool same_tree(const Node& a, const Node& b) noexcept {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::Literal: return a.lit_x == b.lit_x && a.lit_y == b.lit_y;
    case NodeKind::Variable: return true;
    case NodeKind::Neg: return same_tree(*a.lhs, *b.lhs);
    case NodeKind::Pow: return a.exponent == b.exponent && same_tree(*a.lhs, *b.lhs);
    case NodeKind::Call: return a.func == b.func && same_tree(*a.lhs, *b.lhs);
    default: return same_tree(*a.lhs, *b.lhs) && same_tree(*a.rhs, *b.rhs);
  }
}

namespace {

std::string number_text(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, ptr);
}

}  // namespace

std::string to_source(const Node& n) {
  switch (n.kind) {
    case NodeKind::Literal:
      if (n.lit_y == 0.0) return number_text(n.lit_x);
      if (n.lit_x == 0.0) return number_text(n.lit_y) + "E";
      return "(" + number_text(n.lit_x) + " + " + number_text(n.lit_y) + "E)";
    case NodeKind::Variable: return "L";
    case NodeKind::Neg: return "(-" + to_source(*n.lhs) + ")";
    case NodeKind::Add: return "(" + to_source(*n.lhs) + " + " + to_source(*n.rhs) + ")";
    case NodeKind::Sub: return "(" + to_source(*n.lhs) + " - " + to_source(*n.rhs) + ")";
    case NodeKind::Mul: return "(" + to_source(*n.lhs) + " * " + to_source(*n.rhs) + ")";
    case NodeKind::Div: return "(" + to_source(*n.lhs) + " / " + to_source(*n.rhs) + ")";
    case NodeKind::Pow:
      return "((" + to_source(*n.lhs) + ")^" + std::to_string(n.exponent) + ")";
    case NodeKind::Call: return std::string(func_name(n.func)) + "(" + to_source(*n.lhs) + ")";
  }
  return {};
}

EvalError::EvalError(ErrorCode code, std::size_t position, const std::string& what)
    : Error(code, what + " (at position " + std::to_string(position) + ")"), position_(position) {}

namespace {

Binarion apply_func(Func f, const Binarion& a) {
  switch (f) {
    case Func::Exp: return exp(a);
    case Func::Ln: return ln(a);
    case Func::Sin: return sin(a);
    case Func::Cos: return cos(a);
    case Func::Sqrt: return sqrt(a);
    case Func::Conj: return conj(a);
    case Func::Inv: return inv(a);
    case Func::Det: return {det(a), 0.0, a.sig()};
    case Func::Tr: return {trace(a), 0.0, a.sig()};
  }
  return a;
}

Binarion eval_node(const Node& n, Signature sig, const std::optional<Binarion>& var) {
  switch (n.kind) {
    case NodeKind::Literal: return {n.lit_x, n.lit_y, sig};
    case NodeKind::Variable:
      if (!var) throw EvalError(ErrorCode::Evaluation, n.position, "EvaluationError: L is unbound");
      return *var;
    default: break;
  }
  const Binarion a = eval_node(*n.lhs, sig, var);
  try {
    switch (n.kind) {
      case NodeKind::Neg: return neg(a);
      case NodeKind::Pow: return pow(a, n.exponent);
      case NodeKind::Call: return apply_func(n.func, a);
      default: break;
    }
    const Binarion b = eval_node(*n.rhs, sig, var);
    switch (n.kind) {
      case NodeKind::Add: return add(a, b);
      case NodeKind::Sub: return sub(a, b);
      case NodeKind::Mul: return mul(a, b);
      case NodeKind::Div: return div(a, b);
      default: break;
    }
  } catch (const EvalError&) {
    throw;
  } catch (const Error& e) {
    throw EvalError(e.code(), n.position, e.what());
  }
  return a;
}

}  // namespace

Binarion eval(const Node& n, Signature sig, const std::optional<Binarion>& var) {
  return eval_node(n, sig, var);
}

BinarionFn compile_function(std::string_view src) {
  std::shared_ptr<const Node> tree(parse(src).release());
  return [tree](const Binarion& L) { return eval(*tree, L.sig(), L); };
}

}  // namespace shiftalg
