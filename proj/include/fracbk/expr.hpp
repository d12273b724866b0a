// Arithmetic expressions in z (and optionally y) used as test functions.
//
// Grammar, lowest to highest precedence:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?          right-associative
//   primary := number | 'z' | 'y' | 'pi' | func '(' expr ')' | '(' expr ')'
//   func    := sin | cos | exp | sqrt | abs

#ifndef FRACBK_EXPR_HPP
#define FRACBK_EXPR_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace fracbk {

/// Lexical, syntax or name error; position is a 0-based offset into the source.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class TokenKind { Number, Identifier, Operator, Paren, Comma };

struct Token {
  TokenKind kind;
  std::string lexeme;
  std::size_t position;

  friend bool operator==(const Token&, const Token&) = default;
};

std::vector<Token> tokenize(std::string_view src);

/// Immutable expression tree stored in post-order, so evaluation is a single
/// linear pass over a value stack.
class FunctionExpr {
 public:
  enum class Op : unsigned char {
    Number, VarZ, VarY, Pi, Neg, Add, Sub, Mul, Div, Pow, Sin, Cos, Exp, Sqrt, Abs
  };

  struct Node {
    Op op;
    double value = 0.0;  // Number only
    friend bool operator==(const Node&, const Node&) = default;
  };

  FunctionExpr() = default;

  /// Evaluates at (z, y). Throws EvalError if y is needed but not supplied,
  /// or on division by zero.
  double eval(double z, std::optional<double> y = std::nullopt) const;

  double operator()(double z) const { return eval(z); }
  double operator()(double z, double y) const { return eval(z, y); }

  bool uses_z() const { return uses_z_; }
  bool uses_y() const { return uses_y_; }
  bool empty() const { return nodes_.empty(); }

  /// Fully parenthesized text that parses back to the same tree.
  std::string to_string() const;

  const std::vector<Node>& nodes() const { return nodes_; }

  friend bool operator==(const FunctionExpr& a, const FunctionExpr& b) {
    return a.nodes_ == b.nodes_;
  }

 private:
  friend class Parser;
  std::vector<Node> nodes_;
  int max_depth_ = 0;
  bool uses_z_ = false;
  bool uses_y_ = false;
};

FunctionExpr parse(const std::vector<Token>& tokens);

/// tokenize + parse. Error positions refer to `src`.
FunctionExpr parse(std::string_view src);

}  // namespace fracbk

#endif  // FRACBK_EXPR_HPP
