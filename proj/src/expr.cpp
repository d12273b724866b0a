#include "fracbk/expr.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <numbers>

namespace fracbk {

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

int arity(FunctionExpr::Op op) {
  using Op = FunctionExpr::Op;
  switch (op) {
    case Op::Number:
    case Op::VarZ:
    case Op::VarY:
    case Op::Pi:
      return 0;
    case Op::Add:
    case Op::Sub:
    case Op::Mul:
    case Op::Div:
    case Op::Pow:
      return 2;
    default:
      return 1;
  }
}

std::optional<FunctionExpr::Op> function_op(std::string_view name) {
  using Op = FunctionExpr::Op;
  if (name == "sin") return Op::Sin;
  if (name == "cos") return Op::Cos;
  if (name == "exp") return Op::Exp;
  if (name == "sqrt") return Op::Sqrt;
  if (name == "abs") return Op::Abs;
  return std::nullopt;
}

std::string format_number(double v) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), end);
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
    const std::size_t start = i;
    if (is_digit(c) || (c == '.' && i + 1 < src.size() && is_digit(src[i + 1]))) {
      while (i < src.size() && is_digit(src[i])) ++i;
      if (i < src.size() && src[i] == '.') {
        ++i;
        while (i < src.size() && is_digit(src[i])) ++i;
      }
      if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
        if (j < src.size() && is_digit(src[j])) {
          i = j;
          while (i < src.size() && is_digit(src[i])) ++i;
        }
      }
      out.push_back({TokenKind::Number, std::string(src.substr(start, i - start)), start});
    } else if (is_ident_start(c)) {
      while (i < src.size() && is_ident_char(src[i])) ++i;
      out.push_back({TokenKind::Identifier, std::string(src.substr(start, i - start)), start});
    } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
      out.push_back({TokenKind::Operator, std::string(1, c), start});
      ++i;
    } else if (c == '(' || c == ')') {
      out.push_back({TokenKind::Paren, std::string(1, c), start});
      ++i;
    } else if (c == ',') {
      out.push_back({TokenKind::Comma, ",", start});
      ++i;
    } else {
      throw ParseError(std::string("lexical error: unexpected character '") + c + "'", start);
    }
  }
  return out;
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : tokens_(tokens) {
    end_position_ = tokens.empty() ? 0 : tokens.back().position + tokens.back().lexeme.size();
  }

  FunctionExpr run() {
    if (tokens_.empty()) {
      throw ParseError("syntax error: empty expression", 0);
    }
    expr();
    if (pos_ < tokens_.size()) {
      const Token& t = tokens_[pos_];
      if (t.lexeme == ")") {
        throw ParseError("syntax error: unmatched ')'", t.position);
      }
      throw ParseError("syntax error: unexpected '" + t.lexeme + "'", t.position);
    }
    finish();
    return std::move(out_);
  }

 private:
  using Op = FunctionExpr::Op;

  const Token* peek() const { return pos_ < tokens_.size() ? &tokens_[pos_] : nullptr; }
  bool peek_is(TokenKind kind, std::string_view lexeme) const {
    const Token* t = peek();
    return t != nullptr && t->kind == kind && t->lexeme == lexeme;
  }
  std::size_t here() const { return pos_ < tokens_.size() ? tokens_[pos_].position : end_position_; }

  void emit(Op op, double value = 0.0) { out_.nodes_.push_back({op, value}); }

  void expr() {
    term();
    while (peek_is(TokenKind::Operator, "+") || peek_is(TokenKind::Operator, "-")) {
      const bool plus = tokens_[pos_++].lexeme == "+";
      term();
      emit(plus ? Op::Add : Op::Sub);
    }
  }

  void term() {
    unary();
    while (peek_is(TokenKind::Operator, "*") || peek_is(TokenKind::Operator, "/")) {
      const bool mul = tokens_[pos_++].lexeme == "*";
      unary();
      emit(mul ? Op::Mul : Op::Div);
    }
  }

  void unary() {
    if (peek_is(TokenKind::Operator, "-")) {
      ++pos_;
      unary();
      emit(Op::Neg);
      return;
    }
    power();
  }

  void power() {
    primary();
    if (peek_is(TokenKind::Operator, "^")) {
      ++pos_;
      unary();
      emit(Op::Pow);
    }
  }

  void primary() {
    const Token* t = peek();
    if (t == nullptr) {
      throw ParseError("syntax error: unexpected end of expression", end_position_);
    }
    switch (t->kind) {
      case TokenKind::Number: {
        double v = 0.0;
        const auto* first = t->lexeme.data();
        const auto* last = first + t->lexeme.size();
        auto [ptr, ec] = std::from_chars(first, last, v);
        if (ec != std::errc() || ptr != last) {
          throw ParseError("syntax error: malformed number '" + t->lexeme + "'", t->position);
        }
        ++pos_;
        emit(Op::Number, v);
        return;
      }
      case TokenKind::Identifier: {
        const std::string& name = t->lexeme;
        const std::size_t at = t->position;
        ++pos_;
        if (name == "z") {
          emit(Op::VarZ);
          out_.uses_z_ = true;
          return;
        }
        if (name == "y") {
          emit(Op::VarY);
          out_.uses_y_ = true;
          return;
        }
        if (name == "pi") {
          emit(Op::Pi);
          return;
        }
        if (auto fn = function_op(name)) {
          if (!peek_is(TokenKind::Paren, "(")) {
            throw ParseError("syntax error: expected '(' after '" + name + "'", here());
          }
          const std::size_t open = tokens_[pos_].position;
          ++pos_;
          expr();
          if (peek_is(TokenKind::Comma, ",")) {
            throw ParseError("syntax error: '" + name + "' takes exactly one argument", here());
          }
          expect_close(open);
          emit(*fn);
          return;
        }
        throw ParseError("unknown identifier '" + name + "'", at);
      }
      case TokenKind::Paren:
        if (t->lexeme == "(") {
          const std::size_t open = t->position;
          ++pos_;
          expr();
          expect_close(open);
          return;
        }
        throw ParseError("syntax error: unexpected ')'", t->position);
      default:
        throw ParseError("syntax error: unexpected '" + t->lexeme + "'", t->position);
    }
  }

  void expect_close(std::size_t open) {
    if (!peek_is(TokenKind::Paren, ")")) {
      if (peek() == nullptr) {
        throw ParseError("syntax error: unclosed parenthesis opened at " + std::to_string(open),
                         end_position_);
      }
      throw ParseError("syntax error: expected ')'", here());
    }
    ++pos_;
  }

  void finish() {
    int depth = 0;
    int max_depth = 0;
    for (const auto& n : out_.nodes_) {
      depth += 1 - arity(n.op);
      max_depth = std::max(max_depth, depth);
    }
    out_.max_depth_ = max_depth;
  }

  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
  std::size_t end_position_ = 0;
  FunctionExpr out_;
};

FunctionExpr parse(const std::vector<Token>& tokens) { return Parser(tokens).run(); }

FunctionExpr parse(std::string_view src) { return parse(tokenize(src)); }

namespace {

template <class Stack>
double run_program(const std::vector<FunctionExpr::Node>& nodes, Stack& stack, double z,
                   std::optional<double> y) {
  using Op = FunctionExpr::Op;
  int top = 0;
  for (const auto& n : nodes) {
    switch (n.op) {
      case Op::Number: stack[top++] = n.value; break;
      case Op::VarZ: stack[top++] = z; break;
      case Op::VarY:
        if (!y) {
          throw EvalError("expression references 'y' but no value was supplied");
        }
        stack[top++] = *y;
        break;
      case Op::Pi: stack[top++] = std::numbers::pi; break;
      case Op::Neg: stack[top - 1] = -stack[top - 1]; break;
      case Op::Add: --top; stack[top - 1] += stack[top]; break;
      case Op::Sub: --top; stack[top - 1] -= stack[top]; break;
      case Op::Mul: --top; stack[top - 1] *= stack[top]; break;
      case Op::Div:
        --top;
        if (stack[top] == 0.0) {
          throw EvalError("division by zero");
        }
        stack[top - 1] /= stack[top];
        break;
      case Op::Pow: --top; stack[top - 1] = std::pow(stack[top - 1], stack[top]); break;
      case Op::Sin: stack[top - 1] = std::sin(stack[top - 1]); break;
      case Op::Cos: stack[top - 1] = std::cos(stack[top - 1]); break;
      case Op::Exp: stack[top - 1] = std::exp(stack[top - 1]); break;
      case Op::Sqrt: stack[top - 1] = std::sqrt(stack[top - 1]); break;
      case Op::Abs: stack[top - 1] = std::abs(stack[top - 1]); break;
    }
  }
  return stack[0];
}

}  // namespace

double FunctionExpr::eval(double z, std::optional<double> y) const {
  if (nodes_.empty()) {
    throw EvalError("empty expression");
  }
  constexpr int kInline = 32;
  if (max_depth_ <= kInline) {
    std::array<double, kInline> stack;
    return run_program(nodes_, stack, z, y);
  }
  std::vector<double> stack(static_cast<std::size_t>(max_depth_));
  return run_program(nodes_, stack, z, y);
}

std::string FunctionExpr::to_string() const {
  std::vector<std::string> stack;
  for (const auto& n : nodes_) {
    switch (n.op) {
      case Op::Number: stack.push_back(format_number(n.value)); break;
      case Op::VarZ: stack.emplace_back("z"); break;
      case Op::VarY: stack.emplace_back("y"); break;
      case Op::Pi: stack.emplace_back("pi"); break;
      case Op::Neg: stack.back() = "(-" + stack.back() + ")"; break;
      case Op::Sin: stack.back() = "sin(" + stack.back() + ")"; break;
      case Op::Cos: stack.back() = "cos(" + stack.back() + ")"; break;
      case Op::Exp: stack.back() = "exp(" + stack.back() + ")"; break;
      case Op::Sqrt: stack.back() = "sqrt(" + stack.back() + ")"; break;
      case Op::Abs: stack.back() = "abs(" + stack.back() + ")"; break;
      default: {
        std::string rhs = std::move(stack.back());
        stack.pop_back();
        const char* sym = n.op == Op::Add   ? " + "
                          : n.op == Op::Sub ? " - "
                          : n.op == Op::Mul ? " * "
                          : n.op == Op::Div ? " / "
                                            : " ^ ";
        stack.back() = "(" + stack.back() + sym + rhs + ")";
      }
    }
  }
  return stack.empty() ? std::string() : stack.back();
}

}  // namespace fracbk
