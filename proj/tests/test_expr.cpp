#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <string>

#include "fracbk/corpus.hpp"
#include "fracbk/expr.hpp"

using namespace fracbk;

namespace {
constexpr double pi = std::numbers::pi;
}

TEST(Tokenize, SingleIdentifier) {
  const auto t = tokenize("z");
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].kind, TokenKind::Identifier);
  EXPECT_EQ(t[0].lexeme, "z");
  EXPECT_EQ(t[0].position, 0u);
}

TEST(Tokenize, FunctionCall) {
  const auto t = tokenize("sin(pi*z)");
  ASSERT_EQ(t.size(), 6u);
  const TokenKind kinds[] = {TokenKind::Identifier, TokenKind::Paren, TokenKind::Identifier,
                             TokenKind::Operator, TokenKind::Identifier, TokenKind::Paren};
  const char* lexemes[] = {"sin", "(", "pi", "*", "z", ")"};
  for (int i = 0; i < 6; ++i) {
    EXPECT_EQ(t[i].kind, kinds[i]);
    EXPECT_EQ(t[i].lexeme, lexemes[i]);
  }
}

TEST(Tokenize, Numbers) {
  const auto t = tokenize("1.5e-3 + 2 * .25");
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(t[0].lexeme, "1.5e-3");
  EXPECT_EQ(t[4].lexeme, ".25");
}

TEST(Tokenize, LexicalErrorPosition) {
  try {
    tokenize("2$z");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 1u);
  }
}

TEST(Parse, Precedence) {
  EXPECT_DOUBLE_EQ(parse("1+2*3").eval(0.0), 7.0);
  EXPECT_DOUBLE_EQ(parse("2^3^2").eval(0.0), 512.0);
  EXPECT_DOUBLE_EQ(parse("-2^2").eval(0.0), -4.0);
  EXPECT_DOUBLE_EQ(parse("(1+2)*3").eval(0.0), 9.0);
  EXPECT_DOUBLE_EQ(parse("8/4/2").eval(0.0), 1.0);
  EXPECT_DOUBLE_EQ(parse("8-4-2").eval(0.0), 2.0);
}

TEST(Parse, Errors) {
  EXPECT_THROW(parse("sin(z"), ParseError);
  EXPECT_THROW(parse("foo(z)"), ParseError);
  EXPECT_THROW(parse("x+1"), ParseError);
  EXPECT_THROW(parse("1+"), ParseError);
  EXPECT_THROW(parse("sin(z, y)"), ParseError);
  EXPECT_THROW(parse(""), ParseError);
  EXPECT_THROW(parse("(1))"), ParseError);
}

TEST(Parse, UnclosedParenMessage) {
  try {
    parse("sin(z");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("unclosed"), std::string::npos) << e.what();
  }
}

TEST(Eval, CorpusPoints) {
  EXPECT_NEAR(parse("z*(z-4/7)*sin(pi*z)").eval(0.5), -1.0 / 28.0, 1e-15);
  EXPECT_NEAR(parse("(1-z)*cos(2*pi*z)").eval(1.0), 0.0, 1e-15);
  // (0.25 * 0.5^2 - 1) * sin(pi / 2)
  EXPECT_NEAR(parse("(y*z^2-1)*sin(2*pi*y)").eval(0.5, 0.25), -0.9375, 1e-15);
}

TEST(Eval, Errors) {
  EXPECT_THROW(parse("1/(z-0.5)").eval(0.5), EvalError);
  EXPECT_THROW(parse("z+y").eval(0.5), EvalError);
  EXPECT_NO_THROW(parse("z+y").eval(0.5, 0.5));
}

TEST(Eval, Functions) {
  const auto f = parse("sqrt(abs(z)) + exp(0) + cos(0) + sin(0)");
  EXPECT_DOUBLE_EQ(f.eval(-4.0), 4.0);
}

TEST(Eval, DeepExpression) {
  std::string text = "z";
  for (int i = 0; i < 60; ++i) text = "(" + text + "+1)";
  EXPECT_DOUBLE_EQ(parse(text).eval(0.5), 60.5);
  std::string right = "1";
  for (int i = 0; i < 60; ++i) right = "z+(" + right + ")";
  EXPECT_DOUBLE_EQ(parse(right).eval(1.0), 61.0);
}

TEST(Expr, VariablesUsed) {
  EXPECT_TRUE(parse("z").uses_z());
  EXPECT_FALSE(parse("z").uses_y());
  EXPECT_TRUE(parse("y*2").uses_y());
  EXPECT_FALSE(parse("pi").uses_z());
}

TEST(Expr, RoundTripThroughText) {
  const char* texts[] = {"z*(z-4/7)*sin(pi*z)", "-z^2^0.5", "2*cos(pi*z)+3*sin(2*pi*y)",
                         "1.25e-3/(1+abs(z-y))", "exp(-z)*sqrt(y+1)", "-(-(z))"};
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (const char* text : texts) {
    const FunctionExpr a = parse(text);
    const FunctionExpr b = parse(a.to_string());
    EXPECT_EQ(a, b) << text << " -> " << a.to_string();
    for (int i = 0; i < 20; ++i) {
      const double z = u(rng), y = u(rng);
      EXPECT_EQ(a.eval(z, y), b.eval(z, y));
    }
  }
}

TEST(Corpus, MatchesHandCodedClosures) {
  const std::map<std::string, std::function<double(double, double)>> ref = {
      {"f1", [](double z, double) { return z * (z - 4.0 / 7.0) * std::sin(pi * z); }},
      {"f2", [](double z, double) { return (1 - z) * std::cos(2 * pi * z); }},
      {"f3", [](double z, double) { return 22 * z * (z - 0.9) * (z - 0.3); }},
      {"f4", [](double z, double) { return z * (z - 2.0 / 5.0) * (z - 7.0 / 8.0); }},
      {"g1", [](double z, double y) { return (y * z * z - 1) * std::sin(2 * pi * y); }},
      {"g2", [](double z, double y) { return (y * z + 2) * std::cos(2 * pi * z); }},
      {"g3", [](double z, double y) { return 2 * std::cos(pi * z) + 3 * std::sin(2 * pi * y); }},
  };
  ASSERT_EQ(builtin_corpus().size(), ref.size());
  for (const auto& b : builtin_corpus()) {
    const FunctionExpr f = resolve_function(b.name);
    const auto& g = ref.at(std::string(b.name));
    EXPECT_EQ(f.uses_y(), b.arity == 2);
    for (int i = 0; i <= 100; ++i) {
      const double z = i / 100.0;
      const double y = 1.0 - z;
      EXPECT_NEAR(f.eval(z, y), g(z, y), 1e-15) << b.name << " at " << z;
    }
  }
}

TEST(Corpus, ExpressionPassesThrough) {
  EXPECT_EQ(function_text("z^2"), "z^2");
  EXPECT_DOUBLE_EQ(resolve_function("z^2").eval(3.0), 9.0);
}
