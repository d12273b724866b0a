#ifndef FRACBK_CORPUS_HPP
#define FRACBK_CORPUS_HPP

#include <string>
#include <string_view>
#include <vector>

#include "fracbk/expr.hpp"

namespace fracbk {

struct BuiltinFunction {
  std::string_view name;
  std::string_view expression;
  int arity;  // 1: f(z), 2: f(z, y)
};

/// Test functions used by the reproduction experiments: f1..f4 of z, g1..g3 of (z, y).
const std::vector<BuiltinFunction>& builtin_corpus();

/// A builtin name ("f1", ..., "g3") or an expression string.
FunctionExpr resolve_function(std::string_view name_or_expression);

/// Canonical text of a builtin, or the argument unchanged.
std::string function_text(std::string_view name_or_expression);

}  // namespace fracbk

#endif  // FRACBK_CORPUS_HPP
