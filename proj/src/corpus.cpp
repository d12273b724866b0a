#include "fracbk/corpus.hpp"

namespace fracbk {

const std::vector<BuiltinFunction>& builtin_corpus() {
  static const std::vector<BuiltinFunction> corpus = {
      {"f1", "z*(z-4/7)*sin(pi*z)", 1},
      {"f2", "(1-z)*cos(2*pi*z)", 1},
      {"f3", "22*z*(z-0.9)*(z-0.3)", 1},
      {"f4", "z*(z-2/5)*(z-7/8)", 1},
      {"g1", "(y*z^2-1)*sin(2*pi*y)", 2},
      {"g2", "(y*z+2)*cos(2*pi*z)", 2},
      {"g3", "2*cos(pi*z)+3*sin(2*pi*y)", 2},
  };
  return corpus;
}

std::string function_text(std::string_view name_or_expression) {
  for (const auto& b : builtin_corpus()) {
    if (b.name == name_or_expression) {
      return std::string(b.expression);
    }
  }
  return std::string(name_or_expression);
}

FunctionExpr resolve_function(std::string_view name_or_expression) {
  return parse(function_text(name_or_expression));
}

}  // namespace fracbk
