#include "fracbk/cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "fracbk/bivariate.hpp"
#include "fracbk/corpus.hpp"
#include "fracbk/csv.hpp"
#include "fracbk/error_analysis.hpp"
#include "fracbk/experiments.hpp"
#include "fracbk/moments.hpp"
#include "fracbk/operator.hpp"
#include "fracbk/quadrature.hpp"

namespace fracbk {

namespace {

double to_number(const std::string& text) {
  double v = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw std::invalid_argument("not a number: '" + text + "'");
  }
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string::size_type start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    parts.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return parts;
}

struct Common {
  OperatorParams params{10, 1.0, 1.0, 1.0, 1};
  std::string fn;
  std::string z;
  int order = kDefaultOrder;
  std::string out;
  std::optional<int> grid;
};

void add_operator_flags(CLI::App* cmd, OperatorParams& p) {
  cmd->add_option("--m", p.m, "degree m")->capture_default_str();
  cmd->add_option("--eta", p.eta, "fractional order eta")->capture_default_str();
  cmd->add_option("--gamma", p.gamma, "node exponent gamma")->capture_default_str();
  cmd->add_option("--alpha", p.alpha, "shape parameter alpha in [0, 1]")->capture_default_str();
  cmd->add_option("--s", p.s, "blending parameter s")->capture_default_str();
}

void add_io_flags(CLI::App* cmd, Common& c) {
  cmd->add_option("--order", c.order, "quadrature order")->capture_default_str();
  cmd->add_option("--out", c.out, "output file (default: standard output)");
}

void add_grid_flag(CLI::App* cmd, Common& c, const std::string& what) {
  cmd->add_option_function<int>("--grid", [&c](int n) { c.grid = n; }, what);
}

// Writes to --out or the given stream.
void emit(const Common& c, std::ostream& out, const std::function<void(std::ostream&)>& body) {
  if (c.out.empty()) {
    body(out);
    out.flush();
    return;
  }
  std::ofstream file(c.out);
  if (!file) throw std::invalid_argument("cannot open output file '" + c.out + "'");
  body(file);
  file.flush();
  if (!file) throw std::runtime_error("writing '" + c.out + "' failed");
}

struct BivFlags {
  std::optional<int> m1, m2, s1, s2;
  std::optional<double> eta1, eta2, gamma1, gamma2, alpha1, alpha2;
  std::string y;
};

template <class T>
void add_optional(CLI::App* cmd, const std::string& name, std::optional<T>& slot,
                  const std::string& help) {
  cmd->add_option_function<T>(name, [&slot](const T& v) { slot = v; }, help);
}

OperatorParams axis_params(const OperatorParams& shared, const std::optional<int>& m,
                           const std::optional<double>& eta, const std::optional<double>& gamma,
                           const std::optional<double>& alpha, const std::optional<int>& s) {
  OperatorParams p = shared;
  if (m) p.m = *m;
  if (eta) p.eta = *eta;
  if (gamma) p.gamma = *gamma;
  if (alpha) p.alpha = *alpha;
  if (s) p.s = *s;
  return p;
}

}  // namespace

std::vector<double> parse_points(const std::string& spec) {
  if (spec.empty()) throw std::invalid_argument("empty point specification");
  if (spec.find(':') != std::string::npos) {
    const auto parts = split(spec, ':');
    if (parts.size() != 3) throw std::invalid_argument("grid spec must be a:b:n, got '" + spec + "'");
    const double a = to_number(parts[0]);
    const double b = to_number(parts[1]);
    const double n = to_number(parts[2]);
    if (!(n >= 1.0) || n != static_cast<int>(n)) {
      throw std::invalid_argument("grid size must be a positive integer, got '" + parts[2] + "'");
    }
    return linspace(a, b, static_cast<int>(n));
  }
  std::vector<double> pts;
  for (const auto& part : split(spec, ',')) pts.push_back(to_number(part));
  return pts;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"fractional Bernstein-Kantorovich operators: evaluation and experiments", "fracbk"};
  app.require_subcommand(1);

  Common c;
  int which = 0;

  auto* eval = app.add_subcommand("eval", "evaluate the operator on z points");
  add_operator_flags(eval, c.params);
  eval->add_option("--fn", c.fn, "builtin name (f1..f4) or expression in z")->required();
  eval->add_option("--z", c.z, "point, comma list or a:b:n")->required();
  add_io_flags(eval, c);

  auto* table = app.add_subcommand("table", "reproduce table 1..7");
  table->add_option("which", which, "table number")->required();
  add_io_flags(table, c);

  auto* figure = app.add_subcommand("figure", "dataset of figure 1..6");
  figure->add_option("which", which, "figure number")->required();
  add_io_flags(figure, c);

  CompareOptions copt;
  bool keep_gamma = false;
  auto* compare_cmd = app.add_subcommand("compare", "RLBK/BBK/FBK/RLGBK error comparison");
  compare_cmd->add_option("--fn", copt.function, "function")->capture_default_str();
  compare_cmd->add_option("--m", copt.degrees, "degrees")->delimiter(',')->capture_default_str();
  compare_cmd->add_option("--eta", copt.base.eta, "RLGBK eta")->capture_default_str();
  compare_cmd->add_option("--gamma", copt.base.gamma, "RLGBK gamma")->capture_default_str();
  compare_cmd->add_option("--alpha", copt.base.alpha, "alpha")->capture_default_str();
  compare_cmd->add_option("--s", copt.base.s, "RLGBK s")->capture_default_str();
  compare_cmd->add_option("--z", copt.point, "evaluation point")->capture_default_str();
  compare_cmd->add_option_function<double>(
      "--bbk-gamma", [&copt](double g) { copt.bbk_gamma = g; }, "gamma of the BBK column (default 2)");
  auto* keep =
      compare_cmd->add_flag("--bbk-keep-gamma", keep_gamma, "BBK column keeps the RLGBK gamma");
  compare_cmd->get_option("--bbk-gamma")->excludes(keep);
  add_grid_flag(compare_cmd, c, "use the max error over n uniform points instead of --z");
  add_io_flags(compare_cmd, c);

  BoundsOptions bopt;
  auto* bounds_cmd = app.add_subcommand("bounds", "actual error against the error bounds");
  add_operator_flags(bounds_cmd, c.params);
  bounds_cmd->add_option("--fn", c.fn, "function")->required();
  bounds_cmd->add_option("--z", c.z, "point, comma list or a:b:n")->required();
  add_optional(bounds_cmd, "--M", bopt.lipschitz_M, "Lipschitz constant");
  add_optional(bounds_cmd, "--kappa", bopt.lipschitz_kappa, "Lipschitz exponent in (0, 1]");
  add_optional(bounds_cmd, "--C", bopt.kfunctional_C, "K-functional constant");
  add_grid_flag(bounds_cmd, c, "modulus grid size (default 4001)");
  add_io_flags(bounds_cmd, c);

  BivFlags bf;
  auto* biv = app.add_subcommand("biv-eval", "evaluate the bivariate operator on a z-y grid");
  add_operator_flags(biv, c.params);
  add_optional(biv, "--m1", bf.m1, "degree along z");
  add_optional(biv, "--m2", bf.m2, "degree along y");
  add_optional(biv, "--eta1", bf.eta1, "eta along z");
  add_optional(biv, "--eta2", bf.eta2, "eta along y");
  add_optional(biv, "--gamma1", bf.gamma1, "gamma along z");
  add_optional(biv, "--gamma2", bf.gamma2, "gamma along y");
  add_optional(biv, "--alpha1", bf.alpha1, "alpha along z");
  add_optional(biv, "--alpha2", bf.alpha2, "alpha along y");
  add_optional(biv, "--s1", bf.s1, "s along z");
  add_optional(biv, "--s2", bf.s2, "s along y");
  biv->add_option("--fn", c.fn, "builtin name (g1..g3) or expression in z, y")->required();
  biv->add_option("--z", c.z, "z points")->required();
  biv->add_option("--y", bf.y, "y points")->required();
  add_io_flags(biv, c);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (c.order < 1) throw std::invalid_argument("--order must be >= 1");
    if (*eval) {
      const FunctionExpr f = resolve_function(c.fn);
      if (f.uses_y()) throw std::invalid_argument("eval takes a function of z only; use biv-eval");
      const auto table_rows = error_table(c.params, f, parse_points(c.z), c.order);
      emit(c, out, [&](std::ostream& os) { write_csv(os, table_rows); });
    } else if (*table) {
      if (which < 1 || which > 7) throw std::invalid_argument("table must be 1..7");
      const CsvTable t = fracbk::table(which, c.order);
      emit(c, out, [&](std::ostream& os) { write_csv(os, t); });
    } else if (*figure) {
      if (which < 1 || which > 6) throw std::invalid_argument("figure must be 1..6");
      const CsvTable t = fracbk::figure(which, c.order);
      emit(c, out, [&](std::ostream& os) { write_csv(os, t); });
    } else if (*compare_cmd) {
      if (keep_gamma) copt.bbk_gamma.reset();
      copt.grid = c.grid;
      copt.order = c.order;
      const CsvTable t = compare(copt);
      emit(c, out, [&](std::ostream& os) { write_csv(os, t); });
    } else if (*bounds_cmd) {
      bopt.function = c.fn;
      bopt.params = c.params;
      bopt.points = parse_points(c.z);
      bopt.grid = c.grid.value_or(kDefaultModulusGrid);
      bopt.order = c.order;
      const CsvTable t = bounds(bopt);
      emit(c, out, [&](std::ostream& os) { write_csv(os, t); });
    } else if (*biv) {
      const BivariateParams bp{
          axis_params(c.params, bf.m1, bf.eta1, bf.gamma1, bf.alpha1, bf.s1),
          axis_params(c.params, bf.m2, bf.eta2, bf.gamma2, bf.alpha2, bf.s2)};
      const CsvTable t = biv_surface(bp, c.fn, parse_points(c.z), parse_points(bf.y), c.order);
      emit(c, out, [&](std::ostream& os) { write_csv(os, t); });
    }
  } catch (const ParseError& e) {
    err << "fracbk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnsupportedOrder& e) {
    err << "fracbk: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::invalid_argument& e) {
    err << "fracbk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    err << "fracbk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "fracbk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    // EvalError, NumericError, QuadratureError and anything else at run time
    err << "fracbk: numeric failure: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace fracbk
