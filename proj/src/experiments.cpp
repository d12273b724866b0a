#include "fracbk/experiments.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "fracbk/bivariate.hpp"
#include "fracbk/corpus.hpp"
#include "fracbk/moments.hpp"

namespace fracbk {

namespace {

UniColumn uni(std::string label, int m, double eta, double gamma, double alpha, int s) {
  return {std::move(label), OperatorParams{m, eta, gamma, alpha, s}};
}

BivColumn biv(std::string label, int m, double eta, double gamma, double alpha, int s) {
  return {std::move(label), BivariateParams::symmetric(OperatorParams{m, eta, gamma, alpha, s})};
}

void add_column_meta(CsvTable& csv, const std::string& label, const std::string& text) {
  csv.meta.push_back(label + ": " + text);
}

CsvTable uni_table(int which, int order) {
  const UniExperiment setup = uni_table_setup(which);
  const FunctionExpr f = resolve_function(setup.function);
  const std::vector<double> zs = table_points();
  CsvTable csv;
  csv.meta.push_back("table=" + std::to_string(which) + " |R(f;z) - f(z)|");
  csv.meta.push_back("fn=" + function_text(setup.function));
  csv.columns.push_back("z");
  for (double z : zs) csv.rows.push_back({z});
  for (const auto& col : setup.columns) {
    add_column_meta(csv, col.label, describe(col.params));
    csv.columns.push_back(col.label);
    const FractionalOperator op(col.params, f, order);
    for (std::size_t i = 0; i < zs.size(); ++i) {
      csv.rows[i].push_back(std::abs(op(zs[i]) - f.eval(zs[i])));
    }
  }
  return csv;
}

CsvTable biv_table(int which, int order) {
  const BivExperiment setup = biv_table_setup(which);
  const FunctionExpr f = resolve_function(setup.function);
  const auto points = table_diagonal();
  CsvTable csv;
  csv.meta.push_back("table=" + std::to_string(which) + " |R(f;z,y) - f(z,y)|");
  csv.meta.push_back("fn=" + function_text(setup.function));
  csv.columns = {"z", "y"};
  for (const auto& [z, y] : points) csv.rows.push_back({z, y});
  for (const auto& col : setup.columns) {
    add_column_meta(csv, col.label, describe(col.params));
    csv.columns.push_back(col.label);
    const BivariateOperator op(col.params, f, order);
    for (std::size_t i = 0; i < points.size(); ++i) {
      const auto [z, y] = points[i];
      csv.rows[i].push_back(std::abs(op(z, y) - f.eval(z, y)));
    }
  }
  return csv;
}

}  // namespace

std::string describe(const OperatorParams& p) {
  return "m=" + std::to_string(p.m) + " eta=" + format_double(p.eta) +
         " gamma=" + format_double(p.gamma) + " alpha=" + format_double(p.alpha) +
         " s=" + std::to_string(p.s);
}

std::string describe(const BivariateParams& p) {
  return "x[" + describe(p.px) + "] y[" + describe(p.py) + "]";
}

std::vector<double> table_points() {
  std::vector<double> z;
  for (int k = 1; k <= 9; ++k) z.push_back(k / 10.0);
  return z;
}

std::vector<std::pair<double, double>> table_diagonal() {
  std::vector<std::pair<double, double>> pts;
  for (double z : table_points()) pts.emplace_back(z, z);
  return pts;
}

UniExperiment uni_table_setup(int which) {
  switch (which) {
    case 1:
      return {"f1", {uni("m40", 40, 2, 4, 0.9, 3), uni("m100", 100, 2, 4, 0.9, 3),
                     uni("m250", 250, 2, 4, 0.9, 3)}};
    case 2:
      return {"f2", {uni("alpha0.35", 90, 3, 2, 0.35, 3), uni("alpha0.65", 90, 3, 2, 0.65, 3),
                     uni("alpha0.95", 90, 3, 2, 0.95, 3)}};
    case 3:
      return {"f3", {uni("s8", 70, 3, 2, 0.75, 8), uni("s5", 70, 3, 2, 0.75, 5),
                     uni("s2", 70, 3, 2, 0.75, 2)}};
    default:
      throw std::invalid_argument("no univariate table " + std::to_string(which));
  }
}

UniExperiment uni_figure_setup(int which) {
  switch (which) {
    case 1:
      return {"f1", {uni("op_m20", 20, 3, 3, 0.9, 4), uni("op_m30", 30, 3, 3, 0.9, 4),
                     uni("op_m70", 70, 3, 3, 0.9, 4)}};
    case 2:
      return {"f2", {uni("op_alpha0.35", 10, 2, 3, 0.35, 4),
                     uni("op_alpha0.65", 10, 2, 3, 0.65, 4),
                     uni("op_alpha0.95", 10, 2, 3, 0.95, 4)}};
    case 3:
      return {"f3", {uni("op_s2", 10, 3, 2, 0.75, 2), uni("op_s5", 10, 3, 2, 0.75, 5),
                     uni("op_s8", 10, 3, 2, 0.75, 8)}};
    default:
      throw std::invalid_argument("no univariate figure " + std::to_string(which));
  }
}

BivExperiment biv_table_setup(int which) {
  switch (which) {
    case 5:
      return {"g1", {biv("m10", 10, 2, 3, 0.9, 2), biv("m30", 30, 2, 3, 0.9, 2),
                     biv("m90", 90, 2, 3, 0.9, 2)}};
    case 6:
      return {"g2", {biv("alpha0.1", 15, 2, 2, 0.1, 2), biv("alpha0.5", 15, 2, 2, 0.5, 2),
                     biv("alpha0.9", 15, 2, 2, 0.9, 2)}};
    case 7:
      return {"g3", {biv("s9", 15, 3, 2, 0.8, 9), biv("s6", 15, 3, 2, 0.8, 6),
                     biv("s3", 15, 3, 2, 0.8, 3)}};
    default:
      throw std::invalid_argument("no bivariate table " + std::to_string(which));
  }
}

BivExperiment biv_figure_setup(int which) {
  if (which < 4 || which > 6) {
    throw std::invalid_argument("no bivariate figure " + std::to_string(which));
  }
  BivExperiment setup = biv_table_setup(which + 1);
  for (auto& col : setup.columns) col.label = "op_" + col.label;
  return setup;
}

CsvTable table(int which, int order) {
  if (which >= 1 && which <= 3) return uni_table(which, order);
  if (which == 4) {
    CompareOptions options;
    options.order = order;
    CsvTable csv = compare(options);
    csv.meta.insert(csv.meta.begin(), "table=4");
    return csv;
  }
  if (which >= 5 && which <= 7) return biv_table(which, order);
  throw std::invalid_argument("table must be 1..7, got " + std::to_string(which));
}

CsvTable figure(int which, int order) {
  CsvTable csv;
  csv.meta.push_back("figure=" + std::to_string(which));
  if (which >= 1 && which <= 3) {
    const UniExperiment setup = uni_figure_setup(which);
    const FunctionExpr f = resolve_function(setup.function);
    csv.meta.push_back("fn=" + function_text(setup.function));
    const auto zs = linspace(0.0, 1.0, kFigureGrid);
    csv.columns = {"z", "phi"};
    for (double z : zs) csv.rows.push_back({z, f.eval(z)});
    for (const auto& col : setup.columns) {
      add_column_meta(csv, col.label, describe(col.params));
      csv.columns.push_back(col.label);
      const FractionalOperator op(col.params, f, order);
      for (std::size_t i = 0; i < zs.size(); ++i) csv.rows[i].push_back(op(zs[i]));
    }
    return csv;
  }
  if (which >= 4 && which <= 6) {
    const BivExperiment setup = biv_figure_setup(which);
    const FunctionExpr f = resolve_function(setup.function);
    csv.meta.push_back("fn=" + function_text(setup.function));
    const auto axis = linspace(0.0, 1.0, kSurfaceGrid);
    csv.columns = {"z", "y", "phi"};
    for (double z : axis)
      for (double y : axis) csv.rows.push_back({z, y, f.eval(z, y)});
    for (const auto& col : setup.columns) {
      add_column_meta(csv, col.label, describe(col.params));
      csv.columns.push_back(col.label);
      const BivariateOperator op(col.params, f, order);
      std::size_t r = 0;
      for (double z : axis)
        for (double y : axis) csv.rows[r++].push_back(op(z, y));
    }
    return csv;
  }
  throw std::invalid_argument("figure must be 1..6, got " + std::to_string(which));
}

std::vector<Comparator> comparators(const CompareOptions& options, int m) {
  OperatorParams rlgbk = options.base;
  rlgbk.m = m;
  OperatorParams rlbk = rlgbk;
  rlbk.gamma = 1.0;
  rlbk.s = 2;
  OperatorParams bbk = rlgbk;
  bbk.eta = 1.0;
  if (options.bbk_gamma) bbk.gamma = *options.bbk_gamma;
  OperatorParams fbk = rlgbk;
  fbk.gamma = 1.0;
  fbk.eta = 1.0;
  fbk.s = 2;
  return {{"RLBK", rlbk}, {"BBK", bbk}, {"FBK", fbk}, {"RLGBK", rlgbk}};
}

CsvTable compare(const CompareOptions& options) {
  const FunctionExpr f = resolve_function(options.function);
  CsvTable csv;
  csv.meta.push_back("fn=" + function_text(options.function));
  if (options.grid) {
    csv.meta.push_back("cell=max |R(f;z) - f(z)| over " + std::to_string(*options.grid) +
                       " uniform points");
  } else {
    csv.meta.push_back("cell=|R(f;z) - f(z)| at z=" + format_double(options.point));
  }
  csv.columns = {"m", "RLBK", "BBK", "FBK", "RLGBK"};
  bool first = true;
  for (int m : options.degrees) {
    std::vector<std::optional<double>> row{double(m)};
    for (const auto& c : comparators(options, m)) {
      if (first) add_column_meta(csv, c.label, describe(c.params) + " (m varies)");
      double cell;
      if (options.grid) {
        cell = max_error(c.params, f, *options.grid, options.order);
      } else {
        const FractionalOperator op(c.params, f, options.order);
        cell = std::abs(op(options.point) - f.eval(options.point));
      }
      row.push_back(cell);
    }
    first = false;
    csv.rows.push_back(std::move(row));
  }
  return csv;
}

CsvTable bounds(const BoundsOptions& options) {
  const FunctionExpr f = resolve_function(options.function);
  const FractionalOperator op(options.params, f, options.order);
  const ContinuityModulus omega(f, options.grid);
  std::optional<SecondModulus> omega2;
  if (options.kfunctional_C) omega2.emplace(f, options.grid);
  const bool lipschitz = options.lipschitz_M.has_value() || options.lipschitz_kappa.has_value();

  CsvTable csv;
  csv.meta.push_back("fn=" + function_text(options.function));
  csv.meta.push_back(describe(options.params));
  csv.meta.push_back("modulus_grid=" + std::to_string(options.grid));
  if (lipschitz) {
    csv.meta.push_back("M=" + format_double(options.lipschitz_M.value_or(1.0)) +
                       " kappa=" + format_double(options.lipschitz_kappa.value_or(1.0)));
  }
  if (options.kfunctional_C) csv.meta.push_back("C=" + format_double(*options.kfunctional_C));
  csv.columns = {"z", "actual_error", "bound_t2", "bound_lipschitz", "bound_kfunctional"};
  for (double z : options.points) {
    std::vector<std::optional<double>> row{z, std::abs(op(z) - f.eval(z)),
                                           bound_t2(options.params, omega, z)};
    if (lipschitz) {
      row.push_back(bound_lipschitz(options.params, options.lipschitz_M.value_or(1.0),
                                    options.lipschitz_kappa.value_or(1.0), z));
    } else {
      row.emplace_back();
    }
    if (omega2) {
      row.push_back(bound_kfunctional(options.params, omega, *omega2, z, *options.kfunctional_C));
    } else {
      row.emplace_back();
    }
    csv.rows.push_back(std::move(row));
  }
  return csv;
}

CsvTable biv_surface(const BivariateParams& bp, const std::string& function,
                     const std::vector<double>& z, const std::vector<double>& y, int order) {
  const FunctionExpr f = resolve_function(function);
  const BivariateOperator op(bp, f, order);
  CsvTable csv;
  csv.meta.push_back("fn=" + function_text(function));
  csv.meta.push_back(describe(bp));
  csv.columns = {"z", "y", "exact", "approx", "abs_error"};
  double worst = 0.0;
  for (double zv : z) {
    for (double yv : y) {
      const double exact = f.eval(zv, yv);
      const double approx = op(zv, yv);
      const double err = std::abs(exact - approx);
      worst = std::max(worst, err);
      csv.rows.push_back({zv, yv, exact, approx, err});
    }
  }
  csv.trailer.push_back("max_error=" + format_double(worst));
  return csv;
}

}  // namespace fracbk
