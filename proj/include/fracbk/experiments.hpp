// Reproduction experiments: the published tables and figure datasets, the
// comparator study and the bound report. Every experiment yields a CsvTable
// whose metadata lines carry the full parameter set.

#ifndef FRACBK_EXPERIMENTS_HPP
#define FRACBK_EXPERIMENTS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fracbk/csv.hpp"
#include "fracbk/error_analysis.hpp"
#include "fracbk/operator.hpp"
#include "fracbk/params.hpp"

namespace fracbk {

struct UniColumn {
  std::string label;
  OperatorParams params;
};

struct BivColumn {
  std::string label;
  BivariateParams params;
};

struct UniExperiment {
  std::string function;  // builtin name or expression
  std::vector<UniColumn> columns;
};

struct BivExperiment {
  std::string function;
  std::vector<BivColumn> columns;
};

/// Univariate tables 1-3 and figures 1-3.
UniExperiment uni_table_setup(int which);
UniExperiment uni_figure_setup(int which);

/// Bivariate tables 5-7 and figures 4-6.
BivExperiment biv_table_setup(int which);
BivExperiment biv_figure_setup(int which);

/// z = 0.1, 0.2, ..., 0.9 and the diagonal points (z, z) of the bivariate tables.
std::vector<double> table_points();
std::vector<std::pair<double, double>> table_diagonal();

inline constexpr int kFigureGrid = 201;
inline constexpr int kSurfaceGrid = 41;

CsvTable table(int which, int order = kDefaultOrder);
CsvTable figure(int which, int order = kDefaultOrder);

/// Comparator study. Comparators are derived from the base (RLGBK) parameters:
/// RLBK sets gamma = 1, s = 2; BBK sets eta = 1, gamma = bbk_gamma; FBK sets
/// gamma = eta = 1, s = 2. Each cell is |R f - f| at `point`, or the maximum
/// over a uniform grid when `grid` is set.
struct CompareOptions {
  std::string function = "f4";
  std::vector<int> degrees = {10, 20, 40, 80};
  OperatorParams base{10, 2.0, 3.0, 0.9, 2};
  double point = 0.2;
  std::optional<int> grid;
  std::optional<double> bbk_gamma = 2.0;  // empty: keep the base gamma
  int order = kDefaultOrder;
};

struct Comparator {
  std::string label;
  OperatorParams params;
};

std::vector<Comparator> comparators(const CompareOptions& options, int m);
CsvTable compare(const CompareOptions& options);

struct BoundsOptions {
  std::string function;
  OperatorParams params;
  std::vector<double> points;
  std::optional<double> lipschitz_M;
  std::optional<double> lipschitz_kappa;
  std::optional<double> kfunctional_C;
  int grid = kDefaultModulusGrid;
  int order = kDefaultOrder;
};

CsvTable bounds(const BoundsOptions& options);

/// Surface `z,y,exact,approx,abs_error` over the Cartesian product, z outer.
CsvTable biv_surface(const BivariateParams& bp, const std::string& function,
                     const std::vector<double>& z, const std::vector<double>& y,
                     int order = kDefaultOrder);

std::string describe(const OperatorParams& p);
std::string describe(const BivariateParams& p);

}  // namespace fracbk

#endif  // FRACBK_EXPERIMENTS_HPP
