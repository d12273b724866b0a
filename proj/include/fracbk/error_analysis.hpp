// Empirical errors of the univariate operator and numerical evaluation of its
// error bounds.
//
// Moduli of smoothness are estimated on uniform grids. The estimate is the
// exact modulus of the sampled function, hence a lower bound of the true
// modulus that converges as the grid is refined. Each modulus object samples
// once and answers any radius in O(1).

#ifndef FRACBK_ERROR_ANALYSIS_HPP
#define FRACBK_ERROR_ANALYSIS_HPP

#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Core>

#include "fracbk/expr.hpp"
#include "fracbk/operator.hpp"
#include "fracbk/params.hpp"

namespace fracbk {

inline constexpr int kDefaultModulusGrid = 4001;
inline constexpr int kDefaultErrorGrid = 1001;

struct ModulusEstimate {
  double delta = 0.0;
  double value = 0.0;
  int grid_n = 0;
};

/// omega(f; delta) = sup { |f(u + h) - f(u)| : 0 < h <= delta } on a grid.
class ContinuityModulus {
 public:
  ContinuityModulus(const UnivariateFn& f, int grid_n = kDefaultModulusGrid);
  ContinuityModulus(const FunctionExpr& f, int grid_n = kDefaultModulusGrid);

  ModulusEstimate operator()(double delta) const;
  int grid_n() const { return grid_n_; }

 private:
  void build(const Eigen::VectorXd& samples);
  int grid_n_;
  Eigen::VectorXd by_lag_;  // running max over lags 0..k
};

/// omega_2(f; delta) = sup { |f(u + 2h) - 2 f(u + h) + f(u)| : 0 < h <= delta }.
class SecondModulus {
 public:
  SecondModulus(const UnivariateFn& f, int grid_n = kDefaultModulusGrid);
  SecondModulus(const FunctionExpr& f, int grid_n = kDefaultModulusGrid);

  ModulusEstimate operator()(double delta) const;
  int grid_n() const { return grid_n_; }

 private:
  void build(const Eigen::VectorXd& samples);
  int grid_n_;
  Eigen::VectorXd by_lag_;
};

ModulusEstimate modulus_continuity(const FunctionExpr& f, double delta,
                                   int grid_n = kDefaultModulusGrid);
ModulusEstimate second_modulus(const FunctionExpr& f, double delta,
                               int grid_n = kDefaultModulusGrid);

/// 2 omega(f; sqrt(xi2(z))).
double bound_t2(const OperatorParams& params, const ContinuityModulus& omega, double z);
double bound_t2(const OperatorParams& params, const FunctionExpr& f, double z,
                int grid_n = kDefaultModulusGrid);

/// M xi2(z)^(kappa/2) for f in Lip_M(kappa).
double bound_lipschitz(const OperatorParams& params, double M, double kappa, double z);

/// C omega_2(f; sqrt(xi2 + zeta^2) / 2) + omega(f; |zeta|).
double bound_kfunctional(const OperatorParams& params, const ContinuityModulus& omega,
                         const SecondModulus& omega2, double z, double C);
double bound_kfunctional(const OperatorParams& params, const FunctionExpr& f, double z, double C,
                         int grid_n = kDefaultModulusGrid);

struct ErrorRow {
  double z;
  double exact;
  double approx;
  double abs_error;
};

struct ErrorTable {
  OperatorParams params;
  FunctionExpr function;
  std::vector<ErrorRow> rows;
  double max_error = 0.0;
};

ErrorTable error_table(const OperatorParams& params, const FunctionExpr& f,
                       const std::vector<double>& z_values, int order = kDefaultOrder);

/// max over a uniform grid of |R(f; z) - f(z)|.
double max_error(const OperatorParams& params, const FunctionExpr& f,
                 int grid_n = kDefaultErrorGrid, int order = kDefaultOrder);

/// Header `z,exact,approx,abs_error`, one row per point, trailing `# max_error=`.
void write_csv(std::ostream& os, const ErrorTable& table);

/// n equally spaced points on [a, b], endpoints included.
std::vector<double> linspace(double a, double b, int n);

}  // namespace fracbk

#endif  // FRACBK_ERROR_ANALYSIS_HPP
