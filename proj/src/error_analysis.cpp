#include "fracbk/error_analysis.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <string>

#include "fracbk/csv.hpp"
#include "fracbk/moments.hpp"

namespace fracbk {

namespace {

void check_grid(int grid_n) {
  if (grid_n < 101) {
    throw std::invalid_argument("modulus grid must have at least 101 points, got " +
                                std::to_string(grid_n));
  }
}

Eigen::VectorXd sample(const UnivariateFn& f, int n) {
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) {
    v[i] = f(double(i) / (n - 1));
  }
  return v;
}

UnivariateFn univariate(const FunctionExpr& f) {
  if (f.uses_y()) {
    throw EvalError("univariate modulus requested for a function of y");
  }
  return [&f](double z) { return f.eval(z); };
}

// Largest lag k with k h <= delta, h = 1/(n-1).
int lag_for(double delta, int n, int max_lag) {
  if (!(delta > 0.0)) return 0;
  const double k = std::floor(delta * (n - 1) * (1.0 + 1e-12));
  return static_cast<int>(std::min<double>(k, max_lag));
}

}  // namespace

ContinuityModulus::ContinuityModulus(const UnivariateFn& f, int grid_n) : grid_n_(grid_n) {
  check_grid(grid_n);
  build(sample(f, grid_n));
}

ContinuityModulus::ContinuityModulus(const FunctionExpr& f, int grid_n) : grid_n_(grid_n) {
  check_grid(grid_n);
  build(sample(univariate(f), grid_n));
}

void ContinuityModulus::build(const Eigen::VectorXd& v) {
  const int n = grid_n_;
  by_lag_ = Eigen::VectorXd::Zero(n);
  for (int k = 1; k < n; ++k) {
    const double worst =
        (v.segment(k, n - k) - v.segment(0, n - k)).cwiseAbs().maxCoeff();
    by_lag_[k] = std::max(by_lag_[k - 1], worst);
  }
}

ModulusEstimate ContinuityModulus::operator()(double delta) const {
  if (delta < 0.0) {
    throw std::domain_error("modulus: delta must be non-negative");
  }
  return {delta, by_lag_[lag_for(delta, grid_n_, grid_n_ - 1)], grid_n_};
}

SecondModulus::SecondModulus(const UnivariateFn& f, int grid_n) : grid_n_(grid_n) {
  check_grid(grid_n);
  build(sample(f, grid_n));
}

SecondModulus::SecondModulus(const FunctionExpr& f, int grid_n) : grid_n_(grid_n) {
  check_grid(grid_n);
  build(sample(univariate(f), grid_n));
}

void SecondModulus::build(const Eigen::VectorXd& v) {
  const int n = grid_n_;
  const int max_lag = (n - 1) / 2;
  by_lag_ = Eigen::VectorXd::Zero(max_lag + 1);
  for (int k = 1; k <= max_lag; ++k) {
    const int len = n - 2 * k;
    const double worst =
        (v.segment(2 * k, len) - 2.0 * v.segment(k, len) + v.segment(0, len)).cwiseAbs().maxCoeff();
    by_lag_[k] = std::max(by_lag_[k - 1], worst);
  }
}

ModulusEstimate SecondModulus::operator()(double delta) const {
  if (delta < 0.0) {
    throw std::domain_error("second modulus: delta must be non-negative");
  }
  const int max_lag = static_cast<int>(by_lag_.size()) - 1;
  return {delta, by_lag_[lag_for(delta, grid_n_, max_lag)], grid_n_};
}

ModulusEstimate modulus_continuity(const FunctionExpr& f, double delta, int grid_n) {
  return ContinuityModulus(f, grid_n)(delta);
}

ModulusEstimate second_modulus(const FunctionExpr& f, double delta, int grid_n) {
  return SecondModulus(f, grid_n)(delta);
}

double bound_t2(const OperatorParams& params, const ContinuityModulus& omega, double z) {
  const auto cm = central_moments(params, z);
  return 2.0 * omega(std::sqrt(cm.xi2)).value;
}

double bound_t2(const OperatorParams& params, const FunctionExpr& f, double z, int grid_n) {
  return bound_t2(params, ContinuityModulus(f, grid_n), z);
}

double bound_lipschitz(const OperatorParams& params, double M, double kappa, double z) {
  if (!(kappa > 0.0 && kappa <= 1.0)) {
    throw std::domain_error("bound_lipschitz: kappa must lie in (0, 1]");
  }
  if (!(M > 0.0)) {
    throw std::domain_error("bound_lipschitz: M must be positive");
  }
  const auto cm = central_moments(params, z);
  return M * std::pow(cm.xi2, kappa / 2.0);
}

double bound_kfunctional(const OperatorParams& params, const ContinuityModulus& omega,
                         const SecondModulus& omega2, double z, double C) {
  if (!(C > 0.0)) {
    throw std::domain_error("bound_kfunctional: C must be positive");
  }
  const auto cm = central_moments(params, z);
  return C * omega2(0.5 * std::sqrt(cm.xi2 + cm.zeta * cm.zeta)).value +
         omega(std::abs(cm.zeta)).value;
}

double bound_kfunctional(const OperatorParams& params, const FunctionExpr& f, double z, double C,
                         int grid_n) {
  return bound_kfunctional(params, ContinuityModulus(f, grid_n), SecondModulus(f, grid_n), z, C);
}

ErrorTable error_table(const OperatorParams& params, const FunctionExpr& f,
                       const std::vector<double>& z_values, int order) {
  const FractionalOperator op(params, f, order);
  ErrorTable table{params, f, {}, 0.0};
  table.rows.reserve(z_values.size());
  for (double z : z_values) {
    const double exact = f.eval(z);
    const double approx = op(z);
    const double err = std::abs(exact - approx);
    table.rows.push_back({z, exact, approx, err});
    table.max_error = std::max(table.max_error, err);
  }
  return table;
}

double max_error(const OperatorParams& params, const FunctionExpr& f, int grid_n, int order) {
  if (grid_n < 101) {
    throw std::invalid_argument("max_error: grid must have at least 101 points");
  }
  return error_table(params, f, linspace(0.0, 1.0, grid_n), order).max_error;
}

void write_csv(std::ostream& os, const ErrorTable& table) {
  CsvTable csv;
  const auto& p = table.params;
  csv.meta.push_back("fn=" + table.function.to_string());
  csv.meta.push_back("m=" + std::to_string(p.m) + " eta=" + format_double(p.eta) +
                     " gamma=" + format_double(p.gamma) + " alpha=" + format_double(p.alpha) +
                     " s=" + std::to_string(p.s));
  csv.columns = {"z", "exact", "approx", "abs_error"};
  for (const auto& r : table.rows) {
    csv.rows.push_back({r.z, r.exact, r.approx, r.abs_error});
  }
  csv.trailer.push_back("max_error=" + format_double(table.max_error));
  write_csv(os, csv);
}

std::vector<double> linspace(double a, double b, int n) {
  if (n < 1) {
    throw std::invalid_argument("linspace: need at least one point");
  }
  std::vector<double> out(n);
  if (n == 1) {
    out[0] = a;
    return out;
  }
  for (int i = 0; i < n; ++i) {
    out[i] = i == n - 1 ? b : a + (b - a) * double(i) / (n - 1);
  }
  return out;
}

}  // namespace fracbk
