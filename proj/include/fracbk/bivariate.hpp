// Tensor-product extension of the fractional operator to [0, 1]^2, its
// moments and the partial/complete modulus error bounds.

#ifndef FRACBK_BIVARIATE_HPP
#define FRACBK_BIVARIATE_HPP

#include <functional>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "fracbk/basis.hpp"
#include "fracbk/expr.hpp"
#include "fracbk/operator.hpp"
#include "fracbk/params.hpp"

namespace fracbk {

inline constexpr int kDefaultBivariateGrid = 101;

using BivariateFn = std::function<double(double, double)>;

struct BivKernelIntegrals {
  BivariateParams params;
  Eigen::MatrixXd values;  // (m1 + 1) x (m2 + 1)
};

/// Kernel integrals on the tensor product of the per-axis lifted rules,
/// order^2 points per entry.
BivKernelIntegrals biv_kernel_integrals(const BivariateParams& bp, const BivariateFn& f,
                                        int order = kDefaultOrder);
BivKernelIntegrals biv_kernel_integrals(const BivariateParams& bp, const FunctionExpr& f,
                                        int order = kDefaultOrder);

class BivariateOperator {
 public:
  BivariateOperator(const BivariateParams& bp, const BivariateFn& f, int order = kDefaultOrder);
  BivariateOperator(const BivariateParams& bp, const FunctionExpr& f, int order = kDefaultOrder);

  double operator()(double z, double y) const;

  const BivKernelIntegrals& kernel() const { return kernel_; }

 private:
  BivKernelIntegrals kernel_;
  BlendedBasis<double> basis_z_;
  BlendedBasis<double> basis_y_;
};

double apply_biv(const BivariateParams& bp, const FunctionExpr& f, double z, double y,
                 int order = kDefaultOrder);

struct BivMoments {
  double e00;
  double e10;
  double e01;
  double e11;
  double e20;
  double e02;
};

BivMoments biv_moments(const BivariateParams& bp, double z, double y);

/// Partial moduli omega_1 (first argument moves) and omega_2 (second moves).
class PartialModuli {
 public:
  PartialModuli(const BivariateFn& f, int grid_n = kDefaultBivariateGrid);
  PartialModuli(const FunctionExpr& f, int grid_n = kDefaultBivariateGrid);

  std::pair<double, double> operator()(double d1, double d2) const;
  double first(double d1) const;
  double second(double d2) const;

 private:
  int grid_n_;
  Eigen::VectorXd first_by_lag_;
  Eigen::VectorXd second_by_lag_;
};

/// Complete modulus: sup |f(p) - f(q)| over grid pairs with |p - q| <= d.
class CompleteModulus {
 public:
  CompleteModulus(const BivariateFn& f, int grid_n = kDefaultBivariateGrid);
  CompleteModulus(const FunctionExpr& f, int grid_n = kDefaultBivariateGrid);

  double operator()(double d) const;

 private:
  void build(const Eigen::MatrixXd& samples);
  int grid_n_;
  std::vector<long> radius_sq_;  // squared lag radii, ascending
  std::vector<double> running_max_;
};

std::pair<double, double> partial_moduli(const FunctionExpr& f, double d1, double d2,
                                         int grid_n = kDefaultBivariateGrid);
double complete_modulus(const FunctionExpr& f, double d, int grid_n = kDefaultBivariateGrid);

/// 4 omega(f; sqrt(xi2_x + xi2_y)).
double bound_complete(const BivariateParams& bp, const CompleteModulus& omega, double z, double y);
double bound_complete(const BivariateParams& bp, const FunctionExpr& f, double z, double y,
                      int grid_n = kDefaultBivariateGrid);

/// 2 (omega_1(f; sqrt(xi2_x)) + omega_2(f; sqrt(xi2_y))).
double bound_partial(const BivariateParams& bp, const PartialModuli& omega, double z, double y);
double bound_partial(const BivariateParams& bp, const FunctionExpr& f, double z, double y,
                     int grid_n = kDefaultBivariateGrid);

}  // namespace fracbk

#endif  // FRACBK_BIVARIATE_HPP
