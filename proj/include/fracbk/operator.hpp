// The univariate fractional operator
//
//   R(f; z) = sum_j q_j(z) * eta * int_0^1 (1-t)^(eta-1) f((j + t^gamma)/(m+1)) dt,
//
// where q_j is the blending basis. The inner integrals do not depend on z and
// are computed once per (params, f).

#ifndef FRACBK_OPERATOR_HPP
#define FRACBK_OPERATOR_HPP

#include <functional>
#include <stdexcept>

#include <Eigen/Core>

#include "fracbk/basis.hpp"
#include "fracbk/expr.hpp"
#include "fracbk/moments.hpp"
#include "fracbk/params.hpp"
#include "fracbk/quadrature.hpp"

namespace fracbk {

inline constexpr int kDefaultOrder = 64;

/// Raised when a numerical cross-check disagrees beyond its threshold.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using UnivariateFn = std::function<double(double)>;

/// Rule for eta * int_0^1 (1-t)^(eta-1) g(t^gamma) dt as sum_i weights[i] g(points[i]).
///
/// Integer gamma lifts the Gauss-Jacobi nodes, t_i -> t_i^gamma, and is exact
/// for polynomial g up to degree (2 order - 1) / gamma. Other exponents make
/// t^gamma non-smooth at t = 0; the rule then substitutes t = u^4, under which
/// the weight becomes (1-u)^(eta-1) times a smooth positive factor and the
/// singular power is pushed to u^(4 gamma + 3).
struct LiftedRule {
  double eta = 1.0;
  double gamma = 1.0;
  Eigen::VectorXd points;   // in [0, 1]
  Eigen::VectorXd weights;  // positive
};

LiftedRule lifted_rule(double eta, double gamma, int order);

struct KernelIntegrals {
  OperatorParams params;
  Eigen::VectorXd values;  // values[j], j = 0..m
};

/// Kernel integrals for every index j.
///
/// For gamma >= 1 the lifted rule of the given order is used. For gamma < 1
/// the order is doubled and every value is checked against the adaptive
/// integrator; a disagreement above 1e-9 throws NumericError.
KernelIntegrals kernel_integrals(const OperatorParams& params, const UnivariateFn& f,
                                 int order = kDefaultOrder);
KernelIntegrals kernel_integrals(const OperatorParams& params, const FunctionExpr& f,
                                 int order = kDefaultOrder);

/// Operator bound to one function: kernel integrals precomputed, O(m) per point.
class FractionalOperator {
 public:
  FractionalOperator(const OperatorParams& params, const UnivariateFn& f,
                     int order = kDefaultOrder);
  FractionalOperator(const OperatorParams& params, const FunctionExpr& f,
                     int order = kDefaultOrder);

  double operator()(double z) const;
  Eigen::VectorXd operator()(const Eigen::VectorXd& z) const;

  const OperatorParams& params() const { return kernel_.params; }
  const KernelIntegrals& kernel() const { return kernel_; }
  const BlendedBasis<double>& basis() const { return basis_; }

 private:
  KernelIntegrals kernel_;
  BlendedBasis<double> basis_;
};

double apply(const OperatorParams& params, const FunctionExpr& f, double z,
             int order = kDefaultOrder);

}  // namespace fracbk

#endif  // FRACBK_OPERATOR_HPP
