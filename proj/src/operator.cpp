#include "fracbk/operator.hpp"

#include <cmath>
#include <string>

namespace fracbk {

namespace {

constexpr double kLowGammaAgreement = 1e-9;
constexpr int kSubstitutionPower = 4;

bool integral_exponent(double gamma) { return gamma >= 1.0 && gamma == std::round(gamma); }

}  // namespace

LiftedRule lifted_rule(double eta, double gamma, int order) {
  if (!(gamma > 0.0)) {
    throw std::domain_error("lifted_rule: gamma must be positive");
  }
  const auto rule = gauss_jacobi_rule(eta, order);
  LiftedRule out{eta, gamma, Eigen::VectorXd(order), Eigen::VectorXd(order)};
  if (integral_exponent(gamma)) {
    const int k = static_cast<int>(gamma);
    for (int i = 0; i < order; ++i) {
      double p = rule.nodes[i];
      for (int e = 1; e < k; ++e) p *= rule.nodes[i];
      out.points[i] = p;
    }
    out.weights = rule.weights;
    return out;
  }
  constexpr int q = kSubstitutionPower;
  for (int i = 0; i < order; ++i) {
    const double u = rule.nodes[i];
    // (1 - u^q) / (1 - u) = 1 + u + ... + u^(q-1)
    double geometric = 0.0;
    double power = 1.0;
    for (int e = 0; e < q; ++e) {
      geometric += power;
      power *= u;
    }
    const double jacobian = q * power / u;  // q u^(q-1)
    out.points[i] = std::pow(u, q * gamma);
    out.weights[i] = rule.weights[i] * std::pow(geometric, eta - 1.0) * jacobian;
  }
  return out;
}

KernelIntegrals kernel_integrals(const OperatorParams& params, const UnivariateFn& f, int order) {
  params.validate();
  if (order < 1) {
    throw std::invalid_argument("kernel_integrals: order must be >= 1");
  }
  const int m = params.m;
  const double scale = 1.0 / (m + 1);
  const double gamma = params.gamma;
  const bool low = gamma < 1.0;
  const LiftedRule rule = lifted_rule(params.eta, gamma, low ? 2 * order : order);
  const Eigen::Index n = rule.points.size();

  Eigen::VectorXd values(m + 1);
  for (int j = 0; j <= m; ++j) {
    double acc = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double x = (j + rule.points[i]) * scale;
      const double v = f(x);
      if (!std::isfinite(v)) {
        throw QuadratureError("kernel_integrals: function is not finite at " + std::to_string(x));
      }
      acc += rule.weights[i] * v;
    }
    values[j] = acc;
  }

  if (low) {
    for (int j = 0; j <= m; ++j) {
      auto g = [&](double t) { return f((j + std::pow(t, gamma)) * scale); };
      const double reference = adaptive_reference(params.eta, g, 1e-12);
      if (std::abs(reference - values[j]) > kLowGammaAgreement) {
        throw NumericError("kernel_integrals: gamma=" + std::to_string(gamma) +
                           " quadrature and adaptive values disagree at j=" + std::to_string(j));
      }
    }
  }
  return {params, std::move(values)};
}

KernelIntegrals kernel_integrals(const OperatorParams& params, const FunctionExpr& f, int order) {
  if (f.uses_y()) {
    throw EvalError("kernel_integrals: univariate operator given a function of y");
  }
  return kernel_integrals(params, UnivariateFn([&f](double z) { return f.eval(z); }), order);
}

FractionalOperator::FractionalOperator(const OperatorParams& params, const UnivariateFn& f,
                                       int order)
    : kernel_(kernel_integrals(params, f, order)), basis_(params) {}

FractionalOperator::FractionalOperator(const OperatorParams& params, const FunctionExpr& f,
                                       int order)
    : kernel_(kernel_integrals(params, f, order)), basis_(params) {}

double FractionalOperator::operator()(double z) const {
  return basis_.row(z).weights.dot(kernel_.values);
}

Eigen::VectorXd FractionalOperator::operator()(const Eigen::VectorXd& z) const {
  Eigen::VectorXd out(z.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    out[i] = (*this)(z[i]);
  }
  return out;
}

double apply(const OperatorParams& params, const FunctionExpr& f, double z, int order) {
  return FractionalOperator(params, f, order)(z);
}

}  // namespace fracbk
