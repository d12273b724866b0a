#include "fracbk/bivariate.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "fracbk/moments.hpp"

namespace fracbk {

namespace {

template <class Fn>
BivKernelIntegrals build_kernel(const BivariateParams& bp, Fn&& f, int order) {
  bp.validate();
  if (order < 1) {
    throw std::invalid_argument("biv_kernel_integrals: order must be >= 1");
  }
  const LiftedRule rx = lifted_rule(bp.px.eta, bp.px.gamma, order);
  const LiftedRule ry = lifted_rule(bp.py.eta, bp.py.gamma, order);
  const int m1 = bp.px.m;
  const int m2 = bp.py.m;

  // args(j, i) = (j + x_i) / (m + 1)
  auto arguments = [order](const LiftedRule& r, const OperatorParams& p) {
    Eigen::MatrixXd a(p.m + 1, order);
    for (int i = 0; i < order; ++i) {
      for (int j = 0; j <= p.m; ++j) {
        a(j, i) = (j + r.points[i]) / (p.m + 1);
      }
    }
    return a;
  };
  const Eigen::MatrixXd ax = arguments(rx, bp.px);
  const Eigen::MatrixXd ay = arguments(ry, bp.py);

  Eigen::MatrixXd values(m1 + 1, m2 + 1);
  Eigen::MatrixXd block(order, order);
  for (int j1 = 0; j1 <= m1; ++j1) {
    for (int j2 = 0; j2 <= m2; ++j2) {
      for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
          block(a, b) = f(ax(j1, a), ay(j2, b));
        }
      }
      if (!block.allFinite()) {
        throw QuadratureError("biv_kernel_integrals: function is not finite at a rule point");
      }
      values(j1, j2) = rx.weights.dot(block * ry.weights);
    }
  }
  return {bp, std::move(values)};
}

void check_grid(int grid_n) {
  if (grid_n < 101) {
    throw std::invalid_argument("bivariate modulus grid must have at least 101 points per axis");
  }
}

template <class Fn>
Eigen::MatrixXd sample_grid(Fn&& f, int n) {
  Eigen::MatrixXd s(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      s(i, j) = f(double(i) / (n - 1), double(j) / (n - 1));
    }
  }
  return s;
}

int lag_for(double delta, int n) {
  if (!(delta > 0.0)) return 0;
  return static_cast<int>(std::min<double>(std::floor(delta * (n - 1) * (1.0 + 1e-12)), n - 1));
}

}  // namespace

BivKernelIntegrals biv_kernel_integrals(const BivariateParams& bp, const BivariateFn& f,
                                        int order) {
  return build_kernel(bp, f, order);
}

BivKernelIntegrals biv_kernel_integrals(const BivariateParams& bp, const FunctionExpr& f,
                                        int order) {
  return build_kernel(bp, [&f](double z, double y) { return f.eval(z, y); }, order);
}

BivariateOperator::BivariateOperator(const BivariateParams& bp, const BivariateFn& f, int order)
    : kernel_(biv_kernel_integrals(bp, f, order)), basis_z_(bp.px), basis_y_(bp.py) {}

BivariateOperator::BivariateOperator(const BivariateParams& bp, const FunctionExpr& f, int order)
    : kernel_(biv_kernel_integrals(bp, f, order)), basis_z_(bp.px), basis_y_(bp.py) {}

double BivariateOperator::operator()(double z, double y) const {
  const auto qz = basis_z_.row(z);
  const auto qy = basis_y_.row(y);
  return qz.weights.dot(kernel_.values * qy.weights);
}

double apply_biv(const BivariateParams& bp, const FunctionExpr& f, double z, double y,
                 int order) {
  return BivariateOperator(bp, f, order)(z, y);
}

BivMoments biv_moments(const BivariateParams& bp, double z, double y) {
  const auto mz = raw_moments(bp.px, z);
  const auto my = raw_moments(bp.py, y);
  return {mz.e0 * my.e0, mz.e1 * my.e0, mz.e0 * my.e1,
          mz.e1 * my.e1, mz.e2 * my.e0, mz.e0 * my.e2};
}

PartialModuli::PartialModuli(const BivariateFn& f, int grid_n) : grid_n_(grid_n) {
  check_grid(grid_n);
  const Eigen::MatrixXd s = sample_grid(f, grid_n);
  const int n = grid_n;
  first_by_lag_ = Eigen::VectorXd::Zero(n);
  second_by_lag_ = Eigen::VectorXd::Zero(n);
  for (int k = 1; k < n; ++k) {
    const double d1 = (s.bottomRows(n - k) - s.topRows(n - k)).cwiseAbs().maxCoeff();
    const double d2 = (s.rightCols(n - k) - s.leftCols(n - k)).cwiseAbs().maxCoeff();
    first_by_lag_[k] = std::max(first_by_lag_[k - 1], d1);
    second_by_lag_[k] = std::max(second_by_lag_[k - 1], d2);
  }
}

PartialModuli::PartialModuli(const FunctionExpr& f, int grid_n)
    : PartialModuli(BivariateFn([&f](double z, double y) { return f.eval(z, y); }), grid_n) {}

double PartialModuli::first(double d1) const {
  if (d1 < 0.0) throw std::domain_error("partial modulus: radius must be non-negative");
  return first_by_lag_[lag_for(d1, grid_n_)];
}

double PartialModuli::second(double d2) const {
  if (d2 < 0.0) throw std::domain_error("partial modulus: radius must be non-negative");
  return second_by_lag_[lag_for(d2, grid_n_)];
}

std::pair<double, double> PartialModuli::operator()(double d1, double d2) const {
  return {first(d1), second(d2)};
}

CompleteModulus::CompleteModulus(const BivariateFn& f, int grid_n) : grid_n_(grid_n) {
  check_grid(grid_n);
  build(sample_grid(f, grid_n));
}

CompleteModulus::CompleteModulus(const FunctionExpr& f, int grid_n) : grid_n_(grid_n) {
  check_grid(grid_n);
  build(sample_grid([&f](double z, double y) { return f.eval(z, y); }, grid_n));
}

void CompleteModulus::build(const Eigen::MatrixXd& s) {
  const int n = grid_n_;
  struct Lag {
    long r2;
    double worst;
  };
  std::vector<Lag> lags;
  lags.reserve(static_cast<std::size_t>(n) * (2 * n - 1));
  // Half-plane of offsets (k1, k2): k1 > 0, or k1 == 0 and k2 > 0.
  for (int k1 = 0; k1 < n; ++k1) {
    for (int k2 = -(n - 1); k2 < n; ++k2) {
      if (k1 == 0 && k2 <= 0) continue;
      const int rows = n - k1;
      const int cols = n - std::abs(k2);
      const int c0 = k2 >= 0 ? 0 : -k2;
      const double worst =
          (s.block(k1, c0 + k2, rows, cols) - s.block(0, c0, rows, cols)).cwiseAbs().maxCoeff();
      lags.push_back({long(k1) * k1 + long(k2) * k2, worst});
    }
  }
  std::sort(lags.begin(), lags.end(), [](const Lag& a, const Lag& b) { return a.r2 < b.r2; });
  radius_sq_.clear();
  running_max_.clear();
  double acc = 0.0;
  for (const auto& lag : lags) {
    acc = std::max(acc, lag.worst);
    if (!radius_sq_.empty() && radius_sq_.back() == lag.r2) {
      running_max_.back() = acc;
    } else {
      radius_sq_.push_back(lag.r2);
      running_max_.push_back(acc);
    }
  }
}

double CompleteModulus::operator()(double d) const {
  if (d < 0.0) throw std::domain_error("complete modulus: radius must be non-negative");
  const double r = d * (grid_n_ - 1);
  const double limit = r * r * (1.0 + 1e-12);
  auto it = std::upper_bound(radius_sq_.begin(), radius_sq_.end(), limit,
                             [](double v, long r2) { return v < double(r2); });
  if (it == radius_sq_.begin()) return 0.0;
  return running_max_[static_cast<std::size_t>(std::distance(radius_sq_.begin(), it)) - 1];
}

std::pair<double, double> partial_moduli(const FunctionExpr& f, double d1, double d2, int grid_n) {
  return PartialModuli(f, grid_n)(d1, d2);
}

double complete_modulus(const FunctionExpr& f, double d, int grid_n) {
  return CompleteModulus(f, grid_n)(d);
}

double bound_complete(const BivariateParams& bp, const CompleteModulus& omega, double z,
                      double y) {
  const double xz = central_moments(bp.px, z).xi2;
  const double xy = central_moments(bp.py, y).xi2;
  return 4.0 * omega(std::sqrt(xz + xy));
}

double bound_complete(const BivariateParams& bp, const FunctionExpr& f, double z, double y,
                      int grid_n) {
  return bound_complete(bp, CompleteModulus(f, grid_n), z, y);
}

double bound_partial(const BivariateParams& bp, const PartialModuli& omega, double z, double y) {
  const double xz = central_moments(bp.px, z).xi2;
  const double xy = central_moments(bp.py, y).xi2;
  return 2.0 * (omega.first(std::sqrt(xz)) + omega.second(std::sqrt(xy)));
}

double bound_partial(const BivariateParams& bp, const FunctionExpr& f, double z, double y,
                     int grid_n) {
  return bound_partial(bp, PartialModuli(f, grid_n), z, y);
}

}  // namespace fracbk
