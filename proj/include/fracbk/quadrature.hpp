// Quadrature for the normalized fractional kernel eta (1-t)^(eta-1) on [0, 1].
//
// gauss_jacobi_rule() builds the Gaussian rule from the shifted Jacobi
// recurrence (Golub-Welsch), then polishes each node with Newton steps on the
// orthonormal recurrence and takes weights from the Christoffel function, which
// keeps small weights accurate to full relative precision.
//
// adaptive_reference() is an independent globally adaptive Gauss-Kronrod
// (10, 21) integrator used to validate the Gaussian rules.

#ifndef FRACBK_QUADRATURE_HPP
#define FRACBK_QUADRATURE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <concepts>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>
#include <Eigen/Eigenvalues>

namespace fracbk {

class QuadratureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <std::floating_point Scalar = double>
struct QuadratureRule {
  Scalar eta = Scalar(1);
  int order = 0;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> nodes;
  Eigen::Matrix<Scalar, Eigen::Dynamic, 1> weights;
};

namespace detail {

// Recurrence coefficients of the monic polynomials orthogonal for (1-t)^a on
// [0, 1]: diag[k] = a_k, offdiag[k] = sqrt(b_{k+1}).
template <std::floating_point Scalar>
void shifted_jacobi_recurrence(Scalar a, int n, std::vector<Scalar>& diag,
                               std::vector<Scalar>& offdiag) {
  // On [-1, 1] with weight (1-x)^a (1+x)^b, b = 0; then x = 2t - 1.
  const Scalar b = Scalar(0);
  const Scalar ab = a + b;
  diag.assign(n, Scalar(0));
  offdiag.assign(n, Scalar(0));
  for (int k = 0; k < n; ++k) {
    Scalar alpha;
    if (k == 0) {
      alpha = (b - a) / (ab + Scalar(2));
    } else {
      const Scalar two_k = Scalar(2 * k) + ab;
      alpha = (b * b - a * a) / (two_k * (two_k + Scalar(2)));
    }
    diag[k] = (Scalar(1) + alpha) / Scalar(2);
  }
  for (int k = 1; k <= n; ++k) {
    Scalar beta;
    if (k == 1) {
      beta = Scalar(4) * (Scalar(1) + a) * (Scalar(1) + b) /
             ((Scalar(2) + ab) * (Scalar(2) + ab) * (Scalar(3) + ab));
    } else {
      const Scalar kk = Scalar(k);
      const Scalar two_k = Scalar(2) * kk + ab;
      beta = Scalar(4) * kk * (kk + a) * (kk + b) * (kk + ab) /
             (two_k * two_k * (two_k + Scalar(1)) * (two_k - Scalar(1)));
    }
    offdiag[k - 1] = std::sqrt(beta) / Scalar(2);
  }
}

}  // namespace detail

/// Gauss-Jacobi rule for eta (1-t)^(eta-1) dt on [0, 1]; weights sum to one.
template <std::floating_point Scalar = double>
QuadratureRule<Scalar> gauss_jacobi_rule(Scalar eta, int order) {
  if (!(eta > Scalar(0))) {
    throw std::domain_error("gauss_jacobi_rule: eta must be positive");
  }
  if (order < 1) {
    throw std::domain_error("gauss_jacobi_rule: order must be >= 1");
  }
  using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
  std::vector<Scalar> diag;
  std::vector<Scalar> off;
  detail::shifted_jacobi_recurrence(eta - Scalar(1), order, diag, off);

  Vec nodes(order);
  if (order == 1) {
    nodes[0] = diag[0];
  } else {
    Vec d = Eigen::Map<const Vec>(diag.data(), order);
    Vec e = Eigen::Map<const Vec>(off.data(), order - 1);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>> solver;
    solver.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw QuadratureError("gauss_jacobi_rule: tridiagonal eigen-solve did not converge");
    }
    nodes = solver.eigenvalues();
  }

  // Orthonormal recurrence: b_{k+1} p_{k+1} = (t - a_k) p_k - b_k p_{k-1}, p_0 = 1.
  auto evaluate = [&](Scalar t, Scalar& p_n, Scalar& dp_n, Scalar& christoffel) {
    Scalar p_prev = Scalar(0);
    Scalar p = Scalar(1);
    Scalar dp_prev = Scalar(0);
    Scalar dp = Scalar(0);
    christoffel = Scalar(1);
    for (int k = 0; k < order; ++k) {
      const Scalar b_prev = k > 0 ? off[k - 1] : Scalar(0);
      const Scalar p_next = ((t - diag[k]) * p - b_prev * p_prev) / off[k];
      const Scalar dp_next = (p + (t - diag[k]) * dp - b_prev * dp_prev) / off[k];
      p_prev = p;
      p = p_next;
      dp_prev = dp;
      dp = dp_next;
      if (k + 1 < order) {
        christoffel += p * p;
      }
    }
    p_n = p;
    dp_n = dp;
  };

  Vec weights(order);
  for (int i = 0; i < order; ++i) {
    Scalar t = nodes[i];
    Scalar p_n;
    Scalar dp_n;
    Scalar sum_sq;
    for (int it = 0; it < 3; ++it) {
      evaluate(t, p_n, dp_n, sum_sq);
      if (dp_n == Scalar(0)) {
        break;
      }
      const Scalar step = p_n / dp_n;
      if (!std::isfinite(double(step)) || std::abs(step) > Scalar(1e-6)) {
        break;
      }
      t -= step;
      if (std::abs(step) <= std::numeric_limits<Scalar>::epsilon() * std::abs(t)) {
        break;
      }
    }
    evaluate(t, p_n, dp_n, sum_sq);
    nodes[i] = t;
    weights[i] = Scalar(1) / sum_sq;
  }
  weights /= weights.sum();

  for (int i = 0; i < order; ++i) {
    if (!(nodes[i] > Scalar(0) && nodes[i] < Scalar(1)) || !(weights[i] > Scalar(0)) ||
        (i > 0 && !(nodes[i] > nodes[i - 1]))) {
      throw QuadratureError("gauss_jacobi_rule: degenerate rule for eta=" +
                            std::to_string(double(eta)) + ", order=" + std::to_string(order));
    }
  }
  return {eta, order, std::move(nodes), std::move(weights)};
}

/// Sum of weight_i * g(node_i), approximating eta * int_0^1 (1-t)^(eta-1) g(t) dt.
template <std::floating_point Scalar, class Fn>
Scalar integrate(const QuadratureRule<Scalar>& rule, Fn&& g) {
  Scalar acc = Scalar(0);
  for (int i = 0; i < rule.order; ++i) {
    const Scalar v = g(rule.nodes[i]);
    if (!std::isfinite(double(v))) {
      throw QuadratureError("integrate: integrand is not finite at t=" +
                            std::to_string(double(rule.nodes[i])));
    }
    acc += rule.weights[i] * v;
  }
  return acc;
}

namespace detail {

struct Kronrod21 {
  static constexpr std::array<double, 11> xgk = {
      0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
      0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
      0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
      0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
      0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
      0.000000000000000000000000000000000};
  static constexpr std::array<double, 11> wgk = {
      0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
      0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
      0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
      0.123491976262065851077208980701938, 0.134709217311473325928054001771707,
      0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
      0.149445554002916905664936468389821};
  // Gauss weights for xgk[1], xgk[3], ..., xgk[9].
  static constexpr std::array<double, 5> wg = {
      0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
      0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
      0.295524224714752870173892994651338};
};

struct Segment {
  double lo;
  double hi;
  double value;
  double error;
  bool operator<(const Segment& other) const { return error < other.error; }
};

template <class Fn>
Segment kronrod_segment(Fn& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const double fc = f(center);
  double kronrod = fc * Kronrod21::wgk[10];
  double gauss = 0.0;
  for (int i = 0; i < 10; ++i) {
    const double dx = half * Kronrod21::xgk[i];
    const double pair = f(center - dx) + f(center + dx);
    kronrod += Kronrod21::wgk[i] * pair;
    if (i % 2 == 1) {
      gauss += Kronrod21::wg[i / 2] * pair;
    }
  }
  kronrod *= half;
  gauss *= half;
  return {lo, hi, kronrod, std::abs(kronrod - gauss)};
}

}  // namespace detail

/// Adaptive reference value of eta * int_0^1 (1-t)^(eta-1) g(t) dt.
///
/// For eta < 1 the substitution u = (1-t)^eta turns the weight into the
/// uniform density, so the integrand is g(1 - u^(1/eta)) on [0, 1]. Otherwise
/// the weighted integrand is integrated directly.
template <class Fn>
double adaptive_reference(double eta, Fn&& g, double tol = 1e-12, int max_segments = 20000) {
  if (!(eta > 0.0)) {
    throw std::domain_error("adaptive_reference: eta must be positive");
  }
  if (!(tol >= 1e-13)) {
    throw std::domain_error("adaptive_reference: tol must be >= 1e-13");
  }
  auto integrand = [&](double x) -> double {
    double v;
    if (eta < 1.0) {
      // t = 1 - u^(1/eta), formed without cancellation near u = 1.
      const double t = x > 0.0 ? -std::expm1(std::log(x) / eta) : 1.0;
      v = g(t);
    } else {
      v = eta * std::pow(1.0 - x, eta - 1.0) * g(x);
    }
    if (!std::isfinite(v)) {
      throw QuadratureError("adaptive_reference: integrand is not finite");
    }
    return v;
  };

  std::priority_queue<detail::Segment> heap;
  heap.push(detail::kronrod_segment(integrand, 0.0, 1.0));
  double total = heap.top().value;
  double error = heap.top().error;
  int segments = 1;
  while (error > tol) {
    if (segments >= max_segments) {
      throw QuadratureError("adaptive_reference: tolerance " + std::to_string(tol) +
                            " not reached within " + std::to_string(max_segments) + " segments");
    }
    const detail::Segment worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    if (!(mid > worst.lo && mid < worst.hi)) {
      throw QuadratureError("adaptive_reference: interval underflow before reaching tolerance");
    }
    const detail::Segment left = detail::kronrod_segment(integrand, worst.lo, mid);
    const detail::Segment right = detail::kronrod_segment(integrand, mid, worst.hi);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++segments;
    if (error <= tol) {
      // Re-sum to drop accumulated drift from the incremental updates.
      double fresh_total = 0.0;
      double fresh_error = 0.0;
      auto copy = heap;
      while (!copy.empty()) {
        fresh_total += copy.top().value;
        fresh_error += copy.top().error;
        copy.pop();
      }
      total = fresh_total;
      error = fresh_error;
    }
  }
  return total;
}

}  // namespace fracbk

#endif  // FRACBK_QUADRATURE_HPP
