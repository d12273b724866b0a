// Gamma-family primitives used by the basis, the quadrature rules and the
// closed-form moments.

#ifndef FRACBK_SPECFUN_HPP
#define FRACBK_SPECFUN_HPP

#include <cmath>
#include <concepts>
#include <optional>
#include <stdexcept>
#include <string>

namespace fracbk {

/// ln Gamma(x) for x > 0.
template <std::floating_point Scalar>
Scalar log_gamma(Scalar x) {
  if (!(x > Scalar(0))) {
    throw std::domain_error("log_gamma: argument must be positive, got " + std::to_string(double(x)));
  }
#if defined(__GLIBC__)
  // lgamma() writes the global signgam; the reentrant form keeps this pure.
  int sign = 0;
  if constexpr (std::same_as<Scalar, float>) {
    return ::lgammaf_r(x, &sign);
  } else if constexpr (std::same_as<Scalar, double>) {
    return ::lgamma_r(x, &sign);
  } else {
    return ::lgammal_r(x, &sign);
  }
#else
  return std::lgamma(x);
#endif
}

/// Euler Beta function B(y, z) = Gamma(y) Gamma(z) / Gamma(y + z).
template <std::floating_point Scalar>
Scalar beta(Scalar y, Scalar z) {
  if (!(y > Scalar(0)) || !(z > Scalar(0))) {
    throw std::domain_error("beta: arguments must be positive");
  }
  return std::exp(log_gamma(y) + log_gamma(z) - log_gamma(y + z));
}

/// ln C(n, k). An empty optional is the zero coefficient (k outside [0, n]).
template <std::floating_point Scalar = double>
std::optional<Scalar> log_binomial(int n, int k) {
  if (n < 0) {
    throw std::domain_error("log_binomial: n must be non-negative");
  }
  if (k < 0 || k > n) {
    return std::nullopt;
  }
  if (k == 0 || k == n) {
    return Scalar(0);
  }
  return log_gamma(Scalar(n + 1)) - log_gamma(Scalar(k + 1)) - log_gamma(Scalar(n - k + 1));
}

/// Gamma(eta+1) Gamma(gamma k+1) / Gamma(eta + gamma k + 1), the kernel moment
/// eta * int_0^1 (1-t)^(eta-1) t^(gamma k) dt.
template <std::floating_point Scalar>
struct MomentCoeff {
  Scalar eta;
  Scalar gamma;
  int k;
  Scalar value;
};

template <std::floating_point Scalar>
MomentCoeff<Scalar> moment_coeff(Scalar eta, Scalar gamma, int k) {
  if (!(eta > Scalar(0)) || !(gamma > Scalar(0))) {
    throw std::domain_error("moment_coeff: eta and gamma must be positive");
  }
  if (k < 0) {
    throw std::domain_error("moment_coeff: k must be non-negative");
  }
  if (k == 0) {
    return {eta, gamma, 0, Scalar(1)};
  }
  const Scalar gk = gamma * Scalar(k);
  const Scalar value = std::exp(log_gamma(eta + Scalar(1)) + log_gamma(gk + Scalar(1)) -
                                log_gamma(eta + gk + Scalar(1)));
  return {eta, gamma, k, value};
}

}  // namespace fracbk

#endif  // FRACBK_SPECFUN_HPP
