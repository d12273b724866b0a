// Closed-form moments of the blending basis and of the fractional operator.
//
// With c_k = Gamma(eta+1) Gamma(gamma k + 1) / Gamma(eta + gamma k + 1) and
// A = m + (1 - alpha) s (s - 1) (A = m when m < s, see below):
//
//   R(e0) = 1
//   R(e1) = (m z + c_1) / (m + 1)
//   R(e2) = (m^2 z^2 + z (1-z) A + 2 m c_1 z + c_2) / (m + 1)^2
//
// and the central moments
//
//   zeta = (c_1 - z) / (m + 1)
//   xi2  = (z^2 + z (1-z) A - 2 c_1 z + c_2) / (m + 1)^2.

#ifndef FRACBK_MOMENTS_HPP
#define FRACBK_MOMENTS_HPP

#include <concepts>
#include <stdexcept>
#include <string>

#include "fracbk/params.hpp"
#include "fracbk/specfun.hpp"

namespace fracbk {

template <std::floating_point Scalar = double>
struct MomentSet {
  Scalar e0;
  Scalar e1;
  Scalar e2;
};

template <std::floating_point Scalar = double>
struct CentralMoments {
  Scalar zeta;
  Scalar xi2;
};

class UnsupportedOrder : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

namespace detail {

// Coefficient of z(1-z)/m^2 in the second basis moment. The classical branch
// (m < s) is the plain Bernstein basis, whose variance factor is m.
template <std::floating_point Scalar>
Scalar variance_factor(const OperatorParams& p) {
  if (p.m < p.s) {
    return Scalar(p.m);
  }
  return Scalar(p.m) + (Scalar(1) - Scalar(p.alpha)) * Scalar(p.s) * Scalar(p.s - 1);
}

}  // namespace detail

/// Moments of the blending basis operator L_m applied to e_n, n <= 2.
template <std::floating_point Scalar = double>
Scalar l_moments(const OperatorParams& p, int n, Scalar z) {
  switch (n) {
    case 0:
      return Scalar(1);
    case 1:
      return z;
    case 2: {
      const Scalar m = Scalar(p.m);
      return z * z + z * (Scalar(1) - z) * detail::variance_factor<Scalar>(p) / (m * m);
    }
    default:
      throw UnsupportedOrder("l_moments: closed form available for n <= 2 only, got " +
                             std::to_string(n));
  }
}

template <std::floating_point Scalar = double>
MomentSet<Scalar> raw_moments(const OperatorParams& p, Scalar z) {
  p.validate();
  const Scalar m = Scalar(p.m);
  const Scalar m1 = m + Scalar(1);
  const Scalar c1 = moment_coeff<Scalar>(Scalar(p.eta), Scalar(p.gamma), 1).value;
  const Scalar c2 = moment_coeff<Scalar>(Scalar(p.eta), Scalar(p.gamma), 2).value;
  const Scalar a = detail::variance_factor<Scalar>(p);
  const Scalar e1 = m / m1 * z + c1 / m1;
  const Scalar e2 = (m * m * z * z + z * (Scalar(1) - z) * a + Scalar(2) * m * c1 * z + c2) /
                    (m1 * m1);
  return {Scalar(1), e1, e2};
}

/// Central moments. xi2 uses the expanded form of e2 - 2 z e1 + z^2, which is
/// free of the cancellation of the direct combination.
template <std::floating_point Scalar = double>
CentralMoments<Scalar> central_moments(const OperatorParams& p, Scalar z) {
  p.validate();
  const Scalar m1 = Scalar(p.m) + Scalar(1);
  const Scalar c1 = moment_coeff<Scalar>(Scalar(p.eta), Scalar(p.gamma), 1).value;
  const Scalar c2 = moment_coeff<Scalar>(Scalar(p.eta), Scalar(p.gamma), 2).value;
  const Scalar a = detail::variance_factor<Scalar>(p);
  const Scalar zeta = (c1 - z) / m1;
  Scalar xi2 = (z * z + z * (Scalar(1) - z) * a - Scalar(2) * c1 * z + c2) / (m1 * m1);
  if (xi2 < Scalar(0)) {
    xi2 = Scalar(0);  // rounding only; the exact value is positive
  }
  return {zeta, xi2};
}

/// R(e_i; z) through the binomial recurrence over the basis moments.
template <std::floating_point Scalar = double>
Scalar moment_recurrence(const OperatorParams& p, int i, Scalar z) {
  if (i < 0 || i > 2) {
    throw UnsupportedOrder("moment_recurrence: order must be 0, 1 or 2, got " +
                           std::to_string(i));
  }
  p.validate();
  const Scalar eta = Scalar(p.eta);
  const Scalar gamma = Scalar(p.gamma);
  const Scalar m = Scalar(p.m);
  const Scalar log_gamma_eta1 = log_gamma(eta + Scalar(1));
  Scalar sum = Scalar(0);
  Scalar binom = Scalar(1);
  Scalar m_pow = Scalar(1);
  for (int n = 0; n <= i; ++n) {
    const Scalar gk = gamma * Scalar(i - n);
    const Scalar gamma_ratio = std::exp(log_gamma_eta1 + log_gamma(gk + Scalar(1)) -
                                        log_gamma(eta + gk + Scalar(1)));
    sum += binom * m_pow * l_moments<Scalar>(p, n, z) * gamma_ratio;
    binom = binom * Scalar(i - n) / Scalar(n + 1);
    m_pow *= m;
  }
  return sum / std::pow(m + Scalar(1), i);
}

enum class SpecialCase { RLBK, BBK, FBK, OZK, None };

inline const char* to_string(SpecialCase c) {
  switch (c) {
    case SpecialCase::RLBK: return "RLBK";
    case SpecialCase::BBK: return "BBK";
    case SpecialCase::FBK: return "FBK";
    case SpecialCase::OZK: return "OZK";
    default: return "none";
  }
}

/// Known operator families this one collapses to, most specific first.
inline SpecialCase special_case(const OperatorParams& p) {
  const bool eta1 = p.eta == 1.0;
  const bool gamma1 = p.gamma == 1.0;
  const bool s2 = p.s == 2;
  if (gamma1 && eta1 && s2) return SpecialCase::FBK;
  if (p.alpha == 1.0 && eta1 && s2) return SpecialCase::OZK;
  if (gamma1 && s2) return SpecialCase::RLBK;
  if (eta1) return SpecialCase::BBK;
  return SpecialCase::None;
}

}  // namespace fracbk

#endif  // FRACBK_MOMENTS_HPP
