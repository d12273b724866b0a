#ifndef FRACBK_PARAMS_HPP
#define FRACBK_PARAMS_HPP

#include <stdexcept>
#include <string>

namespace fracbk {

/// Parameters of one univariate operator instance.
///
/// `m` is the degree, `eta` the fractional order, `gamma` the exponent applied
/// to the integration variable, `alpha` the shape parameter and `s` the
/// blending parameter. `s > m` is allowed and selects the classical basis.
struct OperatorParams {
  int m = 1;
  double eta = 1.0;
  double gamma = 1.0;
  double alpha = 1.0;
  int s = 1;

  void validate() const {
    if (m < 1) {
      throw std::invalid_argument("OperatorParams: m must be >= 1, got " + std::to_string(m));
    }
    if (!(eta > 0.0)) {
      throw std::invalid_argument("OperatorParams: eta must be > 0");
    }
    if (!(gamma > 0.0)) {
      throw std::invalid_argument("OperatorParams: gamma must be > 0");
    }
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
      throw std::invalid_argument("OperatorParams: alpha must lie in [0, 1]");
    }
    if (s < 0) {
      throw std::invalid_argument("OperatorParams: s must be >= 0");
    }
  }

  friend bool operator==(const OperatorParams&, const OperatorParams&) = default;
};

/// Tensor-product parameters: one independent set per axis.
struct BivariateParams {
  OperatorParams px;
  OperatorParams py;

  void validate() const {
    px.validate();
    py.validate();
  }

  static BivariateParams symmetric(const OperatorParams& p) { return {p, p}; }

  friend bool operator==(const BivariateParams&, const BivariateParams&) = default;
};

}  // namespace fracbk

#endif  // FRACBK_PARAMS_HPP
