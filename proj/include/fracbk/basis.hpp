// Generalized blending basis on [0, 1].
//
// For degree m and blending parameter s the basis is the classical Bernstein
// basis when m < s, and otherwise
//
//   q_j(z) = (1-a) C(m-s, j-s) z^(j-s+1) (1-z)^(m-j)
//          + (1-a) C(m-s, j)   z^j       (1-z)^(m-s-j+1)
//          +  a    C(m, j)     z^j       (1-z)^(m-j),        j = 0..m.
//
// The branch is taken on the degree, not on the index j. Binomials outside
// their range are zero and the matching power is never formed.

#ifndef FRACBK_BASIS_HPP
#define FRACBK_BASIS_HPP

#include <cmath>
#include <concepts>
#include <stdexcept>
#include <string>

#include <Eigen/Core>

#include "fracbk/params.hpp"
#include "fracbk/specfun.hpp"

namespace fracbk {

template <std::floating_point Scalar>
using VectorX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <std::floating_point Scalar>
struct BasisRow {
  int degree = 0;
  Scalar point = Scalar(0);
  VectorX<Scalar> weights;
};

namespace detail {

template <std::floating_point Scalar>
VectorX<Scalar> log_binomial_row(int n) {
  VectorX<Scalar> row(n + 1);
  for (int k = 0; k <= n; ++k) {
    row[k] = *log_binomial<Scalar>(n, k);
  }
  return row;
}

inline void check_point(double z) {
  if (!(z >= 0.0 && z <= 1.0)) {
    throw std::out_of_range("basis: z must lie in [0, 1], got " + std::to_string(z));
  }
}

}  // namespace detail

/// Basis evaluator for fixed parameters. Log-binomial rows are computed once;
/// each row() call costs O(m).
template <std::floating_point Scalar = double>
class BlendedBasis {
 public:
  explicit BlendedBasis(const OperatorParams& params)
      : m_(params.m), s_(params.s), alpha_(Scalar(params.alpha)), classical_(params.m < params.s) {
    params.validate();
    full_ = detail::log_binomial_row<Scalar>(m_);
    if (!classical_) {
      reduced_ = detail::log_binomial_row<Scalar>(m_ - s_);
    }
  }

  int degree() const { return m_; }
  bool classical() const { return classical_; }

  BasisRow<Scalar> row(Scalar z) const {
    detail::check_point(double(z));
    Powers pw(z);
    BasisRow<Scalar> out{m_, z, VectorX<Scalar>(m_ + 1)};
    for (int j = 0; j <= m_; ++j) {
      out.weights[j] = weight_unchecked(j, pw);
    }
    return out;
  }

  Scalar weight(int j, Scalar z) const {
    if (j < 0 || j > m_) {
      throw std::out_of_range("basis: index j=" + std::to_string(j) + " outside [0, " +
                              std::to_string(m_) + "]");
    }
    detail::check_point(double(z));
    return weight_unchecked(j, Powers(z));
  }

 private:
  struct Powers {
    explicit Powers(Scalar z)
        : z(z), log_z(z > Scalar(0) ? std::log(z) : Scalar(0)),
          log_1mz(z < Scalar(1) ? std::log1p(-z) : Scalar(0)) {}
    Scalar z;
    Scalar log_z;
    Scalar log_1mz;

    // exp(log_c) z^p (1-z)^q with 0^0 = 1.
    Scalar term(Scalar log_c, int p, int q) const {
      if (z == Scalar(0)) {
        return p == 0 ? std::exp(log_c) : Scalar(0);
      }
      if (z == Scalar(1)) {
        return q == 0 ? std::exp(log_c) : Scalar(0);
      }
      return std::exp(log_c + Scalar(p) * log_z + Scalar(q) * log_1mz);
    }
  };

  Scalar weight_unchecked(int j, const Powers& pw) const {
    const Scalar plain = pw.term(full_[j], j, m_ - j);
    if (classical_) {
      return plain;
    }
    Scalar blended = alpha_ * plain;
    const Scalar rest = Scalar(1) - alpha_;
    if (rest != Scalar(0)) {
      const int n = m_ - s_;
      if (j >= s_) {
        blended += rest * pw.term(reduced_[j - s_], j - s_ + 1, m_ - j);
      }
      if (j <= n) {
        blended += rest * pw.term(reduced_[j], j, n - j + 1);
      }
    }
    return blended;
  }

  int m_;
  int s_;
  Scalar alpha_;
  bool classical_;
  VectorX<Scalar> full_;
  VectorX<Scalar> reduced_;
};

template <std::floating_point Scalar>
Scalar basis_weight(const OperatorParams& params, int j, Scalar z) {
  return BlendedBasis<Scalar>(params).weight(j, z);
}

template <std::floating_point Scalar>
BasisRow<Scalar> basis_row(const OperatorParams& params, Scalar z) {
  return BlendedBasis<Scalar>(params).row(z);
}

}  // namespace fracbk

#endif  // FRACBK_BASIS_HPP
