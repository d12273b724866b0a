#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "fracbk/corpus.hpp"
#include "fracbk/moments.hpp"
#include "fracbk/operator.hpp"

using namespace fracbk;

namespace {

constexpr double pi = std::numbers::pi;

double binom(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

// alpha-Bernstein basis written out for s = 2, m >= 2.
double alpha_bernstein(int m, int j, double alpha, double z) {
  const double w = 1.0 - z;
  const double a = binom(m - 2, j) * (1 - alpha) * z + binom(m - 2, j - 2) * (1 - alpha) * w +
                   binom(m, j) * alpha * z * w;
  return a * std::pow(z, j - 1) * std::pow(w, m - j - 1);
}

// composite Simpson for int_0^1 h(t) dt
template <class H>
double simpson(H&& h, int n = 4000) {
  const double dx = 1.0 / n;
  double acc = h(0.0) + h(1.0);
  for (int i = 1; i < n; ++i) acc += (i % 2 ? 4.0 : 2.0) * h(i * dx);
  return acc * dx / 3.0;
}

OperatorParams random_params(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  OperatorParams p;
  p.m = 1 + static_cast<int>(u(rng) * 150);
  p.eta = 5.0 * (1.0 - u(rng));  // (0, 5]
  if (p.eta < 1e-3) p.eta = 1e-3;
  p.gamma = 1.0 + 4.0 * u(rng);
  p.alpha = u(rng);
  p.s = static_cast<int>(u(rng) * 7);
  return p;
}

const OperatorParams kTable1{40, 2.0, 4.0, 0.9, 3};

}  // namespace

TEST(Kernel, Constants) {
  const auto k = kernel_integrals({13, 2.5, 3.0, 0.4, 2}, [](double) { return 1.0; });
  for (int j = 0; j <= 13; ++j) EXPECT_NEAR(k.values[j], 1.0, 1e-14);
  const auto k2 = kernel_integrals({9, 0.7, 1.6, 0.4, 2}, [](double) { return -2.5; });
  for (int j = 0; j <= 9; ++j) EXPECT_NEAR(k2.values[j], -2.5, 1e-13);
}

TEST(Kernel, FirstMoment) {
  for (const OperatorParams& p : {kTable1, OperatorParams{7, 0.5, 2.5, 0.2, 4}}) {
    const double c1 = moment_coeff(p.eta, p.gamma, 1).value;
    const auto k = kernel_integrals(p, [](double x) { return x; });
    for (int j = 0; j <= p.m; ++j) EXPECT_NEAR(k.values[j], (j + c1) / (p.m + 1), 1e-14);
  }
}

TEST(Kernel, SecondMomentAtOrigin) {
  const auto k = kernel_integrals(kTable1, [](double x) { return x * x; });
  EXPECT_NEAR(k.values[0], (1.0 / 45.0) / 1681.0, 1e-18);
}

TEST(Kernel, NonNegativeFunction) {
  const auto k = kernel_integrals({30, 1.3, 2.2, 0.5, 3}, [](double x) { return std::sin(pi * x); });
  EXPECT_GE(k.values.minCoeff(), 0.0);
}

TEST(Kernel, Errors) {
  EXPECT_THROW(kernel_integrals(kTable1, [](double) { return 1.0; }, 0), std::invalid_argument);
  EXPECT_THROW(kernel_integrals(kTable1, parse("z*y")), EvalError);
  EXPECT_THROW(kernel_integrals(kTable1, parse("1/(z-z)")), EvalError);
  EXPECT_THROW(kernel_integrals(kTable1, [](double x) { return std::log(x - 0.5); }),
               QuadratureError);
}

TEST(LiftedRule, Normalized) {
  for (double gamma : {0.2, 0.75, 1.0, 1.5, 3.0, 4.3}) {
    for (double eta : {0.4, 1.0, 2.0}) {
      const auto r = lifted_rule(eta, gamma, 32);
      EXPECT_NEAR(r.weights.sum(), 1.0, 1e-14) << gamma << " " << eta;
      EXPECT_GE(r.points.minCoeff(), 0.0);
      EXPECT_LE(r.points.maxCoeff(), 1.0);
      const double c1 = r.weights.dot(r.points);
      EXPECT_NEAR(c1, moment_coeff(eta, gamma, 1).value, 1e-13) << gamma << " " << eta;
    }
  }
}

TEST(Apply, Examples) {
  EXPECT_NEAR(apply({17, 1.7, 2.5, 0.3, 4}, parse("5"), 0.42), 5.0, 1e-13);
  EXPECT_NEAR(apply({10, 1.0, 1.0, 1.0, 2}, parse("z"), 0.5), 0.5, 1e-14);
  const FunctionExpr f1 = resolve_function("f1");
  EXPECT_NEAR(std::abs(apply(kTable1, f1, 0.1) - f1(0.1)), 0.00123805, 5e-6);
}

TEST(Apply, VectorOverloadAndPrecompute) {
  const FractionalOperator op(kTable1, resolve_function("f1"));
  Eigen::VectorXd z = Eigen::VectorXd::LinSpaced(11, 0.0, 1.0);
  const Eigen::VectorXd v = op(z);
  for (int i = 0; i < 11; ++i) EXPECT_EQ(v[i], op(z[i]));
  EXPECT_EQ(op.kernel().values.size(), 41);
  EXPECT_THROW(op(1.01), std::out_of_range);
}

TEST(Moments, BasisClosedForms) {
  EXPECT_DOUBLE_EQ(l_moments({10, 1, 1, 0.3, 2}, 1, 0.3), 0.3);
  EXPECT_NEAR(l_moments({10, 1, 1, 1.0, 2}, 2, 0.5), 0.275, 1e-15);
  EXPECT_NEAR(l_moments({10, 1, 1, 0.5, 3}, 2, 0.5), 0.2825, 1e-15);
  EXPECT_THROW(l_moments({10, 1, 1, 0.5, 3}, 3, 0.5), UnsupportedOrder);
}

TEST(Moments, RawExamples) {
  EXPECT_NEAR(raw_moments({40, 1, 1, 1, 2}, 0.0).e1, 0.5 / 41.0, 1e-16);
  EXPECT_NEAR(raw_moments(kTable1, 1.0).e1, 40.0 / 41.0 + 1.0 / 15.0 / 41.0, 1e-15);
  EXPECT_NEAR(raw_moments({10, 1, 1, 1, 2}, 0.0).e2, (1.0 / 3.0) / 121.0, 1e-16);
  EXPECT_EQ(raw_moments(kTable1, 0.37).e0, 1.0);
}

TEST(Moments, CentralExamples) {
  for (int m : {1, 5, 40, 300}) {
    EXPECT_NEAR(central_moments({m, 1, 1, 0.6, 3}, 0.5).zeta, 0.0, 1e-16);
    EXPECT_NEAR(central_moments({m, 1, 1, 1, 2}, 0.0).xi2, 1.0 / (3.0 * (m + 1) * (m + 1)), 1e-16);
  }
}

TEST(Moments, CentralAgreesWithRaw) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 300; ++i) {
    const auto p = random_params(rng);
    const double z = u(rng);
    const auto r = raw_moments(p, z);
    const auto c = central_moments(p, z);
    EXPECT_NEAR(c.zeta, r.e1 - z, 1e-15);
    EXPECT_NEAR(c.xi2, std::max(0.0, r.e2 - 2 * z * r.e1 + z * z), 1e-14);
    EXPECT_GE(c.xi2, 0.0);
    EXPECT_GE(r.e2, r.e1 * r.e1 - 1e-12);
  }
}

TEST(Moments, CentralVanishWithDegree) {
  double prev = 1.0;
  for (int m : {10, 100, 1000, 10000}) {
    const auto c = central_moments({m, 2.0, 3.0, 0.4, 3}, 0.3);
    EXPECT_LT(c.xi2, prev);
    prev = c.xi2;
  }
  EXPECT_LT(prev, 1e-4);
}

TEST(Moments, OperatorOnMonomials) {
  std::mt19937_64 rng(1234);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const auto p = random_params(rng);
    const double z = u(rng);
    const auto mo = raw_moments(p, z);
    const FractionalOperator e0(p, [](double) { return 1.0; });
    const FractionalOperator e1(p, [](double t) { return t; });
    const FractionalOperator e2(p, [](double t) { return t * t; });
    EXPECT_NEAR(e0(z), mo.e0, 1e-11);
    EXPECT_NEAR(e1(z), mo.e1, 1e-11);
    EXPECT_NEAR(e2(z), mo.e2, 1e-11) << p.m << " " << p.eta << " " << p.gamma << " " << p.s;
    const FractionalOperator sq(p, [z](double t) { return (t - z) * (t - z); });
    EXPECT_NEAR(sq(z), central_moments(p, z).xi2, 1e-11);
  }
}

TEST(Moments, RecurrenceMatchesClosedForm) {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const auto p = random_params(rng);
    const double z = u(rng);
    const auto mo = raw_moments(p, z);
    EXPECT_NEAR(moment_recurrence(p, 0, z), 1.0, 1e-15);
    EXPECT_NEAR(moment_recurrence(p, 1, z), mo.e1, 1e-14);
    EXPECT_NEAR(moment_recurrence(p, 2, z), mo.e2, 1e-13);
  }
  EXPECT_THROW(moment_recurrence(kTable1, 3, 0.5), UnsupportedOrder);
}

TEST(SpecialCase, Tagging) {
  EXPECT_EQ(special_case({10, 2.0, 1.0, 0.9, 2}), SpecialCase::RLBK);
  EXPECT_EQ(special_case({10, 1.0, 3.0, 0.9, 2}), SpecialCase::BBK);
  EXPECT_EQ(special_case({10, 1.0, 1.0, 0.9, 2}), SpecialCase::FBK);
  EXPECT_EQ(special_case({10, 2.0, 3.0, 0.9, 2}), SpecialCase::None);
  EXPECT_STREQ(to_string(SpecialCase::RLBK), "RLBK");
}

TEST(SpecialCase, AlphaBernsteinBasis) {
  for (int m : {2, 3, 8, 25}) {
    for (double a : {0.0, 0.35, 0.9}) {
      const BlendedBasis<double> b({m, 1.0, 1.0, a, 2});
      for (double z : {0.1, 0.5, 0.77}) {
        for (int j = 0; j <= m; ++j) {
          EXPECT_NEAR(b.weight(j, z), alpha_bernstein(m, j, a, z), 1e-14) << m << " " << j;
        }
      }
    }
  }
}

TEST(SpecialCase, KantorovichAverages) {
  // eta = gamma = 1: the kernel is the mean of f over [j, j+1]/(m+1)
  const FunctionExpr f = resolve_function("f4");
  const OperatorParams p{12, 1.0, 1.0, 0.9, 2};
  const FractionalOperator op(p, f);
  for (double z : {0.2, 0.45, 0.9}) {
    double ref = 0.0;
    for (int j = 0; j <= p.m; ++j) {
      const double mean = simpson([&](double t) { return f((j + t) / (p.m + 1)); });
      ref += alpha_bernstein(p.m, j, p.alpha, z) * mean;
    }
    EXPECT_NEAR(op(z), ref, 1e-13);
  }
}

TEST(SpecialCase, FractionalKernelAgainstAdaptive) {
  // gamma = 1, s = 2 and eta = 1, gamma = 2 against independent integrators
  const FunctionExpr f = resolve_function("f1");
  for (const OperatorParams& p : {OperatorParams{15, 2.0, 1.0, 0.9, 2},
                                  OperatorParams{15, 1.0, 2.0, 0.9, 2}}) {
    const FractionalOperator op(p, f);
    for (double z : {0.2, 0.6}) {
      double ref = 0.0;
      for (int j = 0; j <= p.m; ++j) {
        const double kj =
            p.eta == 1.0
                ? simpson([&](double t) { return f((j + std::pow(t, p.gamma)) / (p.m + 1)); })
                : adaptive_reference(p.eta, [&](double t) { return f((j + t) / (p.m + 1)); });
        ref += alpha_bernstein(p.m, j, p.alpha, z) * kj;
      }
      EXPECT_NEAR(op(z), ref, 1e-12);
    }
  }
}

TEST(Operator, PositivityAndBound) {
  const FunctionExpr f2 = resolve_function("f2");
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 50; ++i) {
    const auto p = random_params(rng);
    const FractionalOperator pos(p, [](double t) { return std::sin(pi * t) + 0.01; });
    const FractionalOperator op(p, f2);
    for (int k = 0; k <= 20; ++k) {
      const double z = k / 20.0;
      EXPECT_GT(pos(z), 0.0);
      EXPECT_LE(std::abs(op(z)), 1.0 + 1e-12);
    }
  }
}

TEST(Operator, Linear) {
  const OperatorParams p{25, 1.5, 2.0, 0.6, 3};
  const FractionalOperator a(p, resolve_function("f1"));
  const FractionalOperator b(p, resolve_function("f2"));
  const FractionalOperator c(p, parse("3*z*(z-4/7)*sin(pi*z) - 2*(1-z)*cos(2*pi*z)"));
  for (double z : {0.0, 0.3, 0.8, 1.0}) EXPECT_NEAR(c(z), 3 * a(z) - 2 * b(z), 1e-14);
}

TEST(Operator, ConvergesWithDegree) {
  const FunctionExpr f1 = resolve_function("f1");
  double prev = 1.0;
  for (int m : {20, 30, 70, 200}) {
    const FractionalOperator op({m, 3.0, 3.0, 0.9, 4}, f1);
    double worst = 0.0;
    for (int i = 0; i <= 200; ++i) worst = std::max(worst, std::abs(op(i / 200.0) - f1(i / 200.0)));
    EXPECT_LT(worst, prev) << m;
    prev = worst;
  }
}

TEST(Operator, FractionalExponentBelowOne) {
  const FunctionExpr f1 = resolve_function("f1");
  const OperatorParams p{20, 0.6, 0.5, 0.7, 3};
  const FractionalOperator op(p, f1);
  const FractionalOperator e1(p, [](double t) { return t; });
  const FractionalOperator e2(p, [](double t) { return t * t; });
  for (double z : {0.0, 0.25, 0.9}) {
    const auto mo = raw_moments(p, z);
    EXPECT_NEAR(e1(z), mo.e1, 1e-12);
    EXPECT_NEAR(e2(z), mo.e2, 1e-12);
    double ref = 0.0;
    const auto row = basis_row(p, z);
    for (int j = 0; j <= p.m; ++j) {
      ref += row.weights[j] *
             adaptive_reference(p.eta, [&](double t) { return f1((j + std::sqrt(t)) / 21.0); });
    }
    EXPECT_NEAR(op(z), ref, 1e-11);
  }
}

TEST(Operator, RejectsInvalidParams) {
  EXPECT_THROW(FractionalOperator({0, 1, 1, 1, 1}, [](double) { return 1.0; }), std::invalid_argument);
  EXPECT_THROW(FractionalOperator({3, -1, 1, 1, 1}, [](double) { return 1.0; }), std::invalid_argument);
  EXPECT_THROW(FractionalOperator({3, 1, 0, 1, 1}, [](double) { return 1.0; }), std::invalid_argument);
  EXPECT_THROW(FractionalOperator({3, 1, 1, 2, 1}, [](double) { return 1.0; }), std::invalid_argument);
  EXPECT_THROW(FractionalOperator({3, 1, 1, 1, -1}, [](double) { return 1.0; }), std::invalid_argument);
}
