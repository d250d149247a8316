#ifndef NETBAND_TESTS_TEST_UTIL_HPP
#define NETBAND_TESTS_TEST_UTIL_HPP

#include <Eigen/Dense>
#include <utility>

#include "netband/estimators.hpp"
#include "netband/instance.hpp"
#include "netband/rng.hpp"

namespace test_util {

/// Exhaustive maximum of 1' X a over the hypercube {-1,+1}^d. Independent
/// oracle for the sign-based optimum; d <= ~20.
inline std::pair<double, Eigen::VectorXd> hypercube_argmax(
    const Eigen::MatrixXd& effects) {
  const int d = static_cast<int>(effects.cols());
  const Eigen::RowVectorXd column_sums = effects.colwise().sum();
  double best = -1e300;
  Eigen::VectorXd best_action = Eigen::VectorXd::Ones(d);
  for (long mask = 0; mask < (1L << d); ++mask) {
    double value = 0.0;
    for (int j = 0; j < d; ++j) {
      value += column_sums[j] * (((mask >> j) & 1) ? 1.0 : -1.0);
    }
    if (value > best) {
      best = value;
      for (int j = 0; j < d; ++j) {
        best_action[j] = ((mask >> j) & 1) ? 1.0 : -1.0;
      }
    }
  }
  return {best, best_action};
}

/// Dense random effect matrix with entries uniform in [-1, 1] and a given
/// zero fraction.
inline Eigen::MatrixXd random_effects(int d, netband::Rng& rng,
                                      double zero_fraction = 0.3) {
  Eigen::MatrixXd x(d, d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      x(i, j) =
          rng.uniform01() < zero_fraction ? 0.0 : rng.uniform(-1.0, 1.0);
    }
  }
  return x;
}

/// Rademacher action matrix.
inline Eigen::MatrixXd random_actions(int n, int d, netband::Rng& rng) {
  Eigen::MatrixXd a(n, d);
  for (int t = 0; t < n; ++t) {
    for (int j = 0; j < d; ++j) a(t, j) = rng.rademacher();
  }
  return a;
}

/// Slow proximal-gradient reference for the lasso objective
///   (1/2n)||y - A g||^2 + lambda ||g||_1.
/// Fixed step 1/L with L the largest eigenvalue of A'A/n; runs until the
/// iterate stalls or max_iters. Independent of the coordinate-descent path.
inline Eigen::VectorXd lasso_proximal_reference(const Eigen::MatrixXd& actions,
                                                const Eigen::VectorXd& y,
                                                double lambda,
                                                long max_iters = 1000000) {
  const double n = static_cast<double>(actions.rows());
  const Eigen::MatrixXd gram = actions.transpose() * actions / n;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eigensolver(gram);
  const double lipschitz = eigensolver.eigenvalues().maxCoeff();
  const double step = 1.0 / std::max(lipschitz, 1e-12);
  const Eigen::VectorXd corr = actions.transpose() * y / n;

  Eigen::VectorXd g = Eigen::VectorXd::Zero(actions.cols());
  for (long iter = 0; iter < max_iters; ++iter) {
    const Eigen::VectorXd gradient = gram * g - corr;
    Eigen::VectorXd next = g - step * gradient;
    const double threshold = step * lambda;
    for (Eigen::Index j = 0; j < next.size(); ++j) {
      if (next[j] > threshold) {
        next[j] -= threshold;
      } else if (next[j] < -threshold) {
        next[j] += threshold;
      } else {
        next[j] = 0.0;
      }
    }
    const double change = (next - g).cwiseAbs().maxCoeff();
    g = next;
    if (change < 1e-14) break;
  }
  return g;
}

}  // namespace test_util

#endif  // NETBAND_TESTS_TEST_UTIL_HPP
