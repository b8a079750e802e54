// SPDX-License-Identifier: Apache-2.0
//
// Test-only generators and brute-force oracles. Nothing here calls into the
// code paths it is used to check.
#pragma once

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

#include <Eigen/Dense>

namespace distgeom::testing {

using Rng = std::mt19937_64;

inline Eigen::MatrixXd random_points(Rng& rng, int n, int k, double lo = -1.0,
                                     double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  Eigen::MatrixXd x(n, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < k; ++j) x(i, j) = u(rng);
  return x;
}

// Pairwise Euclidean distances straight from coordinates.
inline Eigen::MatrixXd pairwise_distances(const Eigen::MatrixXd& x) {
  const auto n = x.rows();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) {
      double s = 0.0;
      for (Eigen::Index c = 0; c < x.cols(); ++c) {
        const double t = x(i, c) - x(j, c);
        s += t * t;
      }
      d(i, j) = std::sqrt(s);
    }
  return d;
}

// Leibniz expansion over all permutations; fine up to 7x7.
inline double leibniz_determinant(const Eigen::MatrixXd& a) {
  const int n = static_cast<int>(a.rows());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  double total = 0.0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) ++inversions;
    double term = (inversions % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i < n; ++i) term *= a(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

// Bordered squared-distance matrix, built independently of the library.
inline Eigen::MatrixXd bordered_cm_matrix(const Eigen::MatrixXd& d) {
  const auto m = d.rows();
  Eigen::MatrixXd b = Eigen::MatrixXd::Ones(m + 1, m + 1);
  for (Eigen::Index i = 0; i < m; ++i)
    for (Eigen::Index j = 0; j < m; ++j) b(i, j) = d(i, j) * d(i, j);
  b(m, m) = 0.0;
  return b;
}

// Volume of the simplex spanned by the rows of x (m points in R^(m-1)) via
// the parallelepiped determinant of edge vectors.
inline double coordinate_simplex_volume(const Eigen::MatrixXd& x) {
  const auto n = x.rows() - 1;
  Eigen::MatrixXd e(n, n);
  for (Eigen::Index i = 0; i < n; ++i) e.row(i) = x.row(i + 1) - x.row(0);
  double fact = 1.0;
  for (int k = 2; k <= n; ++k) fact *= k;
  return std::abs(leibniz_determinant(e)) / fact;
}

// Affine rank of the rows of x from the singular values of the centered
// coordinates.
inline int affine_rank(const Eigen::MatrixXd& x, double rel = 1e-9) {
  if (x.rows() == 0 || x.cols() == 0) return 0;
  const Eigen::MatrixXd c = x.rowwise() - x.colwise().mean();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(c);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  return static_cast<int>((s.array() > rel * s(0)).count());
}

inline double max_relative_gap(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  // Relative where b is nonzero, absolute on zero entries.
  double worst = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const double scale = b(i, j) != 0.0 ? std::abs(b(i, j)) : 1.0;
      worst = std::max(worst, std::abs(a(i, j) - b(i, j)) / scale);
    }
  return worst;
}

}  // namespace distgeom::testing
