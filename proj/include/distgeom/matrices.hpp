// SPDX-License-Identifier: Apache-2.0
//
// Dense symmetric-matrix core: distance and Gram matrix types, double
// centering, a cyclic Jacobi eigensolver, PSD testing and conversion between
// Gram matrices and point realizations.
#pragma once

#include <cstddef>
#include <vector>

#include <Eigen/Dense>

#include "distgeom/errors.hpp"

namespace distgeom {

struct Tolerances {
  // Jacobi stops once the off-diagonal Frobenius mass falls below
  // eig_tol * ||g||_F.
  double eig_tol = 1e-12;
  // Eigenvalues at or below rank_tol * max(1, lambda_max) count as zero.
  double rank_tol = 1e-9;
  // Relative slack for distance comparisons.
  double dist_tol = 1e-8;

  // Throws InvalidTolerance unless every field is finite and > 0.
  void validate() const;
};

// |a - b| <= tol * max(1, |a|, |b|).
bool nearly_equal(double a, double b, double tol);

// Symmetric, hollow, nonnegative n x n matrix of pairwise distances.
class DistanceMatrix {
 public:
  DistanceMatrix() = default;

  // Checks the invariants and snaps entries within tolerance onto them
  // (symmetrized, exact zero diagonal). Throws distgeom::Error naming the
  // first offending index.
  static DistanceMatrix validate(const Eigen::MatrixXd& raw,
                                 const Tolerances& tol = {});
  static DistanceMatrix validate(const std::vector<std::vector<double>>& raw,
                                 const Tolerances& tol = {});

  std::size_t size() const { return static_cast<std::size_t>(d_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return d_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  double squared(std::size_t i, std::size_t j) const {
    const double v = (*this)(i, j);
    return v * v;
  }
  const Eigen::MatrixXd& values() const { return d_; }
  double max_entry() const { return d_.size() == 0 ? 0.0 : d_.maxCoeff(); }

  // Principal submatrix on the given (distinct, in-range) indices.
  DistanceMatrix restrict_to(const std::vector<std::size_t>& indices) const;

 private:
  explicit DistanceMatrix(Eigen::MatrixXd d) : d_(std::move(d)) {}
  Eigen::MatrixXd d_;
};

// Symmetric matrix of inner products.
class GramMatrix {
 public:
  GramMatrix() = default;
  // Throws NonSquare / AsymmetricMatrix / NonFiniteEntry; the stored matrix
  // is the exact symmetric part of g.
  explicit GramMatrix(const Eigen::MatrixXd& g, const Tolerances& tol = {});

  std::size_t size() const { return static_cast<std::size_t>(g_.rows()); }
  double operator()(std::size_t i, std::size_t j) const {
    return g_(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
  const Eigen::MatrixXd& values() const { return g_; }

 private:
  Eigen::MatrixXd g_;
};

struct SpectralDecomposition {
  Eigen::VectorXd eigenvalues;   // descending
  Eigen::MatrixXd eigenvectors;  // column j pairs with eigenvalues[j]
};

// Ordered list of n points in R^k, one per row.
class Realization {
 public:
  Realization() = default;
  // Throws NonFiniteEntry on NaN/inf coordinates.
  explicit Realization(Eigen::MatrixXd coords);

  std::size_t size() const { return static_cast<std::size_t>(x_.rows()); }
  std::size_t dimension() const { return static_cast<std::size_t>(x_.cols()); }
  const Eigen::MatrixXd& coords() const { return x_; }
  Eigen::VectorXd point(std::size_t i) const {
    return x_.row(static_cast<Eigen::Index>(i)).transpose();
  }

 private:
  Eigen::MatrixXd x_;
};

struct PsdVerdict {
  bool is_psd = false;
  std::size_t rank = 0;        // eigenvalues above the rank threshold
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
};

DistanceMatrix validate_distance_matrix(const Eigen::MatrixXd& raw,
                                        const Tolerances& tol = {});

// G = -1/2 J D^2 J with J = I - (1/n) 1 1^T.
GramMatrix double_center(const DistanceMatrix& d);

// G_ij = 1/2 (d_0i^2 + d_0j^2 - d_ij^2), 1 <= i,j < n, anchored at point 0.
// Requires n >= 2.
GramMatrix schoenberg_gram(const DistanceMatrix& d);

// Cyclic Jacobi rotations, capped at 100 sweeps (NoConvergence beyond).
SpectralDecomposition symmetric_eigendecomposition(const GramMatrix& g,
                                                   const Tolerances& tol = {});

PsdVerdict psd_verdict(const SpectralDecomposition& spectrum,
                       const Tolerances& tol = {});
PsdVerdict psd_verdict(const GramMatrix& g, const Tolerances& tol = {});

// x = Y sqrt(Lambda) over the eigenvalues above the rank threshold; the
// result has rank(g) columns. Throws NotPSDInput when g is not PSD.
Realization realization_from_gram(const GramMatrix& g,
                                  const Tolerances& tol = {});

GramMatrix gram_from_realization(const Realization& x);

DistanceMatrix edm_from_realization(const Realization& x);

// Translates the points so their barycenter is the origin.
Realization center_realization(const Realization& x);

// Gaussian elimination with partial pivoting.
double determinant(Eigen::MatrixXd a);

}  // namespace distgeom
