// SPDX-License-Identifier: Apache-2.0
//
// Classical multidimensional scaling, exact-EDM classification and
// trilateration.
#pragma once

#include <cstddef>
#include <optional>
#include <variant>
#include <vector>

#include "distgeom/matrices.hpp"

namespace distgeom {

struct EdmVerdict {
  bool is_edm = false;
  // Minimal embedding dimension when is_edm.
  std::size_t rank = 0;
  // Most negative eigenvalue of the double-centered matrix; the witness
  // when !is_edm.
  double min_eigenvalue = 0.0;
};

EdmVerdict classify_edm(const DistanceMatrix& d, const Tolerances& tol = {});

struct MdsResult {
  Realization realization;
  Eigen::VectorXd eigenvalues;   // full spectrum, descending
  std::size_t inherent_dim = 0;  // eigenvalues above the rank threshold
  // max_ij |d'_ij - d_ij| / max_ij d_ij (0 for the all-zero matrix).
  double residual = 0.0;
};

// Keeps min(H, dim_cap) leading eigenpairs of the double-centered matrix.
MdsResult classical_mds(const DistanceMatrix& d, const Tolerances& tol = {},
                        std::optional<std::size_t> dim_cap = std::nullopt);

struct TrilaterationProblem {
  Realization anchors;        // m points in R^k
  std::vector<double> dists;  // distance from the unknown point to each anchor
};

struct NoSolution {
  // Largest |‖y - anchor_j‖ - dists_j| at the least-squares candidate.
  double residual;
};

using TrilaterationResult = std::variant<Eigen::VectorXd, NoSolution>;

// Subtracts the first sphere equation from the others, solves the linear
// system by least squares and verifies the candidate against every sphere.
// Throws DependentAnchors when the anchors do not affinely span R^k,
// SizeMismatch / InvalidArgument on malformed input.
TrilaterationResult trilaterate(const TrilaterationProblem& p,
                                const Tolerances& tol = {});

}  // namespace distgeom
