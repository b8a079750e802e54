// SPDX-License-Identifier: Apache-2.0
#include "distgeom/embedding.hpp"

#include <algorithm>
#include <cmath>

namespace distgeom {

EdmVerdict classify_edm(const DistanceMatrix& d, const Tolerances& tol) {
  const PsdVerdict psd = psd_verdict(double_center(d), tol);
  return EdmVerdict{psd.is_psd, psd.is_psd ? psd.rank : 0, psd.min_eigenvalue};
}

MdsResult classical_mds(const DistanceMatrix& d, const Tolerances& tol,
                        std::optional<std::size_t> dim_cap) {
  const GramMatrix g = double_center(d);
  const SpectralDecomposition spectrum = symmetric_eigendecomposition(g, tol);
  const PsdVerdict psd = psd_verdict(spectrum, tol);

  MdsResult out;
  out.eigenvalues = spectrum.eigenvalues;
  out.inherent_dim = psd.rank;
  const std::size_t keep =
      dim_cap ? std::min(psd.rank, *dim_cap) : psd.rank;

  const auto n = static_cast<Eigen::Index>(d.size());
  Eigen::MatrixXd x(n, static_cast<Eigen::Index>(keep));
  for (Eigen::Index j = 0; j < x.cols(); ++j)
    x.col(j) = spectrum.eigenvectors.col(j) * std::sqrt(spectrum.eigenvalues(j));
  out.realization = Realization(std::move(x));

  const DistanceMatrix recovered = edm_from_realization(out.realization);
  const double scale = d.max_entry();
  if (scale > 0.0) {
    out.residual =
        (recovered.values() - d.values()).cwiseAbs().maxCoeff() / scale;
  } else {
    out.residual = n == 0 ? 0.0 : recovered.max_entry();
  }
  return out;
}

TrilaterationResult trilaterate(const TrilaterationProblem& p,
                                const Tolerances& tol) {
  tol.validate();
  const Eigen::MatrixXd& anchors = p.anchors.coords();
  const Eigen::Index m = anchors.rows();
  const Eigen::Index k = anchors.cols();
  if (static_cast<std::size_t>(m) != p.dists.size())
    throw Error(ErrorKind::SizeMismatch,
                "number of distances differs from number of anchors");
  if (m == 0 || k == 0)
    throw Error(ErrorKind::InvalidArgument,
                "trilateration needs at least one anchor in R^k, k >= 1");
  for (double r : p.dists)
    if (!(std::isfinite(r) && r >= 0.0))
      throw Error(ErrorKind::InvalidArgument,
                  "distances must be finite and nonnegative");

  // Work relative to the first anchor:
  //   2 (a_j - a_0) . y' = |a_j - a_0|^2 - r_j^2 + r_0^2,  y = a_0 + y'.
  const Eigen::RowVectorXd origin = anchors.row(0);
  Eigen::MatrixXd lhs(m - 1, k);
  Eigen::VectorXd rhs(m - 1);
  for (Eigen::Index j = 1; j < m; ++j) {
    const Eigen::RowVectorXd diff = anchors.row(j) - origin;
    lhs.row(j - 1) = 2.0 * diff;
    const double rj = p.dists[static_cast<std::size_t>(j)];
    const double r0 = p.dists[0];
    rhs(j - 1) = diff.squaredNorm() - rj * rj + r0 * r0;
  }

  if (m - 1 < k)
    throw Error(ErrorKind::DependentAnchors,
                "need at least k+1 anchors to fix a point in R^k");
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(lhs);
  qr.setThreshold(tol.rank_tol);
  if (qr.rank() < k)
    throw Error(ErrorKind::DependentAnchors,
                "anchors are affinely dependent");

  const Eigen::VectorXd y = origin.transpose() + qr.solve(rhs);

  double residual = 0.0;
  bool consistent = true;
  for (Eigen::Index j = 0; j < m; ++j) {
    const double achieved = (y - anchors.row(j).transpose()).norm();
    const double wanted = p.dists[static_cast<std::size_t>(j)];
    residual = std::max(residual, std::abs(achieved - wanted));
    consistent = consistent && nearly_equal(achieved, wanted, tol.dist_tol);
  }
  if (!consistent) return NoSolution{residual};
  return y;
}

}  // namespace distgeom
