// SPDX-License-Identifier: Apache-2.0
#include "distgeom/matrices.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace distgeom {

namespace {

std::string index_message(const char* what, Eigen::Index i, Eigen::Index j) {
  std::ostringstream os;
  os << what << " at (" << i << "," << j << ")";
  return os.str();
}

void require_finite(const Eigen::MatrixXd& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!std::isfinite(m(i, j)))
        throw Error(ErrorKind::NonFiniteEntry,
                    index_message("non-finite entry", i, j),
                    static_cast<std::size_t>(i), static_cast<std::size_t>(j));
}

constexpr int kMaxSweeps = 100;

}  // namespace

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonSquare: return "NonSquare";
    case ErrorKind::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorKind::NegativeEntry: return "NegativeEntry";
    case ErrorKind::NonzeroDiagonal: return "NonzeroDiagonal";
    case ErrorKind::NonFiniteEntry: return "NonFiniteEntry";
    case ErrorKind::ZeroOffDiagonal: return "ZeroOffDiagonal";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::InvalidTolerance: return "InvalidTolerance";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::NotPSDInput: return "NotPSDInput";
    case ErrorKind::SizeMismatch: return "SizeMismatch";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::DependentAnchors: return "DependentAnchors";
    case ErrorKind::GeodesicTooLong: return "GeodesicTooLong";
  }
  return "Unknown";
}

void Tolerances::validate() const {
  for (double v : {eig_tol, rank_tol, dist_tol})
    if (!(std::isfinite(v) && v > 0.0))
      throw Error(ErrorKind::InvalidTolerance,
                  "tolerances must be finite and strictly positive");
}

bool nearly_equal(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

DistanceMatrix DistanceMatrix::validate(const Eigen::MatrixXd& raw,
                                        const Tolerances& tol) {
  tol.validate();
  if (raw.rows() != raw.cols()) {
    std::ostringstream os;
    os << "matrix is " << raw.rows() << "x" << raw.cols() << ", not square";
    throw Error(ErrorKind::NonSquare, os.str());
  }
  require_finite(raw);
  const Eigen::Index n = raw.rows();
  const double scale =
      std::max(1.0, n == 0 ? 0.0 : raw.cwiseAbs().maxCoeff());
  const double slack = tol.dist_tol * scale;

  Eigen::MatrixXd d(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      const double v = raw(i, j);
      if (i == j) {
        if (std::abs(v) > slack)
          throw Error(ErrorKind::NonzeroDiagonal,
                      index_message("nonzero diagonal", i, j),
                      static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        d(i, j) = 0.0;
        continue;
      }
      if (v < -slack)
        throw Error(ErrorKind::NegativeEntry,
                    index_message("negative entry", i, j),
                    static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      if (std::abs(v - raw(j, i)) > slack) {
        std::ostringstream os;
        os << "asymmetric entries at (" << i << "," << j << ")/(" << j << ","
           << i << ")";
        throw Error(ErrorKind::AsymmetricMatrix, os.str(),
                    static_cast<std::size_t>(i), static_cast<std::size_t>(j));
      }
      d(i, j) = std::max(0.0, 0.5 * (v + raw(j, i)));
    }
  }
  return DistanceMatrix(std::move(d));
}

DistanceMatrix DistanceMatrix::validate(
    const std::vector<std::vector<double>>& raw, const Tolerances& tol) {
  const auto n = static_cast<Eigen::Index>(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i].size() != raw.size()) {
      std::ostringstream os;
      os << "row " << i << " has " << raw[i].size() << " entries, expected "
         << raw.size();
      throw Error(ErrorKind::NonSquare, os.str(), i, raw[i].size());
    }
  }
  Eigen::MatrixXd m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      m(i, j) = raw[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  return validate(m, tol);
}

DistanceMatrix DistanceMatrix::restrict_to(
    const std::vector<std::size_t>& indices) const {
  const auto m = static_cast<Eigen::Index>(indices.size());
  Eigen::MatrixXd sub(m, m);
  for (Eigen::Index a = 0; a < m; ++a) {
    for (Eigen::Index b = 0; b < m; ++b) {
      const auto i = indices[static_cast<std::size_t>(a)];
      const auto j = indices[static_cast<std::size_t>(b)];
      if (i >= size() || j >= size())
        throw Error(ErrorKind::InvalidArgument, "subset index out of range");
      sub(a, b) = (*this)(i, j);
    }
  }
  return DistanceMatrix(std::move(sub));
}

DistanceMatrix validate_distance_matrix(const Eigen::MatrixXd& raw,
                                        const Tolerances& tol) {
  return DistanceMatrix::validate(raw, tol);
}

GramMatrix::GramMatrix(const Eigen::MatrixXd& g, const Tolerances& tol) {
  if (g.rows() != g.cols())
    throw Error(ErrorKind::NonSquare, "Gram matrix must be square");
  require_finite(g);
  const double scale = std::max(1.0, g.size() == 0 ? 0.0 : g.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < g.rows(); ++i)
    for (Eigen::Index j = i + 1; j < g.cols(); ++j)
      if (std::abs(g(i, j) - g(j, i)) > tol.dist_tol * scale)
        throw Error(ErrorKind::AsymmetricMatrix,
                    index_message("asymmetric Gram entry", i, j),
                    static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  g_ = 0.5 * (g + g.transpose());
}

Realization::Realization(Eigen::MatrixXd coords) : x_(std::move(coords)) {
  require_finite(x_);
}

GramMatrix double_center(const DistanceMatrix& d) {
  const Eigen::Index n = d.values().rows();
  if (n == 0) return GramMatrix(Eigen::MatrixXd(0, 0));
  const Eigen::MatrixXd sq = d.values().cwiseProduct(d.values());
  const Eigen::VectorXd row_mean = sq.rowwise().mean();
  const double grand_mean = row_mean.mean();
  Eigen::MatrixXd g(n, n);
  // -1/2 (sq_ij - mean_i - mean_j + grand), with column means = row means.
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      g(i, j) = -0.5 * (sq(i, j) - row_mean(i) - row_mean(j) + grand_mean);
  return GramMatrix(g);
}

GramMatrix schoenberg_gram(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  if (n < 2)
    throw Error(ErrorKind::InvalidArgument,
                "anchored Gram matrix needs at least two points");
  const auto m = static_cast<Eigen::Index>(n - 1);
  Eigen::MatrixXd g(m, m);
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 1; j < n; ++j)
      g(static_cast<Eigen::Index>(i - 1), static_cast<Eigen::Index>(j - 1)) =
          0.5 * (d.squared(0, i) + d.squared(0, j) - d.squared(i, j));
  return GramMatrix(g);
}

SpectralDecomposition symmetric_eigendecomposition(const GramMatrix& g,
                                                   const Tolerances& tol) {
  tol.validate();
  const Eigen::Index n = g.values().rows();
  Eigen::MatrixXd a = g.values();
  Eigen::MatrixXd v = Eigen::MatrixXd::Identity(n, n);
  const double norm = a.norm();

  auto off_mass = [&] {
    double s = 0.0;
    for (Eigen::Index p = 0; p < n; ++p)
      for (Eigen::Index q = p + 1; q < n; ++q) s += 2.0 * a(p, q) * a(p, q);
    return std::sqrt(s);
  };

  int sweep = 0;
  while (off_mass() >= tol.eig_tol * norm && norm > 0.0) {
    if (sweep++ == kMaxSweeps)
      throw Error(ErrorKind::NoConvergence,
                  "Jacobi eigensolver did not converge in 100 sweeps");
    for (Eigen::Index p = 0; p < n - 1; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        // Rotation angle from the stable tangent formula.
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (Eigen::Index k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (Eigen::Index k = 0; k < n; ++k) {
          const double vkp = v(k, p);
          const double vkq = v(k, q);
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), Eigen::Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index l, Eigen::Index r) {
    return a(l, l) > a(r, r);
  });

  SpectralDecomposition out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    const Eigen::Index src = order[static_cast<std::size_t>(j)];
    out.eigenvalues(j) = a(src, src);
    out.eigenvectors.col(j) = v.col(src);
  }
  return out;
}

PsdVerdict psd_verdict(const SpectralDecomposition& spectrum,
                       const Tolerances& tol) {
  PsdVerdict verdict;
  const Eigen::VectorXd& ev = spectrum.eigenvalues;
  if (ev.size() == 0) {
    verdict.is_psd = true;
    return verdict;
  }
  verdict.max_eigenvalue = ev.maxCoeff();
  verdict.min_eigenvalue = ev.minCoeff();
  const double threshold = tol.rank_tol * std::max(1.0, verdict.max_eigenvalue);
  verdict.is_psd = verdict.min_eigenvalue >= -threshold;
  verdict.rank = static_cast<std::size_t>((ev.array() > threshold).count());
  return verdict;
}

PsdVerdict psd_verdict(const GramMatrix& g, const Tolerances& tol) {
  return psd_verdict(symmetric_eigendecomposition(g, tol), tol);
}

Realization realization_from_gram(const GramMatrix& g, const Tolerances& tol) {
  const SpectralDecomposition spectrum = symmetric_eigendecomposition(g, tol);
  const PsdVerdict verdict = psd_verdict(spectrum, tol);
  if (!verdict.is_psd) {
    std::ostringstream os;
    os << "Gram matrix is not PSD (lambda_min = " << verdict.min_eigenvalue
       << ")";
    throw Error(ErrorKind::NotPSDInput, os.str());
  }
  const auto n = static_cast<Eigen::Index>(g.size());
  const auto k = static_cast<Eigen::Index>(verdict.rank);
  Eigen::MatrixXd x(n, k);
  for (Eigen::Index j = 0; j < k; ++j)
    x.col(j) = spectrum.eigenvectors.col(j) * std::sqrt(spectrum.eigenvalues(j));
  return Realization(std::move(x));
}

GramMatrix gram_from_realization(const Realization& x) {
  return GramMatrix(x.coords() * x.coords().transpose());
}

DistanceMatrix edm_from_realization(const Realization& x) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      d(i, j) = d(j, i) = (x.coords().row(i) - x.coords().row(j)).norm();
  return DistanceMatrix::validate(d);
}

Realization center_realization(const Realization& x) {
  if (x.size() == 0) return x;
  const Eigen::RowVectorXd mean = x.coords().colwise().mean();
  return Realization(x.coords().rowwise() - mean);
}

double determinant(Eigen::MatrixXd a) {
  const Eigen::Index n = a.rows();
  if (n != a.cols())
    throw Error(ErrorKind::NonSquare, "determinant of a non-square matrix");
  double det = 1.0;
  for (Eigen::Index col = 0; col < n; ++col) {
    Eigen::Index pivot = col;
    for (Eigen::Index r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(pivot, col))) pivot = r;
    if (a(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      a.row(pivot).swap(a.row(col));
      det = -det;
    }
    det *= a(col, col);
    for (Eigen::Index r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      a.row(r).tail(n - col - 1) -= f * a.row(col).tail(n - col - 1);
    }
  }
  return det;
}

}  // namespace distgeom
