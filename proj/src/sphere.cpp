// SPDX-License-Identifier: Apache-2.0
#include "distgeom/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "distgeom/embedding.hpp"

namespace distgeom {

namespace {

constexpr int kScanPoints = 64;
constexpr int kMaxBisections = 200;
constexpr double kFixedPointTol = 1e-9;
constexpr double kGeodesicTol = 1e-6;

DistanceMatrix matrix_from_edges(const EdgeLengths& e) {
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(4, 4);
  for (std::size_t k = 0; k < kTetraEdges.size(); ++k) {
    const auto i = static_cast<Eigen::Index>(kTetraEdges[k][0]);
    const auto j = static_cast<Eigen::Index>(kTetraEdges[k][1]);
    d(i, j) = d(j, i) = e[k];
  }
  return DistanceMatrix::validate(d);
}

Eigen::Matrix<double, 4, 3> padded_points(const Realization& t) {
  if (t.size() != 4 || t.dimension() > 3)
    throw Error(ErrorKind::InvalidArgument,
                "expected 4 points in at most 3 dimensions");
  Eigen::Matrix<double, 4, 3> p = Eigen::Matrix<double, 4, 3>::Zero();
  p.leftCols(t.coords().cols()) = t.coords();
  return p;
}

EdgeLengths chords_at(const GeodesicTetrahedron& g, double x) {
  EdgeLengths c{};
  for (std::size_t k = 0; k < c.size(); ++k)
    c[k] = chord_length(g.lengths()[k], x);
  return c;
}

}  // namespace

GeodesicTetrahedron::GeodesicTetrahedron(const EdgeLengths& lengths)
    : a_(lengths), a_max_(*std::max_element(lengths.begin(), lengths.end())) {
  for (double v : a_)
    if (!(std::isfinite(v) && v > 0.0))
      throw Error(ErrorKind::InvalidArgument,
                  "geodesic lengths must be finite and positive");
}

GeodesicTetrahedron GeodesicTetrahedron::from_matrix(const DistanceMatrix& d) {
  if (d.size() != 4)
    throw Error(ErrorKind::SizeMismatch, "a tetrahedron needs a 4x4 matrix");
  EdgeLengths e{};
  for (std::size_t k = 0; k < kTetraEdges.size(); ++k)
    e[k] = d(kTetraEdges[k][0], kTetraEdges[k][1]);
  return GeodesicTetrahedron(e);
}

double chord_length(double alpha, double x) {
  if (!(alpha >= 0.0 && x >= 0.0))
    throw Error(ErrorKind::InvalidArgument,
                "geodesic length and inverse radius must be nonnegative");
  if (x == 0.0) return alpha;
  if (alpha * x > 2.0 * std::numbers::pi)
    throw Error(ErrorKind::GeodesicTooLong,
                "geodesic longer than a great circle");
  return 2.0 / x * std::sin(0.5 * alpha * x);
}

TetrahedronResult tetrahedron_from_chords(const EdgeLengths& chords,
                                          const Tolerances& tol) {
  const DistanceMatrix d = matrix_from_edges(chords);
  const EdmVerdict verdict = classify_edm(d, tol);
  if (!verdict.is_edm) return NotRealizable{verdict.min_eigenvalue};
  const Realization x = realization_from_gram(double_center(d), tol);
  Eigen::MatrixXd p = Eigen::MatrixXd::Zero(4, 3);
  p.leftCols(x.coords().cols()) = x.coords();
  return Realization(std::move(p));
}

CircumradiusResult circumradius(const Realization& t, const Tolerances& tol) {
  const Eigen::Matrix<double, 4, 3> p = padded_points(t);
  Eigen::Matrix3d edges;
  for (int i = 0; i < 3; ++i) edges.row(i) = p.row(i + 1) - p.row(0);

  double max_edge = 0.0;
  for (const auto& [i, j] : kTetraEdges)
    max_edge = std::max(max_edge, (p.row(static_cast<Eigen::Index>(i)) -
                                   p.row(static_cast<Eigen::Index>(j))).norm());
  const double volume = std::abs(edges.determinant()) / 6.0;
  if (max_edge == 0.0 || volume <= tol.rank_tol * std::pow(max_edge, 3))
    return InfiniteRadius{};

  // |c - p_i|^2 = |c - p_0|^2  <=>  2 (p_i - p_0) . (c - p_0) = |p_i - p_0|^2
  const Eigen::Vector3d rhs = edges.rowwise().squaredNorm();
  const Eigen::Vector3d offset = (2.0 * edges).fullPivLu().solve(rhs);
  return Circumsphere{offset.norm(), p.row(0).transpose() + offset};
}

std::optional<double> phi(double x, const GeodesicTetrahedron& g,
                          const Tolerances& tol) {
  if (!(x >= 0.0 && x < std::numbers::pi / g.max_length()))
    throw Error(ErrorKind::InvalidArgument,
                "inverse radius outside [0, pi / max geodesic)");
  const TetrahedronResult tetra = tetrahedron_from_chords(chords_at(g, x), tol);
  const auto* points = std::get_if<Realization>(&tetra);
  if (points == nullptr) return std::nullopt;
  const CircumradiusResult sphere = circumradius(*points, tol);
  if (const auto* s = std::get_if<Circumsphere>(&sphere)) return 1.0 / s->radius;
  return 0.0;
}

SphereResult embed_on_sphere(const GeodesicTetrahedron& g,
                             const Tolerances& tol) {
  {
    const TetrahedronResult flat = tetrahedron_from_chords(g.lengths(), tol);
    const auto* points = std::get_if<Realization>(&flat);
    if (points == nullptr)
      return NotApplicable{"side lengths are not realizable in R^3"};
    if (std::holds_alternative<InfiniteRadius>(circumradius(*points, tol)))
      return NotApplicable{"side lengths form a planar tetrahedron"};
  }

  const double upper = std::numbers::pi / g.max_length();
  const double eps = 1e-9 * upper;
  const double lo_end = eps;
  const double hi_end = upper - eps;

  // psi(x) = phi(x) - x; nullopt where the chord tetrahedron does not exist.
  auto psi = [&](double x) -> std::optional<double> {
    const auto v = phi(x, g, tol);
    if (!v) return std::nullopt;
    return *v - x;
  };
  auto right_side = [](const std::optional<double>& v) { return !v || *v <= 0.0; };

  double lo = lo_end;
  std::optional<double> psi_lo = psi(lo);
  if (right_side(psi_lo))
    throw Error(ErrorKind::NoConvergence,
                "phi(x) - x is not positive near the flat limit");

  double hi = lo;
  bool bracketed = false;
  for (int k = 1; k <= kScanPoints; ++k) {
    const double x = lo_end + (hi_end - lo_end) * k / kScanPoints;
    const auto v = psi(x);
    if (right_side(v)) {
      hi = x;
      bracketed = true;
      break;
    }
    lo = x;
    psi_lo = v;
  }
  if (!bracketed)
    throw Error(ErrorKind::NoConvergence, "no sign change of phi(x) - x found");

  std::optional<double> psi_hi = psi(hi);
  for (int it = 0; it < kMaxBisections; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const auto v = psi(mid);
    if (right_side(v)) {
      hi = mid;
      psi_hi = v;
    } else {
      lo = mid;
      psi_lo = v;
    }
  }

  double y = lo;
  double residual = std::abs(*psi_lo);
  if (psi_hi && std::abs(*psi_hi) < residual) {
    y = hi;
    residual = std::abs(*psi_hi);
  }
  if (residual > kFixedPointTol * std::max(1.0, y)) {
    std::ostringstream os;
    os << "fixed-point residual " << residual << " at x = " << y;
    throw Error(ErrorKind::NoConvergence, os.str());
  }

  const TetrahedronResult tetra = tetrahedron_from_chords(chords_at(g, y), tol);
  const Realization& chord_points = std::get<Realization>(tetra);
  const auto sphere = std::get<Circumsphere>(circumradius(chord_points, tol));

  SphericalEmbedding out;
  out.radius = 1.0 / y;
  const Eigen::Matrix<double, 4, 3> p = padded_points(chord_points);
  for (Eigen::Index i = 0; i < 4; ++i) {
    const Eigen::RowVector3d dir = p.row(i) - sphere.center.transpose();
    out.points.row(i) = out.radius * dir.normalized();
  }
  for (std::size_t k = 0; k < kTetraEdges.size(); ++k) {
    const Eigen::Vector3d u = out.points.row(static_cast<Eigen::Index>(kTetraEdges[k][0]));
    const Eigen::Vector3d v = out.points.row(static_cast<Eigen::Index>(kTetraEdges[k][1]));
    const double angle = std::atan2(u.cross(v).norm(), u.dot(v));
    out.geodesics[k] = out.radius * angle;
    if (std::abs(out.geodesics[k] - g.lengths()[k]) >
        kGeodesicTol * g.lengths()[k]) {
      std::ostringstream os;
      os << "realized geodesic " << out.geodesics[k] << " misses target "
         << g.lengths()[k];
      throw Error(ErrorKind::NoConvergence, os.str());
    }
  }
  return out;
}

}  // namespace distgeom
