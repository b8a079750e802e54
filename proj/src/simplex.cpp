// SPDX-License-Identifier: Apache-2.0
#include "distgeom/simplex.hpp"

#include <cmath>

namespace distgeom {

TriangleSides::TriangleSides(double a, double b, double c) : a_(a), b_(b), c_(c) {
  for (double v : {a, b, c})
    if (!(std::isfinite(v) && v > 0.0))
      throw Error(ErrorKind::InvalidArgument,
                  "triangle sides must be finite and positive");
}

SimplexSides::SimplexSides(DistanceMatrix d) : d_(std::move(d)) {
  if (d_.size() < 2)
    throw Error(ErrorKind::InvalidArgument, "a simplex needs at least 2 vertices");
}

SimplexSides SimplexSides::triangle(double a, double b, double c) {
  // Vertex order: d01 = a, d02 = b, d12 = c.
  Eigen::Matrix3d m;
  m << 0, a, b, a, 0, c, b, c, 0;
  return SimplexSides(DistanceMatrix::validate(Eigen::MatrixXd(m)));
}

MeasureResult heron_area(const TriangleSides& t) {
  const double s = t.semiperimeter();
  const double radicand = s * (s - t.a()) * (s - t.b()) * (s - t.c());
  if (radicand < 0.0) return Infeasible{radicand};
  return std::sqrt(radicand);
}

MeasureResult inradius(const TriangleSides& t) {
  const double s = t.semiperimeter();
  const double x = s - t.a();
  const double y = s - t.b();
  const double z = s - t.c();
  if (x < 0.0 || y < 0.0 || z < 0.0) return Infeasible{x * y * z};
  // x + y + z = s > 0
  return std::sqrt(x * y * z / (x + y + z));
}

double cayley_menger_determinant(const SimplexSides& s) {
  const auto m = static_cast<Eigen::Index>(s.vertices());
  Eigen::MatrixXd bordered(m + 1, m + 1);
  const Eigen::MatrixXd& d = s.distances().values();
  bordered.topLeftCorner(m, m) = d.cwiseProduct(d);
  bordered.col(m).setOnes();
  bordered.row(m).setOnes();
  bordered(m, m) = 0.0;
  return determinant(std::move(bordered));
}

double scaled_cayley_menger(const SimplexSides& s) {
  const double det = cayley_menger_determinant(s);
  const double max_sq = s.distances().max_entry() * s.distances().max_entry();
  if (max_sq == 0.0) return det;
  return det / std::pow(max_sq, static_cast<double>(s.vertices() - 1));
}

MeasureResult simplex_volume(const SimplexSides& s, const Tolerances& tol) {
  const std::size_t n = s.vertices() - 1;
  const double det = cayley_menger_determinant(s);
  double factorial = 1.0;
  for (std::size_t k = 2; k <= n; ++k) factorial *= static_cast<double>(k);
  const double sign = (n % 2 == 1) ? 1.0 : -1.0;  // (-1)^(n-1)
  const double volume_sq =
      sign * det / (std::ldexp(1.0, static_cast<int>(n)) * factorial * factorial);
  if (volume_sq >= 0.0) return std::sqrt(volume_sq);
  if (sign * scaled_cayley_menger(s) >= -tol.rank_tol) return 0.0;
  return Infeasible{volume_sq};
}

bool is_flat(const SimplexSides& s, const Tolerances& tol) {
  return std::abs(scaled_cayley_menger(s)) <= tol.rank_tol;
}

}  // namespace distgeom
