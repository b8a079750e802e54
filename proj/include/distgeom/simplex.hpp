// SPDX-License-Identifier: Apache-2.0
//
// Triangle area from side lengths, the inradius identity, Cayley-Menger
// determinants and simplex volumes from edge lengths.
#pragma once

#include <cstddef>
#include <variant>

#include "distgeom/matrices.hpp"

namespace distgeom {

// Side lengths of a triangle. All three must be finite and > 0.
class TriangleSides {
 public:
  TriangleSides(double a, double b, double c);

  double a() const { return a_; }
  double b() const { return b_; }
  double c() const { return c_; }
  double semiperimeter() const { return 0.5 * (a_ + b_ + c_); }

 private:
  double a_, b_, c_;
};

// Side-length matrix of an (m-1)-simplex on m >= 2 vertices.
class SimplexSides {
 public:
  explicit SimplexSides(DistanceMatrix d);
  static SimplexSides triangle(double a, double b, double c);

  std::size_t vertices() const { return d_.size(); }
  const DistanceMatrix& distances() const { return d_; }

 private:
  DistanceMatrix d_;
};

// The side lengths cannot be realized; value is the negative quantity that
// would have had to be a square (Heron radicand, inradius product, V^2).
struct Infeasible {
  double value;
};

using MeasureResult = std::variant<double, Infeasible>;

// sqrt(s (s-a)(s-b)(s-c)).
MeasureResult heron_area(const TriangleSides& t);

// sqrt(xyz / (x+y+z)) with x = s-a, y = s-b, z = s-c.
MeasureResult inradius(const TriangleSides& t);

// Determinant of the (m+1)x(m+1) matrix of squared distances bordered by a
// row and column of ones with a zero corner.
double cayley_menger_determinant(const SimplexSides& s);

// Cayley-Menger determinant divided by (max d^2)^(m-1); unit-free.
double scaled_cayley_menger(const SimplexSides& s);

// V_n^2 = (-1)^(n-1) / (2^n (n!)^2) * CM with n = m - 1. A slightly
// negative V^2 (scaled CM within rank_tol of zero) is clamped to volume 0.
MeasureResult simplex_volume(const SimplexSides& s, const Tolerances& tol = {});

// |CM| / (max d^2)^(m-1) <= rank_tol.
bool is_flat(const SimplexSides& s, const Tolerances& tol = {});

}  // namespace distgeom
