// SPDX-License-Identifier: Apache-2.0
//
// Embedding a four-point metric on the surface of a sphere so that the
// given lengths become great-circle (geodesic) distances.
//
// For an inverse radius x, every geodesic length a is replaced by the chord
// it subtends on the sphere of radius 1/x. phi(x) is the inverse
// circumradius of the tetrahedron built from those chords. A fixed point
// phi(y) = y means the chord tetrahedron sits on the sphere of radius 1/y,
// where its chords subtend exactly the requested geodesics.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "distgeom/matrices.hpp"

namespace distgeom {

// Vertex pairs in storage order: (0,1) (0,2) (0,3) (1,2) (1,3) (2,3).
inline constexpr std::array<std::array<std::size_t, 2>, 6> kTetraEdges{{
    {0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};

using EdgeLengths = std::array<double, 6>;

class GeodesicTetrahedron {
 public:
  // Throws InvalidArgument unless every length is finite and > 0.
  explicit GeodesicTetrahedron(const EdgeLengths& lengths);
  // Reads the six upper-triangle entries of a 4x4 distance matrix.
  static GeodesicTetrahedron from_matrix(const DistanceMatrix& d);

  const EdgeLengths& lengths() const { return a_; }
  double max_length() const { return a_max_; }

 private:
  EdgeLengths a_;
  double a_max_;
};

struct SphericalEmbedding {
  double radius = 0.0;
  Eigen::Matrix<double, 4, 3> points;  // each at distance radius from 0
  EdgeLengths geodesics{};             // radius * central angle
};

// (2/x) sin(alpha x / 2), and alpha at x = 0. Throws GeodesicTooLong when
// alpha * x > 2 pi, InvalidArgument on negative input.
double chord_length(double alpha, double x);

struct NotRealizable {
  double min_eigenvalue;
};

using TetrahedronResult = std::variant<Realization, NotRealizable>;

// Four points in R^3 with the given edge lengths, when they exist.
TetrahedronResult tetrahedron_from_chords(const EdgeLengths& chords,
                                          const Tolerances& tol = {});

struct Circumsphere {
  double radius;
  Eigen::Vector3d center;
};

struct InfiniteRadius {};

using CircumradiusResult = std::variant<Circumsphere, InfiniteRadius>;

// Coplanar (volume below rank_tol * (max edge)^3) gives InfiniteRadius.
// Accepts 4 points in R^k for k <= 3; missing coordinates are zero.
CircumradiusResult circumradius(const Realization& t, const Tolerances& tol = {});

// Inverse circumradius of the chord tetrahedron at inverse radius x:
// 0 when it is planar, nullopt when it does not exist. Requires
// 0 <= x < pi / max_length.
std::optional<double> phi(double x, const GeodesicTetrahedron& g,
                          const Tolerances& tol = {});

struct NotApplicable {
  std::string reason;
};

using SphereResult = std::variant<SphericalEmbedding, NotApplicable>;

// Smallest fixed point of phi on (eps, pi/a_max - eps) by a coarse scan for
// the first sign change of phi(x) - x followed by bisection; an undefined
// phi counts as the right side of the bracket. Throws NoConvergence when the
// fixed point or the realized geodesics miss their tolerances.
SphereResult embed_on_sphere(const GeodesicTetrahedron& g,
                             const Tolerances& tol = {});

}  // namespace distgeom
