// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <array>
#include <cstdint>

#include "bell/angle.hpp"
#include "bell/mc.hpp"
#include "bell/rng.hpp"

namespace bell {

/// A unit direction attached to a point of the unit sphere, orthogonal to it.
struct TangentVector {
  Eigen::Vector3d base;
  Eigen::Vector3d dir;
};

/// Three unit vertices, pairwise non-collinear and non-antipodal
/// (|dot| < 1 - 1e-9). The loop orientation is A -> B -> C -> A.
class SphericalTriangle {
 public:
  SphericalTriangle(const Eigen::Vector3d& a, const Eigen::Vector3d& b, const Eigen::Vector3d& c);

  const Eigen::Vector3d& va() const { return a_; }
  const Eigen::Vector3d& vb() const { return b_; }
  const Eigen::Vector3d& vc() const { return c_; }

 private:
  Eigen::Vector3d a_, b_, c_;
};

/// Parallel transport along the geodesic from v.base to `to`: the tangent
/// direction rotates about base x to by the arc angle. Norm and tangency are
/// preserved. Antipodal endpoints are rejected (no unique geodesic).
TangentVector transport(const TangentVector& v, const Eigen::Vector3d& to);

/// Net rotation of a tangent frame transported around A -> B -> C -> A,
/// unwrapped using the loop orientation: positive (in [0, 2pi)) for a
/// positively oriented triangle, negative otherwise. Equals the oriented
/// spherical excess. Triangles on a single great circle are rejected.
double loop_holonomy(const SphericalTriangle& tri);

/// Interior-angle sum minus pi, from the dihedral angles at the vertices.
/// Always positive for a non-degenerate triangle.
double spherical_excess(const SphericalTriangle& tri);

struct FlatGameResult {
  CorrelationEstimate e_ab, e_ac, e_bc;
  double slack = 0.0;  // 1 + E_BC - |E_AB + E_AC|
};

/// Planar random game: three unit reference directions at angles
/// (0, angle_ab, angle_ac), a uniform random unit vector per draw, responses
/// sign(ref . lambda). The per-draw identity |A*B + A*C| = 1 + B*C makes the
/// estimated slack nonnegative for every sample.
FlatGameResult flat_game(Angle angle_ab, Angle angle_ac, std::uint64_t n, RngStream stream,
                         unsigned threads = 1);

struct SphericalGameResult {
  CorrelationEstimate e_ab, e_ac, e_bc;
  double slack = 0.0;
  double holonomy = 0.0;
};

/// Spherical random game: per draw, a point x uniform by arc length on the
/// triangle perimeter and a uniform tangent direction at x. The direction is
/// parallel-transported forward along the perimeter (loop orientation) and
/// compared at each vertex against that vertex's reference direction.
/// References are given by an angle in the vertex tangent plane measured
/// from the incoming perimeter direction.
SphericalGameResult spherical_game(const SphericalTriangle& tri,
                                   const std::array<Angle, 3>& ref_angles, std::uint64_t n,
                                   RngStream stream, unsigned threads = 1);

/// Same game with explicit reference directions (projected into the vertex
/// tangent planes and normalized).
SphericalGameResult spherical_game_with_refs(const SphericalTriangle& tri,
                                             const std::array<Eigen::Vector3d, 3>& refs,
                                             std::uint64_t n, RngStream stream,
                                             unsigned threads = 1);

/// Reference directions induced by ref_angles: the incoming perimeter
/// direction at each vertex, rotated by the angle in the tangent plane.
std::array<Eigen::Vector3d, 3> reference_directions(const SphericalTriangle& tri,
                                                    const std::array<Angle, 3>& ref_angles);

}  // namespace bell
