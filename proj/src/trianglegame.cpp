// SPDX-License-Identifier: Apache-2.0
#include "bell/trianglegame.hpp"

#include <cmath>
#include <stdexcept>

namespace bell {

namespace {

constexpr double kCollinearTol = 1e-9;
constexpr double kDegenerateDet = 1e-12;

Eigen::Vector3d normalized_or_throw(const Eigen::Vector3d& v, const char* what) {
  const double norm = v.norm();
  if (!(norm > 1e-12) || !v.allFinite()) {
    throw std::invalid_argument(std::string(what) + ": zero or non-finite vector");
  }
  return v / norm;
}

double arc_length(const Eigen::Vector3d& p, const Eigen::Vector3d& q) {
  return std::atan2(p.cross(q).norm(), p.dot(q));
}

// Point at arc distance t from p along the geodesic towards q.
Eigen::Vector3d geodesic_point(const Eigen::Vector3d& p, const Eigen::Vector3d& q, double t) {
  const Eigen::Vector3d u = (q - p.dot(q) * p).normalized();
  return std::cos(t) * p + std::sin(t) * u;
}

// Unit travel direction at arc distance t from p along the geodesic to q.
Eigen::Vector3d travel_direction(const Eigen::Vector3d& p, const Eigen::Vector3d& q, double t) {
  const Eigen::Vector3d u = (q - p.dot(q) * p).normalized();
  return -std::sin(t) * p + std::cos(t) * u;
}

// Unit tangent at `vertex` orthogonal to it, in the plane spanned with `other`.
Eigen::Vector3d tangent_towards(const Eigen::Vector3d& vertex, const Eigen::Vector3d& other) {
  return (other - vertex.dot(other) * vertex).normalized();
}

double orientation(const SphericalTriangle& t) {
  return t.va().dot(t.vb().cross(t.vc()));
}

int sign_response(const Eigen::Vector3d& ref, const Eigen::Vector3d& lambda) {
  return ref.dot(lambda) >= 0.0 ? +1 : -1;
}

struct TripleSums {
  std::int64_t ab = 0, ac = 0, bc = 0;

  TripleSums& operator+=(const TripleSums& o) {
    ab += o.ab;
    ac += o.ac;
    bc += o.bc;
    return *this;
  }
};

// Shared reduction for both games: per draw the three responses are produced
// jointly, so E_AB + E_AC aggregates exactly and the identity
// |ab + ac| = 1 + bc holds sample by sample.
template <class PerDraw>
TripleSums chunked_triple(RngStream base, std::uint64_t n, unsigned threads, PerDraw&& per_draw) {
  return detail::chunked_reduce<TripleSums>(base, n, threads, [&](Philox4x32& gen) {
    const auto [a, b, c] = per_draw(gen);
    return TripleSums{a * b, a * c, b * c};
  });
}

}  // namespace

SphericalTriangle::SphericalTriangle(const Eigen::Vector3d& a, const Eigen::Vector3d& b,
                                     const Eigen::Vector3d& c)
    : a_(normalized_or_throw(a, "SphericalTriangle")),
      b_(normalized_or_throw(b, "SphericalTriangle")),
      c_(normalized_or_throw(c, "SphericalTriangle")) {
  const double dots[3] = {a_.dot(b_), b_.dot(c_), c_.dot(a_)};
  for (double d : dots) {
    if (std::abs(d) >= 1.0 - kCollinearTol) {
      throw std::invalid_argument("SphericalTriangle: vertices coincide or are antipodal");
    }
  }
}

TangentVector transport(const TangentVector& v, const Eigen::Vector3d& to) {
  const Eigen::Vector3d target = normalized_or_throw(to, "transport");
  const double c = v.base.dot(target);
  if (c <= -1.0 + kCollinearTol) {
    throw std::invalid_argument("transport: endpoints are antipodal");
  }
  const Eigen::Vector3d axis = v.base.cross(target);
  const double s = axis.norm();
  if (s < 1e-15) {
    return {target, v.dir};
  }
  const Eigen::AngleAxisd rotation(std::atan2(s, c), axis / s);
  return {target, rotation * v.dir};
}

double loop_holonomy(const SphericalTriangle& tri) {
  const double orient = orientation(tri);
  if (std::abs(orient) < kDegenerateDet) {
    throw std::invalid_argument("loop_holonomy: vertices lie on a single great circle");
  }
  const Eigen::Vector3d e1 = tangent_towards(tri.va(), tri.vb());
  const Eigen::Vector3d e2 = tri.va().cross(e1);

  TangentVector frame{tri.va(), e1};
  frame = transport(frame, tri.vb());
  frame = transport(frame, tri.vc());
  frame = transport(frame, tri.va());

  double theta = std::atan2(frame.dir.dot(e2), frame.dir.dot(e1));
  // The rotation is only measured modulo 2pi; the loop orientation fixes the
  // representative (oriented excess lies in (0, 2pi) resp. (-2pi, 0)).
  if (orient > 0.0 && theta < 0.0) theta += kTwoPi;
  if (orient < 0.0 && theta > 0.0) theta -= kTwoPi;
  return theta;
}

double spherical_excess(const SphericalTriangle& tri) {
  if (std::abs(orientation(tri)) < kDegenerateDet) {
    throw std::invalid_argument("spherical_excess: vertices lie on a single great circle");
  }
  const auto interior = [](const Eigen::Vector3d& at, const Eigen::Vector3d& p,
                           const Eigen::Vector3d& q) {
    const Eigen::Vector3d u = tangent_towards(at, p);
    const Eigen::Vector3d v = tangent_towards(at, q);
    return std::atan2(u.cross(v).norm(), u.dot(v));
  };
  return interior(tri.va(), tri.vb(), tri.vc()) + interior(tri.vb(), tri.vc(), tri.va()) +
         interior(tri.vc(), tri.va(), tri.vb()) - kPi;
}

FlatGameResult flat_game(Angle angle_ab, Angle angle_ac, std::uint64_t n, RngStream stream,
                         unsigned threads) {
  const double ta = 0.0, tb = angle_ab.radians(), tc = angle_ac.radians();
  const TripleSums sums = chunked_triple(stream, n, threads, [&](Philox4x32& gen) {
    const double lambda = gen.uniform_angle().radians();
    const auto resp = [&](double ref) { return std::cos(lambda - ref) >= 0.0 ? +1 : -1; };
    return std::array<int, 3>{resp(ta), resp(tb), resp(tc)};
  });
  FlatGameResult result;
  result.e_ab = detail::estimate_from_sum(sums.ab, n);
  result.e_ac = detail::estimate_from_sum(sums.ac, n);
  result.e_bc = detail::estimate_from_sum(sums.bc, n);
  result.slack = 1.0 + result.e_bc.mean - std::abs(result.e_ab.mean + result.e_ac.mean);
  return result;
}

std::array<Eigen::Vector3d, 3> reference_directions(const SphericalTriangle& tri,
                                                    const std::array<Angle, 3>& ref_angles) {
  const std::array<Eigen::Vector3d, 3> v = {tri.va(), tri.vb(), tri.vc()};
  std::array<Eigen::Vector3d, 3> refs;
  for (int i = 0; i < 3; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    const Eigen::Vector3d& from = v[static_cast<std::size_t>((i + 2) % 3)];  // incoming leg
    const Eigen::Vector3d& at = v[iu];
    const Eigen::Vector3d incoming = travel_direction(from, at, arc_length(from, at));
    const double angle = ref_angles[iu].radians();
    refs[iu] = std::cos(angle) * incoming + std::sin(angle) * at.cross(incoming);
  }
  return refs;
}

SphericalGameResult spherical_game(const SphericalTriangle& tri,
                                   const std::array<Angle, 3>& ref_angles, std::uint64_t n,
                                   RngStream stream, unsigned threads) {
  return spherical_game_with_refs(tri, reference_directions(tri, ref_angles), n, stream, threads);
}

SphericalGameResult spherical_game_with_refs(const SphericalTriangle& tri,
                                             const std::array<Eigen::Vector3d, 3>& refs,
                                             std::uint64_t n, RngStream stream, unsigned threads) {
  const std::array<Eigen::Vector3d, 3> v = {tri.va(), tri.vb(), tri.vc()};
  std::array<Eigen::Vector3d, 3> tangent_refs;
  for (int i = 0; i < 3; ++i) {
    const auto iu = static_cast<std::size_t>(i);
    const Eigen::Vector3d projected = refs[iu] - v[iu].dot(refs[iu]) * v[iu];
    tangent_refs[iu] = normalized_or_throw(projected, "spherical_game reference");
  }

  const std::array<double, 3> arcs = {arc_length(v[0], v[1]), arc_length(v[1], v[2]),
                                      arc_length(v[2], v[0])};
  const double perimeter = arcs[0] + arcs[1] + arcs[2];

  const TripleSums sums = chunked_triple(stream, n, threads, [&](Philox4x32& gen) {
    double s = perimeter * gen.uniform53();
    int leg = 0;
    while (leg < 2 && s >= arcs[static_cast<std::size_t>(leg)]) {
      s -= arcs[static_cast<std::size_t>(leg)];
      ++leg;
    }
    const auto legu = static_cast<std::size_t>(leg);
    const Eigen::Vector3d& from = v[legu];
    const Eigen::Vector3d& to = v[(legu + 1) % 3];

    const Eigen::Vector3d x = geodesic_point(from, to, s);
    const Eigen::Vector3d forward = travel_direction(from, to, s);
    const double theta = gen.uniform_angle().radians();
    TangentVector lambda{x, std::cos(theta) * forward + std::sin(theta) * x.cross(forward)};

    // Walk forward around the loop; each vertex responds on first arrival.
    std::array<int, 3> response{};
    for (int step = 1; step <= 3; ++step) {
      const auto vertex = static_cast<std::size_t>((leg + step) % 3);
      lambda = transport(lambda, v[vertex]);
      response[vertex] = sign_response(tangent_refs[vertex], lambda.dir);
    }
    return response;
  });

  SphericalGameResult result;
  result.e_ab = detail::estimate_from_sum(sums.ab, n);
  result.e_ac = detail::estimate_from_sum(sums.ac, n);
  result.e_bc = detail::estimate_from_sum(sums.bc, n);
  result.slack = 1.0 + result.e_bc.mean - std::abs(result.e_ab.mean + result.e_ac.mean);
  result.holonomy = loop_holonomy(tri);
  return result;
}

}  // namespace bell
