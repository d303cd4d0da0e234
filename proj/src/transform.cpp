// SPDX-License-Identifier: Apache-2.0
#include "bell/transform.hpp"

#include <cmath>
#include <stdexcept>

namespace bell {

namespace {

constexpr double kClampBand = 1e-12;

// arccos arguments sit in [-1, 1] exactly in exact arithmetic; floating-point
// noise at the branch anchors may push them out by a few ulp. Arguments beyond
// the guard band indicate a branch-selection bug, not roundoff.
double clamp_unit(double arg) {
  if (arg > 1.0 + kClampBand || arg < -1.0 - kClampBand) {
    throw std::logic_error("frame_transform: arccos argument outside guard band");
  }
  if (arg > 1.0) return 1.0;
  if (arg < -1.0) return -1.0;
  return arg;
}

}  // namespace

BranchId branch_of(Angle lambda, Angle deltabar) {
  const double l = lambda.radians();
  const double d = deltabar.radians();
  if (d >= 0.0) {
    if (l < d - kPi) return {1};
    if (l < 0.0) return {2};
    if (l < d) return {3};
    return {4};
  }
  if (l < d) return {1};
  if (l < 0.0) return {2};
  if (l < d + kPi) return {3};
  return {4};
}

Angle frame_transform(Angle lambda, Angle deltabar) {
  const double l = lambda.radians();
  const double d = deltabar.radians();
  const double cd = std::cos(d);
  const double cl = std::cos(l);
  const int q = circle_sign(l - d);

  // Per-branch arccos argument, c1*cos(deltabar) + c2*cos(lambda) + c3. The
  // two parameter half-ranges use mirrored coefficient tables.
  double arg;
  switch (branch_of(lambda, deltabar).index) {
    case 1: arg = d >= 0.0 ? -cd - cl - 1.0 : -cd + cl + 1.0; break;
    case 2: arg = d >= 0.0 ? +cd + cl - 1.0 : +cd - cl + 1.0; break;
    case 3: arg = d >= 0.0 ? +cd - cl + 1.0 : +cd + cl - 1.0; break;
    default: arg = d >= 0.0 ? -cd + cl + 1.0 : -cd - cl - 1.0; break;
  }
  return Angle(q * std::acos(clamp_unit(arg)));
}

Angle frame_transform_inverse(Angle mu, Angle deltabar) {
  const double m = mu.radians();
  const double d = deltabar.radians();
  const double cd = std::cos(d);
  const double cm = std::cos(m);

  // Solve the branch expression for cos(lambda) on the image interval that
  // contains mu, then pick the representative inside the branch's domain.
  double cl;
  bool negate;
  if (d >= 0.0) {
    if (m < -d) {
      cl = cm - cd + 1.0;  // branch 2, lambda in [d - pi, 0)
      negate = true;
    } else if (m < 0.0) {
      cl = cd - cm + 1.0;  // branch 3, lambda in [0, d)
      negate = false;
    } else if (m < kPi - d) {
      cl = cm + cd - 1.0;  // branch 4, lambda in [d, pi)
      negate = false;
    } else {
      cl = -cm - cd - 1.0;  // branch 1, lambda in [-pi, d - pi)
      negate = true;
    }
  } else {
    if (m < -kPi - d) {
      cl = -cm - cd - 1.0;  // branch 4, lambda in [d + pi, pi)
      negate = false;
    } else if (m < 0.0) {
      cl = cm + cd - 1.0;  // branch 1, lambda in [-pi, d)
      negate = true;
    } else if (m < -d) {
      cl = cd - cm + 1.0;  // branch 2, lambda in [d, 0)
      negate = true;
    } else {
      cl = cm - cd + 1.0;  // branch 3, lambda in [0, d + pi)
      negate = false;
    }
  }
  const double lambda = std::acos(clamp_unit(cl));
  return Angle(negate ? -lambda : lambda);
}

Angle linear_transform(Angle lambda, Angle deltabar) {
  return Angle(lambda.radians() - deltabar.radians());
}

Angle frame_map(Angle lambda_a, const ExperimentSetting& setting) {
  return Angle(-frame_transform(lambda_a, setting.deltabar()).radians());
}

}  // namespace bell
