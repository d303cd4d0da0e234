// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "bell/angle.hpp"

namespace bell {

/// Relative detector orientation plus the source phase. Only the effective
/// difference enters the physics; the absolute orientations are gauge.
struct ExperimentSetting {
  Angle delta;  // relative orientation of detector B w.r.t. detector A
  Angle phi;    // phase of the source

  Angle deltabar() const { return Angle(delta.radians() - phi.radians()); }
};

/// One of the four half-open sub-intervals on which the frame transformation
/// is a single arccos expression. The tiling depends on the sign of the
/// effective parameter.
struct BranchId {
  int index;  // 1..4
};

/// Branch containing `lambda` for the given effective parameter.
BranchId branch_of(Angle lambda, Angle deltabar);

/// The nonlinear coordinate transformation between the two detectors' frames
/// on the unit circle. It is a continuous, strictly increasing, degree-one
/// circle map with frame_transform(deltabar; deltabar) = 0 and
/// frame_transform(0; deltabar) = -deltabar, and it transports the pointer
/// density exactly: |d cos(out)| = |d cos(in)| within each branch.
Angle frame_transform(Angle lambda, Angle deltabar);

/// Analytic inverse of frame_transform in its second-argument family.
/// Round trips hold to 1e-9 absolute angular error.
Angle frame_transform_inverse(Angle mu, Angle deltabar);

/// The rigid (Euclidean) transformation law used as a comparison baseline:
/// a pointer at angle lambda w.r.t. one frame sits at lambda - deltabar
/// w.r.t. the other.
Angle linear_transform(Angle lambda, Angle deltabar);

/// Coordinate of the hidden pointer in detector B's frame given its
/// coordinate in detector A's frame: wrap(-frame_transform(lambda_a, delta - phi)).
Angle frame_map(Angle lambda_a, const ExperimentSetting& setting);

}  // namespace bell
