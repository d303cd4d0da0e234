// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "bell/angle.hpp"
#include "bell/experiment.hpp"
#include "bell/transform.hpp"

namespace bell {

/// The three angles of a CHSH run plus the source phase. The four relative
/// orientations probed are delta1, delta2, delta1 - delta and delta2 - delta.
struct ChshSettings {
  Angle delta1;
  Angle delta2;
  Angle delta;
  Angle phi = Angle(0.0);
};

/// Parameters of the cyclic sequence of frame transformations.
struct CycleParams {
  Angle d1;
  Angle d2;
  Angle dd;
};

/// A transformation law on the circle, parameterized by the effective
/// relative orientation. frame_transform and linear_transform both qualify.
using CircleLaw = Angle (*)(Angle, Angle);

/// The CHSH combination e1 + e2 + e3 - e4. Inputs must be correlations
/// in [-1, 1]; the sign is kept so callers can inspect which bound binds.
double chsh_statistic(double e1, double e2, double e3, double e4);

/// CHSH combination of the model's exact correlations at the four relative
/// orientations (each shifted by -phi).
double model_chsh(const ChshSettings& settings);

/// Per-configuration CHSH combination for a model that assigns all four
/// outcomes in one frame: sa*(sb + sb2) + sa2*(sb - sb2). Always +-2.
int per_config_classical(Outcome sa, Outcome sa2, Outcome sb, Outcome sb2);

/// Per-configuration CHSH combination of this model, where each run's
/// detector-B coordinate lives in its own frame:
/// s(lambda) * (s(b1) + s(b2) + s(b3) - s(b4)) with b_i the four frame-mapped
/// coordinates. Takes values in {-4, -2, 0, +2, +4}; its density-weighted
/// mean equals model_chsh.
int per_config_model(Angle lambda_a, const ChshSettings& settings);

/// Exact density-weighted mean of per_config_model, by integrating the
/// piecewise-constant combination between its sign-change points.
double per_config_mean(const ChshSettings& settings);

/// Density weights of the five possible per-configuration values
/// {-4, -2, 0, +2, +4}, in that order; sums to 1.
std::array<double, 5> per_config_histogram(const ChshSettings& settings);

/// Applies the four maps lambda -> wrap(-law(lambda, p)) with parameters
/// d1, d1 - dd, d2 - dd, d2 in that order. With the rigid law the cycle is
/// the identity for all parameters; with the model law it is not.
Angle holonomy_cycle(Angle lambda, const CycleParams& params, CircleLaw law = frame_transform);

/// Result of sweeping the cycle defect over a uniform grid of start points.
struct PhaseProfile {
  std::vector<std::pair<double, double>> points;  // (lambda, circle defect)
  double max_defect = 0.0;
};

/// Cycle defect circle_distance(cycle(lambda), lambda) over a grid_n-point
/// uniform grid on [-pi, pi). grid_n must be at least 2.
PhaseProfile geometric_phase_profile(const CycleParams& params, std::uint64_t grid_n,
                                     CircleLaw law = frame_transform);

/// Two successive relative rotations compose additively.
Angle compose_settings(Angle delta_a, Angle delta_b);

}  // namespace bell
