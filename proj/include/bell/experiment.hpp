// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <utility>

#include "bell/angle.hpp"
#include "bell/mc.hpp"
#include "bell/rng.hpp"
#include "bell/transform.hpp"

namespace bell {

/// Binary detector result, +1 or -1.
using Outcome = int;

/// Joint outcome probabilities for one setting; entries sum to 1.
struct JointDistribution {
  double pp;  // (+1, +1)
  double pm;  // (+1, -1)
  double mp;  // (-1, +1)
  double mm;  // (-1, -1)
};

/// Detector response to a pointer coordinate in its own frame:
/// +1 on [0, pi), -1 on [-pi, 0).
inline Outcome response(Angle l) { return l.radians() >= 0.0 ? +1 : -1; }

/// One realization: each detector responds to the pointer coordinate
/// expressed in its own frame. Evaluation is purely local.
std::pair<Outcome, Outcome> simulate_pair(Angle lambda_a, const ExperimentSetting& setting);

/// Closed-form joint probabilities,
/// p(+1,+1) = p(-1,-1) = (1 - cos(delta - phi)) / 4 and
/// p(+1,-1) = p(-1,+1) = (1 + cos(delta - phi)) / 4.
JointDistribution joint_probabilities(const ExperimentSetting& setting);

/// Exact outcome correlation, -cos(delta - phi).
double exact_correlation(const ExperimentSetting& setting);

/// Monte Carlo estimate of the correlation over n sampled pointers.
/// Deterministic given the stream; see kMcChunkDraws for the stream layout.
CorrelationEstimate mc_correlation(const ExperimentSetting& setting, std::uint64_t n,
                                   RngStream stream, unsigned threads = 1);

/// Rigid-rotation baseline: uniform pointer density and the linear
/// anticorrelating coordinate map lambda_b = wrap(-(lambda - deltabar)).
std::pair<Outcome, Outcome> classical_simulate_pair(Angle lambda, Angle deltabar);

/// Closed-form correlation of the baseline, 2|deltabar|/pi - 1.
double classical_correlation(Angle deltabar);

/// Monte Carlo correlation of the baseline (uniform pointer draws).
CorrelationEstimate classical_mc_correlation(Angle deltabar, std::uint64_t n, RngStream stream,
                                             unsigned threads = 1);

/// Correlation when the source phase is scrambled uniformly per realization;
/// the outcomes decorrelate for every delta. Consumes two uniforms per draw
/// (phase first, then pointer).
CorrelationEstimate incoherent_correlation(Angle delta, std::uint64_t n, RngStream stream,
                                           unsigned threads = 1);

}  // namespace bell
