// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "bell/angle.hpp"
#include "bell/rng.hpp"

namespace bell {

/// Coordinate of the hidden pointer in a stated detector frame.
struct HiddenConfig {
  Angle lambda;
};

/// Probability density of the hidden pointer, |sin(l)| / 4 on [-pi, pi).
/// This is the unique density whose measure is invariant under the frame
/// transformation, so the same functional form describes both detectors.
double pointer_density(Angle l);

/// Cumulative distribution of pointer_density from -pi.
double pointer_cdf(Angle l);

/// Exact inverse of pointer_cdf for u in [0, 1).
Angle pointer_quantile(double u);

/// n independent draws from pointer_density, consumed sequentially from the
/// given stream by inverse transform (one uniform per draw).
std::vector<HiddenConfig> sample_pointer(RngStream stream, std::uint64_t n);

}  // namespace bell
