// SPDX-License-Identifier: Apache-2.0
#include "bell/distribution.hpp"

#include <cmath>
#include <stdexcept>

namespace bell {

double pointer_density(Angle l) { return std::abs(std::sin(l.radians())) / 4.0; }

double pointer_cdf(Angle l) {
  const double x = l.radians();
  if (x < 0.0) {
    return (1.0 + std::cos(x)) / 4.0;
  }
  return 0.5 + (1.0 - std::cos(x)) / 4.0;
}

Angle pointer_quantile(double u) {
  if (!(u >= 0.0 && u < 1.0)) {
    throw std::invalid_argument("pointer_quantile: u must lie in [0, 1)");
  }
  if (u < 0.5) {
    return Angle(-std::acos(4.0 * u - 1.0));
  }
  return Angle(std::acos(3.0 - 4.0 * u));
}

std::vector<HiddenConfig> sample_pointer(RngStream stream, std::uint64_t n) {
  std::vector<HiddenConfig> out;
  out.reserve(n);
  Philox4x32 gen(stream);
  for (std::uint64_t i = 0; i < n; ++i) {
    out.push_back({pointer_quantile(gen.uniform53())});
  }
  return out;
}

}  // namespace bell
