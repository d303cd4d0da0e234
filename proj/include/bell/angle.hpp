// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace bell {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Reduce an angle to the canonical half-open interval [-pi, pi).
/// The left endpoint is included, so wrap_radians(-pi) == -pi and
/// wrap_radians(pi) == -pi. Idempotent.
inline double wrap_radians(double x) {
  const double r = std::remainder(x, kTwoPi);
  return r == kPi ? -kPi : r;
}

/// An angle in radians, kept wrapped to [-pi, pi) by construction.
class Angle {
 public:
  constexpr Angle() = default;
  explicit Angle(double radians) : rad_(wrap_radians(radians)) {}

  double radians() const { return rad_; }

  friend bool operator==(Angle a, Angle b) { return a.rad_ == b.rad_; }

 private:
  double rad_ = 0.0;
};

/// Wrap a finite angle; rejects NaN and infinities.
inline Angle wrap_angle(double radians) {
  if (!std::isfinite(radians)) {
    throw std::invalid_argument("wrap_angle: non-finite input");
  }
  return Angle(radians);
}

/// Sign of the wrapped representative of x: +1 on [0, pi), -1 on [-pi, 0).
/// The zero case resolves to +1 so the result is always a definite sign.
inline int circle_sign(double x) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("circle_sign: non-finite input");
  }
  return wrap_radians(x) >= 0.0 ? +1 : -1;
}

/// Geodesic distance between two angles on the circle, in [0, pi].
inline double circle_distance(Angle a, Angle b) {
  return std::abs(wrap_radians(a.radians() - b.radians()));
}

}  // namespace bell
