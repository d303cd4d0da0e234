// SPDX-License-Identifier: Apache-2.0
#include "bell/chsh.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "bell/distribution.hpp"

namespace bell {

namespace {

std::array<Angle, 4> relative_parameters(const ChshSettings& s) {
  const double phi = s.phi.radians();
  return {Angle(s.delta1.radians() - phi), Angle(s.delta2.radians() - phi),
          Angle(s.delta1.radians() - s.delta.radians() - phi),
          Angle(s.delta2.radians() - s.delta.radians() - phi)};
}

// Integration cells on which per_config_model is constant: the combination
// only changes sign where some detector response flips, i.e. at 0, -pi and
// at p, wrap(p - pi) for each of the four parameters.
std::vector<double> sign_change_points(const std::array<Angle, 4>& params) {
  std::vector<double> pts = {-kPi, 0.0};
  for (const Angle& p : params) {
    pts.push_back(p.radians());
    pts.push_back(wrap_radians(p.radians() - kPi));
  }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pts.push_back(kPi);
  return pts;
}

double cdf_at(double x) { return x >= kPi ? 1.0 : pointer_cdf(Angle(x)); }

}  // namespace

double chsh_statistic(double e1, double e2, double e3, double e4) {
  for (double e : {e1, e2, e3, e4}) {
    if (!(e >= -1.0 && e <= 1.0)) {
      throw std::invalid_argument("chsh_statistic: correlations must lie in [-1, 1]");
    }
  }
  return e1 + e2 + e3 - e4;
}

double model_chsh(const ChshSettings& settings) {
  const auto params = relative_parameters(settings);
  const Angle zero(0.0);
  return chsh_statistic(exact_correlation({params[0], zero}), exact_correlation({params[1], zero}),
                        exact_correlation({params[2], zero}),
                        exact_correlation({params[3], zero}));
}

int per_config_classical(Outcome sa, Outcome sa2, Outcome sb, Outcome sb2) {
  for (Outcome s : {sa, sa2, sb, sb2}) {
    if (s != 1 && s != -1) {
      throw std::invalid_argument("per_config_classical: outcomes must be +-1");
    }
  }
  return sa * (sb + sb2) + sa2 * (sb - sb2);
}

int per_config_model(Angle lambda_a, const ChshSettings& settings) {
  const auto params = relative_parameters(settings);
  const int sa = response(lambda_a);
  const auto sb = [&](int i) {
    return response(Angle(-frame_transform(lambda_a, params[i]).radians()));
  };
  return sa * (sb(0) + sb(1) + sb(2) - sb(3));
}

double per_config_mean(const ChshSettings& settings) {
  const auto pts = sign_change_points(relative_parameters(settings));
  double mean = 0.0;
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i], b = pts[i + 1];
    if (b - a <= 0.0) continue;
    mean += per_config_model(Angle(0.5 * (a + b)), settings) * (cdf_at(b) - cdf_at(a));
  }
  return mean;
}

std::array<double, 5> per_config_histogram(const ChshSettings& settings) {
  const auto pts = sign_change_points(relative_parameters(settings));
  std::array<double, 5> weights{};
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double a = pts[i], b = pts[i + 1];
    if (b - a <= 0.0) continue;
    const int value = per_config_model(Angle(0.5 * (a + b)), settings);
    weights[static_cast<std::size_t>((value + 4) / 2)] += cdf_at(b) - cdf_at(a);
  }
  return weights;
}

Angle holonomy_cycle(Angle lambda, const CycleParams& params, CircleLaw law) {
  const std::array<Angle, 4> sequence = {
      params.d1, Angle(params.d1.radians() - params.dd.radians()),
      Angle(params.d2.radians() - params.dd.radians()), params.d2};
  Angle current = lambda;
  for (const Angle& p : sequence) {
    current = Angle(-law(current, p).radians());
  }
  return current;
}

PhaseProfile geometric_phase_profile(const CycleParams& params, std::uint64_t grid_n,
                                     CircleLaw law) {
  if (grid_n < 2) {
    throw std::invalid_argument("geometric_phase_profile: grid_n must be >= 2");
  }
  PhaseProfile profile;
  profile.points.reserve(grid_n);
  for (std::uint64_t i = 0; i < grid_n; ++i) {
    const Angle lambda(-kPi + kTwoPi * static_cast<double>(i) / static_cast<double>(grid_n));
    const double defect = circle_distance(holonomy_cycle(lambda, params, law), lambda);
    profile.points.emplace_back(lambda.radians(), defect);
    profile.max_defect = std::max(profile.max_defect, defect);
  }
  return profile;
}

Angle compose_settings(Angle delta_a, Angle delta_b) {
  return Angle(delta_a.radians() + delta_b.radians());
}

}  // namespace bell
