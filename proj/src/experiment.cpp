// SPDX-License-Identifier: Apache-2.0
#include "bell/experiment.hpp"

#include <cmath>

#include "bell/distribution.hpp"

namespace bell {

std::pair<Outcome, Outcome> simulate_pair(Angle lambda_a, const ExperimentSetting& setting) {
  return {response(lambda_a), response(frame_map(lambda_a, setting))};
}

JointDistribution joint_probabilities(const ExperimentSetting& setting) {
  const double c = std::cos(setting.deltabar().radians());
  const double same = (1.0 - c) / 4.0;
  const double diff = (1.0 + c) / 4.0;
  return {same, diff, diff, same};
}

double exact_correlation(const ExperimentSetting& setting) {
  return -std::cos(setting.deltabar().radians());
}

CorrelationEstimate mc_correlation(const ExperimentSetting& setting, std::uint64_t n,
                                   RngStream stream, unsigned threads) {
  const std::int64_t sum = detail::chunked_sum(stream, n, threads, [&](Philox4x32& gen) {
    const Angle lambda = pointer_quantile(gen.uniform53());
    const auto [sa, sb] = simulate_pair(lambda, setting);
    return sa * sb;
  });
  return detail::estimate_from_sum(sum, n);
}

std::pair<Outcome, Outcome> classical_simulate_pair(Angle lambda, Angle deltabar) {
  const Angle lambda_b = Angle(-(lambda.radians() - deltabar.radians()));
  return {response(lambda), response(lambda_b)};
}

double classical_correlation(Angle deltabar) {
  return 2.0 * std::abs(deltabar.radians()) / kPi - 1.0;
}

CorrelationEstimate classical_mc_correlation(Angle deltabar, std::uint64_t n, RngStream stream,
                                             unsigned threads) {
  const std::int64_t sum = detail::chunked_sum(stream, n, threads, [&](Philox4x32& gen) {
    const auto [sa, sb] = classical_simulate_pair(gen.uniform_angle(), deltabar);
    return sa * sb;
  });
  return detail::estimate_from_sum(sum, n);
}

CorrelationEstimate incoherent_correlation(Angle delta, std::uint64_t n, RngStream stream,
                                           unsigned threads) {
  const std::int64_t sum = detail::chunked_sum(stream, n, threads, [&](Philox4x32& gen) {
    const Angle phi = gen.uniform_angle();
    const Angle lambda = pointer_quantile(gen.uniform53());
    const auto [sa, sb] = simulate_pair(lambda, ExperimentSetting{delta, phi});
    return sa * sb;
  });
  return detail::estimate_from_sum(sum, n);
}

}  // namespace bell
