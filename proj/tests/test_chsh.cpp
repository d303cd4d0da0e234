// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "bell/chsh.hpp"
#include "bell/distribution.hpp"
#include "test_util.hpp"

using namespace bell;

namespace {

const ChshSettings kTsirelson{Angle(kPi / 4.0), Angle(-kPi / 4.0), Angle(kPi / 2.0), Angle(0.0)};

ChshSettings random_settings(testing::RandomInputs& rng) {
  return {rng.angle(), rng.angle(), rng.angle(), Angle(0.0)};
}

}  // namespace

TEST_CASE("chsh_statistic") {
  CHECK(chsh_statistic(1.0, 1.0, 1.0, -1.0) == doctest::Approx(4.0));
  CHECK(chsh_statistic(0.0, 0.0, 0.0, 0.0) == doctest::Approx(0.0));
  const double r = std::sqrt(2.0) / 2.0;
  CHECK(chsh_statistic(-r, -r, -r, r) == doctest::Approx(-2.0 * std::sqrt(2.0)).epsilon(1e-15));
  CHECK_THROWS_AS(chsh_statistic(1.5, 0.0, 0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(chsh_statistic(0.0, 0.0, -1.01, 0.0), std::invalid_argument);
}

TEST_CASE("model_chsh") {
  CHECK(model_chsh(kTsirelson) == doctest::Approx(-2.0 * std::sqrt(2.0)).epsilon(1e-12));
  CHECK(model_chsh({Angle(0.0), Angle(0.0), Angle(0.0), Angle(0.0)}) == doctest::Approx(-2.0));
  CHECK(model_chsh({Angle(kPi / 2.0), Angle(kPi / 2.0), Angle(0.0), Angle(0.0)}) ==
        doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("per_config_classical is +-2, exhaustively") {
  CHECK(per_config_classical(+1, +1, +1, +1) == +2);
  CHECK(per_config_classical(+1, -1, +1, -1) == +2);
  CHECK(per_config_classical(-1, +1, +1, +1) == -2);
  for (int mask = 0; mask < 16; ++mask) {
    const auto bit = [&](int i) { return (mask >> i) & 1 ? +1 : -1; };
    const int value = per_config_classical(bit(0), bit(1), bit(2), bit(3));
    CHECK(std::abs(value) == 2);
  }
  CHECK_THROWS_AS(per_config_classical(0, 1, 1, 1), std::invalid_argument);
  CHECK_THROWS_AS(per_config_classical(1, 1, 2, 1), std::invalid_argument);
}

TEST_CASE("per_config_model values and witness of magnitude four") {
  bool found_four = false;
  for (int i = 0; i < 4096; ++i) {
    const Angle lambda(-kPi + kTwoPi * i / 4096.0);
    const int value = per_config_model(lambda, kTsirelson);
    const bool allowed =
        value == -4 || value == -2 || value == 0 || value == 2 || value == 4;
    CHECK(allowed);
    if (std::abs(value) == 4) found_four = true;
  }
  CHECK(found_four);
}

TEST_CASE("per_config_model reduces to -2 when all parameters coincide") {
  const ChshSettings zero{Angle(0.0), Angle(0.0), Angle(0.0), Angle(0.0)};
  for (int i = 1; i < 512; ++i) {  // grid avoiding the special points 0, -pi
    const Angle lambda(-kPi + kTwoPi * i / 512.0);
    if (std::abs(lambda.radians()) < 1e-12) continue;
    CHECK(per_config_model(lambda, zero) == -2);
  }
}

TEST_CASE("density-weighted mean of the per-configuration combination") {
  SUBCASE("equals -2*sqrt(2) at the Tsirelson point") {
    CHECK(std::abs(per_config_mean(kTsirelson) + 2.0 * std::sqrt(2.0)) <= 1e-6);
  }
  SUBCASE("equals model_chsh at random settings") {
    testing::RandomInputs rng(51);
    for (int i = 0; i < 20; ++i) {
      const auto s = random_settings(rng);
      CHECK(std::abs(per_config_mean(s) - model_chsh(s)) <= 1e-6);
    }
  }
  SUBCASE("equals a brute-force midpoint quadrature") {
    // Independent oracle: 10^6-cell midpoint rule over the density-weighted
    // combination; the jump cells limit its accuracy to ~1e-4.
    const int cells = 1000000;
    double mean = 0.0;
    for (int i = 0; i < cells; ++i) {
      const Angle mid(-kPi + kTwoPi * (i + 0.5) / cells);
      mean += per_config_model(mid, kTsirelson) * pointer_density(mid) * (kTwoPi / cells);
    }
    CHECK(std::abs(per_config_mean(kTsirelson) - mean) <= 1e-4);
  }
  SUBCASE("histogram weights agree with the mean") {
    testing::RandomInputs rng(52);
    for (int i = 0; i < 10; ++i) {
      const auto s = random_settings(rng);
      const auto weights = per_config_histogram(s);
      double total = 0.0, mean = 0.0;
      for (int k = 0; k < 5; ++k) {
        total += weights[static_cast<std::size_t>(k)];
        mean += (2 * k - 4) * weights[static_cast<std::size_t>(k)];
      }
      CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
      CHECK(mean == doctest::Approx(per_config_mean(s)).epsilon(1e-12));
    }
  }
}

TEST_CASE("classical per-configuration bound holds for the baseline") {
  // Four independently estimated baseline correlations never push the CHSH
  // combination significantly past 2.
  testing::RandomInputs rng(53);
  for (int i = 0; i < 100; ++i) {
    const auto s = random_settings(rng);
    const std::array<Angle, 4> params = {
        s.delta1, s.delta2, Angle(s.delta1.radians() - s.delta.radians()),
        Angle(s.delta2.radians() - s.delta.radians())};
    double correlations[4], variance = 0.0;
    for (int k = 0; k < 4; ++k) {
      const auto est = classical_mc_correlation(
          params[static_cast<std::size_t>(k)], 100000,
          {77, (static_cast<std::uint64_t>(4 * i + k)) << 32});
      correlations[k] = est.mean;
      variance += est.std_error * est.std_error;
    }
    const double chsh =
        chsh_statistic(correlations[0], correlations[1], correlations[2], correlations[3]);
    CHECK(std::abs(chsh) <= 2.0 + 4.0 * std::sqrt(variance));
  }
}

TEST_CASE("holonomy cycle") {
  SUBCASE("all-zero parameters give the identity") {
    const CycleParams zero{Angle(0.0), Angle(0.0), Angle(0.0)};
    const auto profile = geometric_phase_profile(zero, 4096);
    CHECK(profile.max_defect <= 1e-9);
  }
  SUBCASE("the rigid law gives the identity for any parameters") {
    testing::RandomInputs rng(54);
    for (int i = 0; i < 20; ++i) {
      const CycleParams params{rng.angle(), rng.angle(), rng.angle()};
      const auto profile = geometric_phase_profile(params, 512, linear_transform);
      CAPTURE(params.d1.radians());
      CHECK(profile.max_defect <= 1e-9);
    }
  }
  SUBCASE("the model law accumulates a finite defect") {
    const CycleParams tsirelson{Angle(kPi / 4.0), Angle(-kPi / 4.0), Angle(kPi / 2.0)};
    const auto profile = geometric_phase_profile(tsirelson, 4096);
    CHECK(profile.max_defect > 0.1);
  }
  SUBCASE("profile validates its grid size") {
    CHECK_THROWS_AS(geometric_phase_profile({Angle(0.1), Angle(0.2), Angle(0.3)}, 1),
                    std::invalid_argument);
  }
}

TEST_CASE("setting composition") {
  CHECK(compose_settings(Angle(kPi / 3.0), Angle(kPi / 3.0)).radians() ==
        doctest::Approx(2.0 * kPi / 3.0).epsilon(1e-15));
  CHECK(compose_settings(wrap_angle(kPi), wrap_angle(kPi)).radians() == doctest::Approx(0.0));

  // A second rotation re-expressed from the intermediate setting lands on the
  // additively composed parameter.
  testing::RandomInputs rng(55);
  for (int i = 0; i < 100; ++i) {
    const Angle delta = rng.angle(), delta2 = rng.angle(), phi = rng.angle(), lambda = rng.angle();
    const Angle composed = compose_settings(delta2, delta);
    const Angle via_setting = frame_map(lambda, {composed, phi});
    const Angle direct =
        Angle(-frame_transform(lambda, Angle(composed.radians() - phi.radians())).radians());
    CHECK(circle_gap(via_setting, direct) <= 1e-12);
  }
}
