// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include <cmath>

#include "bell/experiment.hpp"
#include "test_util.hpp"

using namespace bell;

namespace {

ExperimentSetting setting(double delta, double phi = 0.0) {
  return {Angle(delta), Angle(phi)};
}

}  // namespace

TEST_CASE("response convention") {
  CHECK(response(Angle(kPi / 4.0)) == +1);
  CHECK(response(Angle(-kPi / 4.0)) == -1);
  CHECK(response(Angle(0.0)) == +1);
  CHECK(response(Angle(-kPi)) == -1);
}

TEST_CASE("simulate_pair point values") {
  CHECK(simulate_pair(Angle(kPi / 6.0), setting(kPi / 3.0)) == std::pair{+1, +1});
  CHECK(simulate_pair(Angle(-kPi / 6.0), setting(kPi / 3.0)) == std::pair{-1, +1});
  // Perfect anticorrelation at deltabar = 0 (away from the measure-zero
  // special points 0 and -pi).
  testing::RandomInputs rng(41);
  for (int i = 0; i < 1000; ++i) {
    const Angle l = rng.angle();
    if (std::abs(l.radians()) < 1e-12 || std::abs(l.radians() + kPi) < 1e-12) continue;
    const auto [sa, sb] = simulate_pair(l, setting(0.4, 0.4));
    CHECK(sa == -sb);
  }
}

TEST_CASE("joint probabilities") {
  const auto at_zero = joint_probabilities(setting(0.0));
  CHECK(at_zero.pp == doctest::Approx(0.0));
  CHECK(at_zero.pm == doctest::Approx(0.5));
  CHECK(at_zero.mp == doctest::Approx(0.5));
  CHECK(at_zero.mm == doctest::Approx(0.0));

  const auto quarter = joint_probabilities(setting(kPi / 2.0));
  for (double p : {quarter.pp, quarter.pm, quarter.mp, quarter.mm}) {
    CHECK(p == doctest::Approx(0.25).epsilon(1e-15));
  }

  const auto third = joint_probabilities(setting(kPi / 3.0));
  CHECK(third.pp == doctest::Approx(1.0 / 8.0).epsilon(1e-15));
  CHECK(third.pm == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
  CHECK(third.mp == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
  CHECK(third.mm == doctest::Approx(1.0 / 8.0).epsilon(1e-15));

  testing::RandomInputs rng(42);
  for (int i = 0; i < 100; ++i) {
    const auto j = joint_probabilities({rng.angle(), rng.angle()});
    CHECK(std::abs(j.pp + j.pm + j.mp + j.mm - 1.0) <= 1e-12);
  }
}

TEST_CASE("joint probabilities match Monte Carlo frequencies") {
  const auto s = setting(kPi / 3.0, 0.2);
  const std::uint64_t n = 200000;
  const auto draws = [&] {
    std::array<std::uint64_t, 4> counts{};
    Philox4x32 gen({5, 0});
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto [sa, sb] = simulate_pair(pointer_quantile(gen.uniform53()), s);
      counts[static_cast<std::size_t>((sa > 0 ? 0 : 2) + (sb > 0 ? 0 : 1))] += 1;
    }
    return counts;
  }();
  const auto j = joint_probabilities(s);
  const std::array<double, 4> expected = {j.pp, j.pm, j.mp, j.mm};
  for (int k = 0; k < 4; ++k) {
    const double p = expected[static_cast<std::size_t>(k)];
    const double freq = static_cast<double>(draws[static_cast<std::size_t>(k)]) / n;
    const double sigma = std::sqrt(p * (1.0 - p) / n);
    CHECK(std::abs(freq - p) <= 4.0 * sigma);
  }
}

TEST_CASE("exact correlation") {
  CHECK(exact_correlation(setting(0.0)) == doctest::Approx(-1.0));
  CHECK(exact_correlation(setting(kPi / 2.0)) == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(exact_correlation(setting(kPi / 4.0)) ==
        doctest::Approx(-std::sqrt(2.0) / 2.0).epsilon(1e-15));
}

TEST_CASE("exact correlation depends only on the wrapped difference") {
  testing::RandomInputs rng(43);
  for (int i = 0; i < 100; ++i) {
    const Angle delta = rng.angle();
    const Angle phi = rng.angle();
    const Angle shift = rng.angle();
    const double a = exact_correlation({delta, phi});
    const double b = exact_correlation(
        {Angle(delta.radians() + shift.radians()), Angle(phi.radians() + shift.radians())});
    CHECK(std::abs(a - b) <= 1e-12);
  }
}

TEST_CASE("Monte Carlo correlation") {
  SUBCASE("perfect anticorrelation is exact") {
    const auto est = mc_correlation(setting(0.0), 100000, {0, 0});
    CHECK(est.mean == -1.0);
    CHECK(est.std_error == 0.0);
  }
  SUBCASE("agrees with the closed form at pi/4 and pi/2") {
    for (double d : {kPi / 4.0, kPi / 2.0}) {
      const auto est = mc_correlation(setting(d), 1000000, {0, 0});
      CHECK(std::abs(est.mean - exact_correlation(setting(d))) <= 3.0 * est.std_error);
    }
  }
  SUBCASE("n = 0 is rejected") {
    CHECK_THROWS_AS(mc_correlation(setting(1.0), 0, {0, 0}), std::invalid_argument);
  }
  SUBCASE("thread count does not change the estimate") {
    const auto one = mc_correlation(setting(1.1, 0.3), 300000, {9, 0}, 1);
    const auto four = mc_correlation(setting(1.1, 0.3), 300000, {9, 0}, 4);
    CHECK(one.mean == four.mean);
    CHECK(one.std_error == four.std_error);
  }
}

TEST_CASE("partition of the circle by the two responses") {
  // Blocks for deltabar in (0, pi): [0, db) -> (+,+); [db, pi) -> (+,-);
  // [db - pi, 0) -> (-,+); [-pi, db - pi) -> (-,-).
  testing::RandomInputs rng(44);
  for (int g = 1; g <= 15; ++g) {
    const double db = g * kPi / 16.0;
    for (int i = 0; i < 700; ++i) {
      const Angle lambda = rng.angle();
      const double l = lambda.radians();
      const bool near_edge = std::abs(wrap_radians(l)) < 1e-12 ||
                             std::abs(wrap_radians(l - db)) < 1e-12 ||
                             std::abs(wrap_radians(l - db + kPi)) < 1e-12 ||
                             std::abs(wrap_radians(l + kPi)) < 1e-12;
      if (near_edge) continue;
      std::pair<Outcome, Outcome> expected;
      if (l >= 0.0 && l < db) {
        expected = {+1, +1};
      } else if (l >= db) {
        expected = {+1, -1};
      } else if (l >= db - kPi) {
        expected = {-1, +1};
      } else {
        expected = {-1, -1};
      }
      CAPTURE(db);
      CAPTURE(l);
      CHECK(simulate_pair(lambda, setting(db)) == expected);
    }
  }
}

TEST_CASE("classical baseline") {
  SUBCASE("closed form") {
    CHECK(classical_correlation(Angle(0.0)) == doctest::Approx(-1.0));
    CHECK(classical_correlation(Angle(kPi / 2.0)) == doctest::Approx(0.0));
    CHECK(classical_correlation(wrap_angle(kPi)) == doctest::Approx(1.0));
  }
  SUBCASE("odd symmetry about pi/2 in |deltabar|") {
    testing::RandomInputs rng(45);
    for (int i = 0; i < 100; ++i) {
      const double d = rng.in_range(0.0, kPi);
      CHECK(classical_correlation(Angle(d)) + classical_correlation(Angle(kPi - d)) ==
            doctest::Approx(0.0).epsilon(1e-12));
      CHECK(classical_correlation(Angle(-d)) ==
            doctest::Approx(classical_correlation(Angle(d))).epsilon(1e-12));
    }
  }
  SUBCASE("pair map anticorrelates at deltabar = 0") {
    testing::RandomInputs rng(46);
    for (int i = 0; i < 200; ++i) {
      const Angle l = rng.angle();
      if (std::abs(l.radians()) < 1e-12 || std::abs(l.radians() + kPi) < 1e-12) continue;
      const auto [sa, sb] = classical_simulate_pair(l, Angle(0.0));
      CHECK(sa == -sb);
    }
  }
  SUBCASE("Monte Carlo matches the closed form on a grid") {
    for (int g = 0; g < 16; ++g) {
      const Angle d(-kPi + (g + 0.5) * kTwoPi / 16.0);
      const auto est = classical_mc_correlation(d, 1000000, {1, (std::uint64_t{g} + 1) << 32});
      CHECK(std::abs(est.mean - classical_correlation(d)) <= 4.0 * est.std_error);
    }
  }
}

TEST_CASE("incoherent source decorrelates") {
  for (double delta : {0.0, kPi / 3.0}) {
    const auto est = incoherent_correlation(Angle(delta), 1000000, {0, 0});
    CHECK(std::abs(est.mean) <= 3.0 * est.std_error);
  }
  const auto single = incoherent_correlation(Angle(0.9), 1, {0, 0});
  CHECK(std::abs(single.mean) == 1.0);
  CHECK_THROWS_AS(incoherent_correlation(Angle(0.0), 0, {0, 0}), std::invalid_argument);
}
