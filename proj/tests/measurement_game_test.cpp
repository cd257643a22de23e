/* Copyright 2026 The Parrondo Walk Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "parrondo/measurement_game.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

#include "parrondo/cpmap_game.hpp"

namespace parrondo::measurement {
namespace {

constexpr double kEps = 0.01;

TEST(MeasureSelectorTest, BasisInputsGiveFairOutcomes) {
  const CoinSet coins = default_coins(kEps);
  for (int d = 0; d < 2; ++d) {
    EXPECT_NEAR(std::norm(coins.u(0, d)), 0.5, 1e-15);
    Rng rng(100 + static_cast<std::uint64_t>(d));
    const int draws = 10000;
    int zeros = 0;
    for (int i = 0; i < draws; ++i) zeros += measure_selector(coins, d, rng) == 0;
    EXPECT_LT(std::abs(zeros - draws / 2), 4.0 * std::sqrt(draws * 0.25));
  }
}

TEST(RunDMeasuredTest, StrategyFrequenciesAreHalf) {
  const CoinSet coins = default_coins(kEps);
  for (int d0 = 0; d0 < 2; ++d0) {
    const SampledPath path = run_d_measured(coins, d0, 0, 10000, 5);
    int a_count = 0;
    for (Strategy s : path.strategies) a_count += s == Strategy::kA;
    EXPECT_LT(std::abs(a_count - 5000), 4.0 * std::sqrt(2500.0));
  }
}

TEST(RunDMeasuredTest, SeedReproducible) {
  const CoinSet coins = default_coins(kEps);
  const SampledPath a = run_d_measured(coins, 0, 1, 200, 11);
  const SampledPath b = run_d_measured(coins, 0, 1, 200, 11);
  EXPECT_EQ(a.capital, b.capital);
  EXPECT_EQ(a.second_moment, b.second_moment);
  EXPECT_EQ(a.strategies, b.strategies);
  const SampledPath c = run_d_measured(coins, 0, 1, 200, 12);
  EXPECT_NE(a.strategies, c.strategies);
}

TEST(RunDMeasuredTest, EnsembleTracksCpMap) {
  const CoinSet coins = default_coins(kEps);
  const std::int64_t n = 50;
  for (int c0 = 0; c0 < 2; ++c0) {
    const CapitalSeries exact = cpmap::run_density(coins, c0, n);
    const CapitalSeries sampled = average_trajectories(
        [&](std::uint64_t seed) { return run_d_measured(coins, 0, c0, n, seed); },
        1500, 1234);
    for (std::size_t i = 1; i < exact.size(); ++i) {
      ASSERT_LT(std::abs(sampled[i].expected_capital - exact[i].expected_capital),
                4.0 * sampled[i].std_error)
          << "c0=" << c0 << " n=" << i;
    }
  }
}

TEST(TossAndMeasureTest, StartingFromZeroFavoursWinning) {
  const double eps = 0.3;
  const CoinSet coins = default_coins(eps);
  Rng rng(21);
  const int draws = 20000;
  int wins = 0;
  for (int i = 0; i < draws; ++i) {
    TrajectoryState state;
    wins += toss_and_measure(state, Strategy::kA, coins, rng);
  }
  const double p = std::cos(eps) * std::cos(eps);
  EXPECT_LT(std::abs(wins - draws * p), 4.0 * std::sqrt(draws * p * (1 - p)));
}

TEST(TossAndMeasureTest, BiasFlipsAfterAWin) {
  const double eps = 0.3;
  const CoinSet coins = default_coins(eps);
  Rng rng(22);
  const int draws = 20000;
  int losses = 0;
  for (int i = 0; i < draws; ++i) {
    TrajectoryState state;
    state.coin_state = {Complex{0.0}, Complex{1.0}};
    losses += toss_and_measure(state, Strategy::kA, coins, rng) == 0;
  }
  const double p = std::cos(eps) * std::cos(eps);
  EXPECT_LT(std::abs(losses - draws * p), 4.0 * std::sqrt(draws * p * (1 - p)));
}

TEST(TossAndMeasureTest, CollapsesCoinAndMovesCapital) {
  const CoinSet coins = default_coins(kEps);
  Rng rng(3);
  TrajectoryState state;
  for (int i = 0; i < 50; ++i) {
    const std::int64_t before = state.capital;
    const int outcome = toss_and_measure(state, Strategy::kB, coins, rng);
    EXPECT_EQ(state.capital - before, outcome == 1 ? 1 : -1);
    EXPECT_EQ(std::norm(state.coin_state[outcome]), 1.0);
    EXPECT_EQ(state.coin_state[1 - outcome], Complex{0.0});
  }
  EXPECT_EQ(state.step, 50);
}

TEST(RunDcMeasuredTest, CapitalParityAndRange) {
  const SampledPath path = run_dc_measured(default_coins(kEps), 0, 0, 500, 77);
  ASSERT_EQ(path.capital.size(), 501u);
  for (std::size_t n = 0; n < path.capital.size(); ++n) {
    const auto x = static_cast<std::int64_t>(path.capital[n]);
    EXPECT_LE(std::abs(x), static_cast<std::int64_t>(n));
    EXPECT_EQ(std::abs(x - static_cast<std::int64_t>(n)) % 2, 0);
    EXPECT_EQ(path.second_moment[n], path.capital[n] * path.capital[n]);
  }
}

TEST(RunDcMeasuredTest, RejectsNonBitInputs) {
  EXPECT_THROW(run_dc_measured(default_coins(kEps), 2, 0, 5, 1),
               std::invalid_argument);
  EXPECT_THROW(run_dc_measured(default_coins(kEps), 0, -1, 5, 1),
               std::invalid_argument);
  EXPECT_THROW(run_d_measured(default_coins(kEps), 0, 0, -1, 1),
               std::invalid_argument);
}

TEST(AverageTrajectoriesTest, SingleSampleEqualsRun) {
  const CoinSet coins = default_coins(kEps);
  const SampledPath path = run_d_measured(coins, 1, 0, 30, 9);
  const CapitalSeries series = average_trajectories(
      [&](std::uint64_t seed) { return run_d_measured(coins, 1, 0, 30, seed); },
      1, 9);
  ASSERT_EQ(series.size(), path.capital.size());
  EXPECT_TRUE(series.sampled());
  for (std::size_t n = 0; n < series.size(); ++n) {
    EXPECT_EQ(series[n].expected_capital, path.capital[n]);
    EXPECT_EQ(series[n].second_moment, path.second_moment[n]);
    EXPECT_EQ(series[n].std_error, 0.0);
  }
}

TEST(AverageTrajectoriesTest, StandardErrorShrinksWithSamples) {
  const CoinSet coins = default_coins(kEps);
  const TrajectoryRunner runner = [&](std::uint64_t seed) {
    return run_dc_measured(coins, 0, 0, 100, seed);
  };
  const double small = average_trajectories(runner, 4000, 1).back().std_error;
  const double large = average_trajectories(runner, 8000, 50000).back().std_error;
  EXPECT_NEAR(large / small, 1.0 / std::sqrt(2.0), 0.05);
}

TEST(AverageTrajectoriesTest, MatchesHandComputedMoments) {
  const TrajectoryRunner runner = [](std::uint64_t seed) {
    const auto x = static_cast<double>(seed);
    return SampledPath{{0.0, x}, {0.0, x * x}, {Strategy::kA}};
  };
  const CapitalSeries series = average_trajectories(runner, 3, 1);
  EXPECT_DOUBLE_EQ(series[1].expected_capital, 2.0);
  EXPECT_DOUBLE_EQ(series[1].second_moment, 14.0 / 3.0);
  EXPECT_DOUBLE_EQ(series[1].std_error, std::sqrt(1.0 / 3.0));
  EXPECT_THROW(average_trajectories(runner, 0, 1), std::invalid_argument);
}

TEST(AverageTrajectoriesTest, RaggedPathsThrow) {
  const TrajectoryRunner runner = [](std::uint64_t seed) {
    return SampledPath{std::vector<double>(seed, 0.0),
                       std::vector<double>(seed, 0.0), {}};
  };
  EXPECT_THROW(average_trajectories(runner, 2, 1), std::invalid_argument);
}

TEST(AverageTrajectoriesTest, EnsembleIsAntisymmetricInInitialCoin) {
  const CoinSet coins = default_coins(kEps);
  const CapitalSeries zero = average_trajectories(
      [&](std::uint64_t s) { return run_d_measured(coins, 0, 0, 40, s); }, 800, 1);
  const CapitalSeries one = average_trajectories(
      [&](std::uint64_t s) { return run_d_measured(coins, 0, 1, 40, s); }, 800, 1);
  for (std::size_t n = 1; n < zero.size(); ++n) {
    const double se = std::hypot(zero[n].std_error, one[n].std_error);
    ASSERT_LT(std::abs(zero[n].expected_capital + one[n].expected_capital),
              4.0 * se + 1e-12);
  }
}

}  // namespace
}  // namespace parrondo::measurement
