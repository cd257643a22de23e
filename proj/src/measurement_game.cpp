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

#include <cmath>
#include <stdexcept>
#include <vector>

#include "parrondo/lattice.hpp"

namespace parrondo::measurement {

int measure_selector(const CoinSet& coins, int d, Rng& rng) {
  const double p0 = std::norm(coins.u(0, d));
  return rng.bernoulli(p0) ? 0 : 1;
}

int toss_and_measure(TrajectoryState& state, Strategy strategy,
                     const CoinSet& coins, Rng& rng) {
  const Unitary2& coin = strategy == Strategy::kA
                             ? coins.a
                             : (divisible_by_3(state.capital) ? coins.b0
                                                              : coins.b1);
  const Vector2 tossed = coin.apply(state.coin_state);
  const double p1 = std::norm(tossed[1]) /
                    (std::norm(tossed[0]) + std::norm(tossed[1]));
  const int outcome = rng.bernoulli(p1) ? 1 : 0;
  state.coin_state = outcome == 0 ? Vector2{Complex{1.0}, Complex{0.0}}
                                  : Vector2{Complex{0.0}, Complex{1.0}};
  state.capital += chirality_step(outcome);
  ++state.step;
  return outcome;
}

SampledPath run_d_measured(const CoinSet& coins, int d0, int c0,
                           std::int64_t steps, std::uint64_t seed) {
  if (steps < 0) throw std::invalid_argument("run_d_measured: steps < 0");
  if (d0 != 0 && d0 != 1) throw std::invalid_argument("run_d_measured: d0");
  Rng rng(seed);
  ChiralState state = ChiralState::basis(c0, 0, steps);
  int d = d0;
  SampledPath path;
  auto record = [&] {
    const auto m = state.moments();
    path.capital.push_back(m.first);
    path.second_moment.push_back(m.second);
  };
  record();
  for (std::int64_t n = 0; n < steps; ++n) {
    const int outcome = measure_selector(coins, d, rng);
    const Strategy strategy = strategy_for_outcome(outcome);
    path.strategies.push_back(strategy);
    state.apply_strategy(strategy, coins);
    state.shift();
    d = 1 - outcome;
    record();
  }
  return path;
}

SampledPath run_dc_measured(const CoinSet& coins, int d0, int c0,
                            std::int64_t steps, std::uint64_t seed) {
  if (steps < 0) throw std::invalid_argument("run_dc_measured: steps < 0");
  if (d0 != 0 && d0 != 1) throw std::invalid_argument("run_dc_measured: d0");
  if (c0 != 0 && c0 != 1) throw std::invalid_argument("run_dc_measured: c0");
  Rng rng(seed);
  TrajectoryState state;
  state.coin_state = c0 == 0 ? Vector2{Complex{1.0}, Complex{0.0}}
                             : Vector2{Complex{0.0}, Complex{1.0}};
  int d = d0;
  SampledPath path;
  auto record = [&] {
    const auto x = static_cast<double>(state.capital);
    path.capital.push_back(x);
    path.second_moment.push_back(x * x);
  };
  record();
  for (std::int64_t n = 0; n < steps; ++n) {
    const int outcome = measure_selector(coins, d, rng);
    const Strategy strategy = strategy_for_outcome(outcome);
    path.strategies.push_back(strategy);
    toss_and_measure(state, strategy, coins, rng);
    d = 1 - outcome;
    record();
  }
  return path;
}

CapitalSeries average_trajectories(const TrajectoryRunner& runner,
                                   std::int64_t samples,
                                   std::uint64_t base_seed) {
  if (samples < 1) throw std::invalid_argument("average_trajectories: samples");
  // Welford running mean and squared deviation per step.
  std::vector<double> mean;
  std::vector<double> deviation;
  std::vector<double> second;
  for (std::int64_t i = 0; i < samples; ++i) {
    const SampledPath path = runner(base_seed + static_cast<std::uint64_t>(i));
    if (i == 0) {
      mean.assign(path.capital.size(), 0.0);
      deviation.assign(path.capital.size(), 0.0);
      second.assign(path.capital.size(), 0.0);
    } else if (path.capital.size() != mean.size()) {
      throw std::invalid_argument("average_trajectories: ragged paths");
    }
    const auto count = static_cast<double>(i + 1);
    for (std::size_t n = 0; n < mean.size(); ++n) {
      const double delta = path.capital[n] - mean[n];
      mean[n] += delta / count;
      deviation[n] += delta * (path.capital[n] - mean[n]);
      second[n] += (path.second_moment[n] - second[n]) / count;
    }
  }
  const auto count = static_cast<double>(samples);
  CapitalSeries series(/*sampled=*/true);
  for (std::size_t n = 0; n < mean.size(); ++n) {
    const double std_error =
        samples > 1 ? std::sqrt(deviation[n] / (count - 1.0) / count) : 0.0;
    series.append({static_cast<std::int64_t>(n), mean[n], second[n], std_error});
  }
  return series;
}

}  // namespace parrondo::measurement
