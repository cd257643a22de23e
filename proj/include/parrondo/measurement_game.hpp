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

// Monte Carlo versions of the quantum game in which registers are measured
// every step.
//
// D-measured: U acts on the (collapsed) D qubit and D is measured at once.
// Outcome 0 selects strategy A, outcome 1 strategy B, and D is left flipped,
// as the W gate does. The coin and capital registers stay coherent, so each
// trajectory carries a pure C (x) X state and its capital is an expectation.
//
// DC-measured: additionally the coin C is measured after the strategy coin.
// The capital is then a definite integer and the collapsed coin seeds the
// next toss.

#ifndef PARRONDO_MEASUREMENT_GAME_HPP_
#define PARRONDO_MEASUREMENT_GAME_HPP_

#include <cstdint>
#include <functional>

#include "parrondo/chiral_state.hpp"
#include "parrondo/core_math.hpp"
#include "parrondo/rng.hpp"
#include "parrondo/series.hpp"

namespace parrondo::measurement {

// Coin qubit and definite capital of a DC-measured trajectory.
struct TrajectoryState {
  Vector2 coin_state{Complex{1.0}, Complex{0.0}};
  std::int64_t capital = 0;
  std::int64_t step = 0;
};

// Applies U to |d> and samples the D outcome by the Born rule.
int measure_selector(const CoinSet& coins, int d, Rng& rng);

// Strategy selected by a D outcome (W convention: 0 -> A, 1 -> B).
constexpr Strategy strategy_for_outcome(int outcome) {
  return outcome == 0 ? Strategy::kA : Strategy::kB;
}

// Applies the strategy coin to the coin state and measures it. Moves the
// capital by -1 / +1 on outcome 0 / 1 and collapses the coin. Returns the
// outcome.
int toss_and_measure(TrajectoryState& state, Strategy strategy,
                     const CoinSet& coins, Rng& rng);

SampledPath run_d_measured(const CoinSet& coins, int d0, int c0,
                           std::int64_t steps, std::uint64_t seed);

SampledPath run_dc_measured(const CoinSet& coins, int d0, int c0,
                            std::int64_t steps, std::uint64_t seed);

using TrajectoryRunner = std::function<SampledPath(std::uint64_t seed)>;

// Mean capital, mean second moment and the standard error of the mean capital
// per step over runs seeded base_seed + i for i < samples. Throws
// std::invalid_argument if samples < 1 or the paths differ in length.
CapitalSeries average_trajectories(const TrajectoryRunner& runner,
                                   std::int64_t samples,
                                   std::uint64_t base_seed);

}  // namespace parrondo::measurement

#endif  // PARRONDO_MEASUREMENT_GAME_HPP_
