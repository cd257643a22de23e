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

// Mixed Parrondo game: the density operator on H_C (x) H_X evolves under
//
//   rho -> S [ 1/2 A rho A^dagger + 1/2 B rho B^dagger ] S^dagger
//
// where A acts on the coin at every capital, B applies B0 at capitals
// divisible by 3 and B1 elsewhere, and S is the conditional shift.

#ifndef PARRONDO_CPMAP_GAME_HPP_
#define PARRONDO_CPMAP_GAME_HPP_

#include <cstdint>
#include <functional>
#include <vector>

#include "parrondo/chiral_state.hpp"
#include "parrondo/core_math.hpp"
#include "parrondo/series.hpp"

namespace parrondo::cpmap {

// Default cap on exact density evolution.
inline constexpr std::int64_t kDefaultDensityBudget = 200;

// rho = sum_{x,y} rho_xy (x) |x><y| with rho_xy a 2x2 block over H_C.
// Blocks with x or y outside [window_low, window_high] are exactly zero.
class DensityState {
 public:
  DensityState(std::int64_t half_width, std::int64_t origin);

  std::int64_t half_width() const { return half_width_; }
  std::int64_t step() const { return step_; }
  std::int64_t window_low() const { return low_; }
  std::int64_t window_high() const { return high_; }
  bool empty_window() const { return low_ > high_; }

  Matrix2 block(std::int64_t x, std::int64_t y) const;
  void set_block(std::int64_t x, std::int64_t y, const Matrix2& value);

  // tr rho_xx
  double population(std::int64_t x) const;
  double trace() const;
  // max over blocks of |rho_yx - rho_xy^dagger|
  double hermiticity_error() const;
  // Row-major (2w x 2w) matrix over the window, index 2 (x - low) + c.
  std::vector<Complex> dense_window() const;

 private:
  friend void step_density(DensityState&, const CoinSet&);

  std::size_t sites() const { return static_cast<std::size_t>(2 * half_width_ + 1); }
  std::size_t offset(std::int64_t x, std::int64_t y) const {
    return 4 * (static_cast<std::size_t>(x + half_width_) * sites() +
                static_cast<std::size_t>(y + half_width_));
  }

  std::vector<Complex> blocks_;
  std::int64_t half_width_;
  std::int64_t step_ = 0;
  std::int64_t low_;
  std::int64_t high_;
};

// |c><c| (x) |x0><x0| on a lattice of half width |x0| + steps_budget.
DensityState init_density(int c, std::int64_t initial_capital,
                          std::int64_t steps_budget);

// One application of the mixed-strategy CP map. Throws LatticeExhausted if
// weight would leave the lattice.
void step_density(DensityState& rho, const CoinSet& coins);

double expected_capital_density(const DensityState& rho);
double second_moment_density(const DensityState& rho);

// (X (x) 1) rho (X^dagger (x) 1)
DensityState swap_conjugate(const DensityState& rho);
// (X (x) Y) rho (X (x) Y)^dagger with Y|x> = |-x>.
DensityState mirror_conjugate(const DensityState& rho);

using DensityObserver = std::function<void(const DensityState&)>;

// Exact series for n = 0..steps from init_density(c, 0, steps). Throws
// std::invalid_argument if steps exceeds budget.
CapitalSeries run_density(const CoinSet& coins, int c, std::int64_t steps,
                          std::int64_t budget = kDefaultDensityBudget,
                          const DensityObserver& observer = {});

// Random-unitary unravelling: at each step A or B is drawn with probability
// 1/2 and applied coherently to a pure C (x) X state, followed by the shift.
// capital[n] is the expected capital of that pure state after n steps.
SampledPath sample_unitary_trajectory(const CoinSet& coins, int c,
                                      std::int64_t steps, std::uint64_t seed);

// The pure state reached by a fixed strategy sequence from |c>|0>.
ChiralState evolve_sequence(const CoinSet& coins, int c,
                            const std::vector<Strategy>& sequence);

}  // namespace parrondo::cpmap

#endif  // PARRONDO_CPMAP_GAME_HPP_
