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

// State-vector simulation of the four-register quantum Parrondo circuit on
// registers D (strategy selector), C (game coin / chirality), O (mod-3 flag)
// and X (capital). One game step is
//
//   E = MOD_inv . S . W . MOD
//
// where MOD marks capitals not divisible by 3 in O, W applies U to D and then
// A (D = 0 branch) or B0/B1 (D = 1 branch, chosen by O) to C while flipping D
// and O, S moves the capital by -1/+1 for c = 0/1, and MOD_inv clears O again.

#ifndef PARRONDO_QUANTUM_WALK_HPP_
#define PARRONDO_QUANTUM_WALK_HPP_

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "parrondo/core_math.hpp"
#include "parrondo/series.hpp"

namespace parrondo::qwalk {

// Amplitudes over (d, c, o, x) with x on the lattice [-L, L]. Each (d, c, o)
// triple owns a contiguous plane over x. Sites outside the tracked window
// [window_low, window_high] are exactly zero.
class PureState {
 public:
  static constexpr int kPlanes = 8;
  static constexpr int plane_index(int d, int c, int o) {
    return (d * 2 + c) * 2 + o;
  }

  // Zero state on [-half_width, half_width]; origin is the initial capital
  // used for light-cone bookkeeping.
  PureState(std::int64_t half_width, std::int64_t origin);

  std::int64_t half_width() const { return half_width_; }
  std::int64_t origin() const { return origin_; }
  std::int64_t step() const { return step_; }
  std::size_t sites() const { return static_cast<std::size_t>(2 * half_width_ + 1); }
  std::int64_t window_low() const { return low_; }
  std::int64_t window_high() const { return high_; }
  bool empty_window() const { return low_ > high_; }

  Complex amplitude(int d, int c, int o, std::int64_t x) const;
  // Widens the window to include x. Throws std::out_of_range off-lattice.
  void set_amplitude(int d, int c, int o, std::int64_t x, Complex value);

  std::span<Complex> plane(int d, int c, int o) {
    return planes_[plane_index(d, c, o)];
  }
  std::span<const Complex> plane(int d, int c, int o) const {
    return planes_[plane_index(d, c, o)];
  }

  double norm() const;
  // Total probability on o = 1.
  double flag_weight() const;
  // P(x) summed over d, c, o for every lattice site, index x + L.
  std::vector<double> position_distribution() const;

 private:
  friend void apply_mod(PureState&);
  friend void apply_w(PureState&, const CoinSet&);
  friend void apply_shift(PureState&);
  friend void apply_mod_inv(PureState&);
  friend void step(PureState&, const CoinSet&);

  std::size_t index(std::int64_t x) const {
    return static_cast<std::size_t>(x + half_width_);
  }
  // Window as a subspan of a plane.
  std::span<Complex> window(int plane);

  std::array<std::vector<Complex>, kPlanes> planes_;
  std::int64_t half_width_;
  std::int64_t origin_;
  std::int64_t step_ = 0;
  std::int64_t low_;
  std::int64_t high_;
};

// |d>|c>|x = initial_capital>|o = 0> on a lattice of half width
// |initial_capital| + steps_budget.
PureState init_state(int d, int c, std::int64_t initial_capital,
                     std::int64_t steps_budget);

// o <- o XOR [3 does not divide x]
void apply_mod(PureState& state);
// The combined strategy and coin unitary W.
void apply_w(PureState& state, const CoinSet& coins);
// x -> x - 1 for c = 0, x -> x + 1 for c = 1. Throws LatticeExhausted when
// nonzero amplitude would leave the lattice.
void apply_shift(PureState& state);
// o <- o XOR [3 divides x - (2c - 1)], the capital before the shift.
void apply_mod_inv(PureState& state);
// MOD, W, S, MOD_inv; increments the step counter.
void step(PureState& state, const CoinSet& coins);

// sum_x x P(x) and sum_x x^2 P(x) with P the reduced capital distribution.
double expected_capital(const PureState& state);
double second_moment(const PureState& state);

using StepObserver = std::function<void(const PureState&)>;

// Series for n = 0..steps from init_state(d, c, 0, steps). The observer, if
// set, sees the state after every step including n = 0.
CapitalSeries run(const CoinSet& coins, int d, int c, std::int64_t steps,
                  const StepObserver& observer = {});

// Position distribution rows (n, x, P) for x in the light cone at each step.
std::vector<PositionRow> position_rows(const PureState& state);

}  // namespace parrondo::qwalk

#endif  // PARRONDO_QUANTUM_WALK_HPP_
