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

#ifndef PARRONDO_CHIRAL_STATE_HPP_
#define PARRONDO_CHIRAL_STATE_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "parrondo/core_math.hpp"
#include "parrondo/kernels.hpp"
#include "parrondo/lattice.hpp"

namespace parrondo {

// Pure state on H_C (x) H_X: one plane of amplitudes over [-L, L] per coin
// basis state. Sites outside [window_low, window_high] are exactly zero.
class ChiralState {
 public:
  ChiralState(std::int64_t half_width, std::int64_t origin);

  // |c>|x0> with room for steps_budget shifts.
  static ChiralState basis(int c, std::int64_t x0, std::int64_t steps_budget);

  std::int64_t half_width() const { return half_width_; }
  std::int64_t window_low() const { return low_; }
  std::int64_t window_high() const { return high_; }
  bool empty_window() const { return low_ > high_; }

  Complex amplitude(int c, std::int64_t x) const;
  void set_amplitude(int c, std::int64_t x, Complex value);

  // Same unitary on the coin at every site.
  void apply_coin(const Matrix2& coin);
  // B0 at capitals divisible by 3, B1 elsewhere.
  void apply_capital_coins(const Matrix2& b0, const Matrix2& b1);
  // Strategy A applies coin a everywhere; B applies the capital-selected coin.
  void apply_strategy(Strategy strategy, const CoinSet& coins);
  // Conditional shift S = |0><0| T_0 + |1><1| T_1.
  void shift();

  kernels::Moments moments() const;

 private:
  std::size_t index(std::int64_t x) const {
    return static_cast<std::size_t>(x + half_width_);
  }
  std::span<Complex> window(int c);

  std::array<std::vector<Complex>, 2> planes_;
  std::int64_t half_width_;
  std::int64_t low_;
  std::int64_t high_;
};

// A sampled capital path: per-step capital (or its conditional expectation
// when the capital register stays coherent), the matching second moment,
// and the strategy drawn at each step.
struct SampledPath {
  std::vector<double> capital;
  std::vector<double> second_moment;
  std::vector<Strategy> strategies;
};

}  // namespace parrondo

#endif  // PARRONDO_CHIRAL_STATE_HPP_
