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

#include "parrondo/chiral_state.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "parrondo/errors.hpp"

namespace parrondo {

ChiralState::ChiralState(std::int64_t half_width, std::int64_t origin)
    : half_width_(half_width), low_(origin), high_(origin - 1) {
  if (half_width < 0) throw std::invalid_argument("ChiralState: half width < 0");
  for (auto& plane : planes_) {
    plane.assign(static_cast<std::size_t>(2 * half_width + 1), Complex{0.0});
  }
}

ChiralState ChiralState::basis(int c, std::int64_t x0,
                               std::int64_t steps_budget) {
  if (c != 0 && c != 1) throw std::invalid_argument("ChiralState: c not a bit");
  if (steps_budget < 0) throw std::invalid_argument("ChiralState: budget < 0");
  ChiralState state(std::abs(x0) + steps_budget, x0);
  state.set_amplitude(c, x0, Complex{1.0});
  return state;
}

Complex ChiralState::amplitude(int c, std::int64_t x) const {
  if (x < -half_width_ || x > half_width_) return Complex{0.0};
  return planes_[c][index(x)];
}

void ChiralState::set_amplitude(int c, std::int64_t x, Complex value) {
  if (x < -half_width_ || x > half_width_) {
    throw std::out_of_range("ChiralState: site " + std::to_string(x) +
                            " off lattice");
  }
  planes_[c][index(x)] = value;
  if (empty_window()) {
    low_ = high_ = x;
  } else {
    low_ = std::min(low_, x);
    high_ = std::max(high_, x);
  }
}

std::span<Complex> ChiralState::window(int c) {
  if (empty_window()) return {};
  return std::span<Complex>(planes_[c]).subspan(
      index(low_), static_cast<std::size_t>(high_ - low_ + 1));
}

void ChiralState::apply_coin(const Matrix2& coin) {
  kernels::active().apply_pair(window(0), window(1), coin);
}

void ChiralState::apply_capital_coins(const Matrix2& b0, const Matrix2& b1) {
  for (std::int64_t x = low_; x <= high_; ++x) {
    const Matrix2& b = divisible_by_3(x) ? b0 : b1;
    Complex& up = planes_[0][index(x)];
    Complex& down = planes_[1][index(x)];
    const Complex a0 = up;
    const Complex a1 = down;
    up = b(0, 0) * a0 + b(0, 1) * a1;
    down = b(1, 0) * a0 + b(1, 1) * a1;
  }
}

void ChiralState::apply_strategy(Strategy strategy, const CoinSet& coins) {
  if (strategy == Strategy::kA) {
    apply_coin(coins.a.matrix());
  } else {
    apply_capital_coins(coins.b0.matrix(), coins.b1.matrix());
  }
}

void ChiralState::shift() {
  if (empty_window()) return;
  const std::int64_t edge = half_width_;
  auto& left = planes_[0];
  if (low_ == -edge && left[index(-edge)] != Complex{0.0}) {
    throw LatticeExhausted("ChiralState::shift: amplitude leaves the lattice");
  }
  for (std::int64_t x = std::max(low_, -edge + 1); x <= high_; ++x) {
    left[index(x - 1)] = left[index(x)];
  }
  left[index(high_)] = Complex{0.0};

  auto& right = planes_[1];
  if (high_ == edge && right[index(edge)] != Complex{0.0}) {
    throw LatticeExhausted("ChiralState::shift: amplitude leaves the lattice");
  }
  for (std::int64_t x = std::min(high_, edge - 1); x >= low_; --x) {
    right[index(x + 1)] = right[index(x)];
  }
  right[index(low_)] = Complex{0.0};

  low_ = std::max(low_ - 1, -edge);
  high_ = std::min(high_ + 1, edge);
}

kernels::Moments ChiralState::moments() const {
  kernels::Moments total;
  if (empty_window()) return total;
  const auto count = static_cast<std::size_t>(high_ - low_ + 1);
  for (const auto& plane : planes_) {
    total += kernels::active().moments(
        std::span<const Complex>(plane).subspan(index(low_), count),
        static_cast<double>(low_));
  }
  return total;
}

}  // namespace parrondo
