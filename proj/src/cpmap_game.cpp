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

#include "parrondo/cpmap_game.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "parrondo/errors.hpp"
#include "parrondo/kernels.hpp"
#include "parrondo/lattice.hpp"
#include "parrondo/rng.hpp"

namespace parrondo::cpmap {

DensityState::DensityState(std::int64_t half_width, std::int64_t origin)
    : half_width_(half_width), low_(origin), high_(origin - 1) {
  if (half_width < 0) throw std::invalid_argument("DensityState: half width < 0");
  if (origin < -half_width || origin > half_width) {
    throw std::out_of_range("DensityState: origin off lattice");
  }
  blocks_.assign(4 * sites() * sites(), Complex{0.0});
}

Matrix2 DensityState::block(std::int64_t x, std::int64_t y) const {
  Matrix2 out;
  if (x < -half_width_ || x > half_width_ || y < -half_width_ ||
      y > half_width_) {
    out.m.fill(Complex{0.0});
    return out;
  }
  const auto base = offset(x, y);
  for (std::size_t i = 0; i < 4; ++i) out.m[i] = blocks_[base + i];
  return out;
}

void DensityState::set_block(std::int64_t x, std::int64_t y,
                             const Matrix2& value) {
  if (x < -half_width_ || x > half_width_ || y < -half_width_ ||
      y > half_width_) {
    throw std::out_of_range("DensityState: block off lattice");
  }
  const auto base = offset(x, y);
  for (std::size_t i = 0; i < 4; ++i) blocks_[base + i] = value.m[i];
  if (empty_window()) {
    low_ = std::min(x, y);
    high_ = std::max(x, y);
  } else {
    low_ = std::min({low_, x, y});
    high_ = std::max({high_, x, y});
  }
}

double DensityState::population(std::int64_t x) const {
  const Matrix2 b = block(x, x);
  return (b(0, 0) + b(1, 1)).real();
}

double DensityState::trace() const {
  double sum = 0.0;
  for (std::int64_t x = low_; x <= high_; ++x) sum += population(x);
  return sum;
}

double DensityState::hermiticity_error() const {
  double worst = 0.0;
  for (std::int64_t x = low_; x <= high_; ++x) {
    for (std::int64_t y = x; y <= high_; ++y) {
      worst = std::max(worst, max_abs_diff(block(y, x), block(x, y).adjoint()));
    }
  }
  return worst;
}

std::vector<Complex> DensityState::dense_window() const {
  if (empty_window()) return {};
  const auto w = static_cast<std::size_t>(high_ - low_ + 1);
  const std::size_t dim = 2 * w;
  std::vector<Complex> out(dim * dim);
  for (std::size_t r = 0; r < w; ++r) {
    for (std::size_t s = 0; s < w; ++s) {
      const Matrix2 b = block(low_ + static_cast<std::int64_t>(r),
                              low_ + static_cast<std::int64_t>(s));
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) out[(2 * r + j) * dim + 2 * s + k] = b(j, k);
      }
    }
  }
  return out;
}

DensityState init_density(int c, std::int64_t initial_capital,
                          std::int64_t steps_budget) {
  if (c != 0 && c != 1) throw std::invalid_argument("init_density: c not a bit");
  if (steps_budget < 0) throw std::invalid_argument("init_density: budget < 0");
  DensityState rho(std::abs(initial_capital) + steps_budget, initial_capital);
  Matrix2 projector;
  projector.m.fill(Complex{0.0});
  projector(c, c) = 1.0;
  rho.set_block(initial_capital, initial_capital, projector);
  return rho;
}

namespace {

// Square w x w grid of 2x2 blocks stored contiguously, row-major.
using BlockGrid = std::vector<Complex>;

// out_rs = (in_sr)^dagger
BlockGrid adjoint(const BlockGrid& in, std::size_t w) {
  BlockGrid out(in.size());
  for (std::size_t r = 0; r < w; ++r) {
    for (std::size_t s = 0; s < w; ++s) {
      const Complex* src = &in[4 * (s * w + r)];
      Complex* dst = &out[4 * (r * w + s)];
      dst[0] = std::conj(src[0]);
      dst[1] = std::conj(src[2]);
      dst[2] = std::conj(src[1]);
      dst[3] = std::conj(src[3]);
    }
  }
  return out;
}

// Row r of the grid multiplied on the left by the coin at capital low + r.
template <typename CoinAt>
void left_multiply_rows(BlockGrid& grid, std::size_t w, std::int64_t low,
                        CoinAt coin_at) {
  const auto& k = kernels::active();
  for (std::size_t r = 0; r < w; ++r) {
    k.left_multiply_blocks(std::span<Complex>(grid).subspan(4 * r * w, 4 * w),
                           coin_at(low + static_cast<std::int64_t>(r)));
  }
}

// K rho K^dagger for a block-diagonal K, via K (K rho^dagger)^dagger.
template <typename CoinAt>
BlockGrid sandwich(const BlockGrid& rho_adjoint, std::size_t w,
                   std::int64_t low, CoinAt coin_at) {
  BlockGrid work = rho_adjoint;
  left_multiply_rows(work, w, low, coin_at);
  work = adjoint(work, w);
  left_multiply_rows(work, w, low, coin_at);
  return work;
}

}  // namespace

void step_density(DensityState& rho, const CoinSet& coins) {
  if (rho.empty_window()) {
    ++rho.step_;
    return;
  }
  const std::int64_t low = rho.low_;
  const auto w = static_cast<std::size_t>(rho.high_ - rho.low_ + 1);

  BlockGrid current(4 * w * w);
  for (std::size_t r = 0; r < w; ++r) {
    const auto base = rho.offset(low + static_cast<std::int64_t>(r), low);
    std::copy_n(rho.blocks_.begin() + static_cast<std::ptrdiff_t>(base), 4 * w,
                current.begin() + static_cast<std::ptrdiff_t>(4 * r * w));
  }
  const BlockGrid current_adjoint = adjoint(current, w);

  const Matrix2& a = coins.a.matrix();
  const Matrix2& b0 = coins.b0.matrix();
  const Matrix2& b1 = coins.b1.matrix();
  BlockGrid mixed = sandwich(current_adjoint, w, low,
                             [&a](std::int64_t) -> const Matrix2& { return a; });
  const BlockGrid b_term =
      sandwich(current_adjoint, w, low, [&](std::int64_t x) -> const Matrix2& {
        return divisible_by_3(x) ? b0 : b1;
      });
  kernels::active().axpby(mixed, b_term, 0.5, 0.5);

  // S rho S^dagger moves entry (j, k) of block (x, y) to block
  // (x + s_j, y + s_k), s_0 = -1, s_1 = +1.
  const std::int64_t edge = rho.half_width_;
  const std::int64_t new_low = std::max(low - 1, -edge);
  const std::int64_t new_high = std::min(rho.high_ + 1, edge);
  for (std::int64_t x = std::max(low, new_low); x <= rho.high_; ++x) {
    std::fill_n(rho.blocks_.begin() +
                    static_cast<std::ptrdiff_t>(rho.offset(x, low)),
                4 * w, Complex{0.0});
  }
  for (std::size_t r = 0; r < w; ++r) {
    for (std::size_t s = 0; s < w; ++s) {
      const Complex* src = &mixed[4 * (r * w + s)];
      for (int j = 0; j < 2; ++j) {
        for (int k = 0; k < 2; ++k) {
          const Complex value = src[2 * j + k];
          const std::int64_t x = low + static_cast<std::int64_t>(r) + chirality_step(j);
          const std::int64_t y = low + static_cast<std::int64_t>(s) + chirality_step(k);
          if (x < -edge || x > edge || y < -edge || y > edge) {
            if (value != Complex{0.0}) {
              throw LatticeExhausted("step_density: weight leaves the lattice");
            }
            continue;
          }
          rho.blocks_[rho.offset(x, y) + static_cast<std::size_t>(2 * j + k)] =
              value;
        }
      }
    }
  }
  rho.low_ = new_low;
  rho.high_ = new_high;
  ++rho.step_;
}

double expected_capital_density(const DensityState& rho) {
  double sum = 0.0;
  for (std::int64_t x = rho.window_low(); x <= rho.window_high(); ++x) {
    sum += static_cast<double>(x) * rho.population(x);
  }
  return sum;
}

double second_moment_density(const DensityState& rho) {
  double sum = 0.0;
  for (std::int64_t x = rho.window_low(); x <= rho.window_high(); ++x) {
    const auto xd = static_cast<double>(x);
    sum += xd * xd * rho.population(x);
  }
  return sum;
}

namespace {

Matrix2 conjugate_by_not(const Matrix2& b) {
  const Matrix2& x = not_gate().matrix();
  return x * b * x;
}

}  // namespace

DensityState swap_conjugate(const DensityState& rho) {
  DensityState out(rho.half_width(), rho.empty_window() ? 0 : rho.window_low());
  for (std::int64_t x = rho.window_low(); x <= rho.window_high(); ++x) {
    for (std::int64_t y = rho.window_low(); y <= rho.window_high(); ++y) {
      out.set_block(x, y, conjugate_by_not(rho.block(x, y)));
    }
  }
  return out;
}

DensityState mirror_conjugate(const DensityState& rho) {
  DensityState out(rho.half_width(), rho.empty_window() ? 0 : -rho.window_high());
  for (std::int64_t x = rho.window_low(); x <= rho.window_high(); ++x) {
    for (std::int64_t y = rho.window_low(); y <= rho.window_high(); ++y) {
      out.set_block(-x, -y, conjugate_by_not(rho.block(x, y)));
    }
  }
  return out;
}

CapitalSeries run_density(const CoinSet& coins, int c, std::int64_t steps,
                          std::int64_t budget, const DensityObserver& observer) {
  if (steps < 0) throw std::invalid_argument("run_density: steps < 0");
  if (steps > budget) {
    throw std::invalid_argument("run_density: " + std::to_string(steps) +
                                " steps exceed the density budget of " +
                                std::to_string(budget));
  }
  DensityState rho = init_density(c, 0, steps);
  CapitalSeries series;
  auto record = [&] {
    series.append({rho.step(), expected_capital_density(rho),
                   second_moment_density(rho)});
    if (observer) observer(rho);
  };
  record();
  for (std::int64_t n = 0; n < steps; ++n) {
    step_density(rho, coins);
    record();
  }
  return series;
}

SampledPath sample_unitary_trajectory(const CoinSet& coins, int c,
                                      std::int64_t steps, std::uint64_t seed) {
  if (steps < 0) throw std::invalid_argument("sample_unitary_trajectory: steps");
  Rng rng(seed);
  ChiralState state = ChiralState::basis(c, 0, steps);
  SampledPath path;
  auto record = [&] {
    const auto m = state.moments();
    path.capital.push_back(m.first);
    path.second_moment.push_back(m.second);
  };
  record();
  for (std::int64_t n = 0; n < steps; ++n) {
    const Strategy strategy = rng.bernoulli(0.5) ? Strategy::kA : Strategy::kB;
    path.strategies.push_back(strategy);
    state.apply_strategy(strategy, coins);
    state.shift();
    record();
  }
  return path;
}

ChiralState evolve_sequence(const CoinSet& coins, int c,
                            const std::vector<Strategy>& sequence) {
  ChiralState state =
      ChiralState::basis(c, 0, static_cast<std::int64_t>(sequence.size()));
  for (Strategy strategy : sequence) {
    state.apply_strategy(strategy, coins);
    state.shift();
  }
  return state;
}

}  // namespace parrondo::cpmap
