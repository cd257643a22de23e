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

#include "parrondo/quantum_walk.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <utility>

#include "parrondo/errors.hpp"
#include "parrondo/kernels.hpp"
#include "parrondo/lattice.hpp"

namespace parrondo::qwalk {

PureState::PureState(std::int64_t half_width, std::int64_t origin)
    : half_width_(half_width), origin_(origin), low_(origin), high_(origin - 1) {
  if (half_width < 0) throw std::invalid_argument("PureState: half width < 0");
  if (origin < -half_width || origin > half_width) {
    throw std::out_of_range("PureState: origin off lattice");
  }
  for (auto& plane : planes_) plane.assign(sites(), Complex{0.0});
}

Complex PureState::amplitude(int d, int c, int o, std::int64_t x) const {
  if (x < -half_width_ || x > half_width_) return Complex{0.0};
  return planes_[plane_index(d, c, o)][index(x)];
}

void PureState::set_amplitude(int d, int c, int o, std::int64_t x,
                              Complex value) {
  if (x < -half_width_ || x > half_width_) {
    throw std::out_of_range("PureState: site " + std::to_string(x) +
                            " off lattice");
  }
  planes_[plane_index(d, c, o)][index(x)] = value;
  if (empty_window()) {
    low_ = high_ = x;
  } else {
    low_ = std::min(low_, x);
    high_ = std::max(high_, x);
  }
}

std::span<Complex> PureState::window(int plane) {
  if (empty_window()) return {};
  return std::span<Complex>(planes_[plane])
      .subspan(index(low_), static_cast<std::size_t>(high_ - low_ + 1));
}

namespace {

// Site weights are summed over the chirality pair first and the moments over
// mirror pairs (x, -x), so a state and its mirror image give results that
// agree to the last bit whenever their amplitudes do.
kernels::Moments total_moments(const PureState& state) {
  kernels::Moments total;
  if (state.empty_window()) return total;
  const std::int64_t reach =
      std::max(std::abs(state.window_low()), std::abs(state.window_high()));
  auto weight = [&state](std::int64_t x) {
    if (x < state.window_low() || x > state.window_high()) return 0.0;
    double p = 0.0;
    for (int d = 0; d < 2; ++d) {
      for (int o = 0; o < 2; ++o) {
        p += std::norm(state.amplitude(d, 0, o, x)) +
             std::norm(state.amplitude(d, 1, o, x));
      }
    }
    return p;
  };
  total.norm = weight(0);
  for (std::int64_t x = 1; x <= reach; ++x) {
    const double right = weight(x);
    const double left = weight(-x);
    const auto dx = static_cast<double>(x);
    total.norm += right + left;
    total.first += dx * (right - left);
    total.second += dx * dx * (right + left);
  }
  return total;
}

}  // namespace

double PureState::norm() const { return total_moments(*this).norm; }

double PureState::flag_weight() const {
  double sum = 0.0;
  for (int d = 0; d < 2; ++d) {
    for (int c = 0; c < 2; ++c) {
      for (const Complex& z : plane(d, c, 1)) sum += std::norm(z);
    }
  }
  return sum;
}

std::vector<double> PureState::position_distribution() const {
  std::vector<double> out(sites(), 0.0);
  for (const auto& plane : planes_) {
    for (std::size_t i = 0; i < plane.size(); ++i) out[i] += std::norm(plane[i]);
  }
  return out;
}

PureState init_state(int d, int c, std::int64_t initial_capital,
                     std::int64_t steps_budget) {
  if (steps_budget < 0) throw std::invalid_argument("init_state: budget < 0");
  if ((d != 0 && d != 1) || (c != 0 && c != 1)) {
    throw std::invalid_argument("init_state: d and c must be bits");
  }
  PureState state(std::abs(initial_capital) + steps_budget, initial_capital);
  state.set_amplitude(d, c, 0, initial_capital, Complex{1.0});
  return state;
}

void apply_mod(PureState& state) {
  if (state.empty_window()) return;
  for (int p = 0; p < PureState::kPlanes; p += 2) {
    auto& unflagged = state.planes_[p];
    auto& flagged = state.planes_[p + 1];
    for (std::int64_t x = state.low_; x <= state.high_; ++x) {
      if (!divisible_by_3(x)) {
        std::swap(unflagged[state.index(x)], flagged[state.index(x)]);
      }
    }
  }
}

void apply_w(PureState& state, const CoinSet& coins) {
  if (state.empty_window()) return;
  const auto& k = kernels::active();
  auto w = [&state](int d, int c, int o) {
    return state.window(PureState::plane_index(d, c, o));
  };
  // U on D.
  for (int c = 0; c < 2; ++c) {
    for (int o = 0; o < 2; ++o) k.apply_pair(w(0, c, o), w(1, c, o), coins.u.matrix());
  }
  // D = 0 after U: coin A on C. D = 1: B0 when o = 0, B1 when o = 1.
  for (int o = 0; o < 2; ++o) k.apply_pair(w(0, 0, o), w(0, 1, o), coins.a.matrix());
  k.apply_pair(w(1, 0, 0), w(1, 1, 0), coins.b0.matrix());
  k.apply_pair(w(1, 0, 1), w(1, 1, 1), coins.b1.matrix());
  // Both branches flip D (|1><0| and |0><1|) and O (X and the o-projectors).
  for (int c = 0; c < 2; ++c) {
    std::swap(state.planes_[PureState::plane_index(0, c, 0)],
              state.planes_[PureState::plane_index(1, c, 1)]);
    std::swap(state.planes_[PureState::plane_index(0, c, 1)],
              state.planes_[PureState::plane_index(1, c, 0)]);
  }
}

void apply_shift(PureState& state) {
  if (state.empty_window()) return;
  const std::int64_t edge = state.half_width_;
  for (int p = 0; p < PureState::kPlanes; ++p) {
    const int c = (p / 2) % 2;
    auto& plane = state.planes_[p];
    if (c == 0) {
      if (state.low_ == -edge && plane[state.index(-edge)] != Complex{0.0}) {
        throw LatticeExhausted("apply_shift: amplitude at x = " +
                               std::to_string(-edge) + " cannot move left");
      }
      for (std::int64_t x = std::max(state.low_, -edge + 1); x <= state.high_; ++x) {
        plane[state.index(x - 1)] = plane[state.index(x)];
      }
      plane[state.index(state.high_)] = Complex{0.0};
    } else {
      if (state.high_ == edge && plane[state.index(edge)] != Complex{0.0}) {
        throw LatticeExhausted("apply_shift: amplitude at x = " +
                               std::to_string(edge) + " cannot move right");
      }
      for (std::int64_t x = std::min(state.high_, edge - 1); x >= state.low_; --x) {
        plane[state.index(x + 1)] = plane[state.index(x)];
      }
      plane[state.index(state.low_)] = Complex{0.0};
    }
  }
  state.low_ = std::max(state.low_ - 1, -edge);
  state.high_ = std::min(state.high_ + 1, edge);
}

void apply_mod_inv(PureState& state) {
  if (state.empty_window()) return;
  for (int d = 0; d < 2; ++d) {
    for (int c = 0; c < 2; ++c) {
      auto& unflagged = state.planes_[PureState::plane_index(d, c, 0)];
      auto& flagged = state.planes_[PureState::plane_index(d, c, 1)];
      for (std::int64_t x = state.low_; x <= state.high_; ++x) {
        if (divisible_by_3(x - chirality_step(c))) {
          std::swap(unflagged[state.index(x)], flagged[state.index(x)]);
        }
      }
    }
  }
}

void step(PureState& state, const CoinSet& coins) {
  apply_mod(state);
  apply_w(state, coins);
  apply_shift(state);
  apply_mod_inv(state);
  ++state.step_;
}

double expected_capital(const PureState& state) {
  return total_moments(state).first;
}

double second_moment(const PureState& state) {
  return total_moments(state).second;
}

CapitalSeries run(const CoinSet& coins, int d, int c, std::int64_t steps,
                  const StepObserver& observer) {
  if (steps < 0) throw std::invalid_argument("run: steps < 0");
  PureState state = init_state(d, c, 0, steps);
  CapitalSeries series;
  auto record = [&] {
    const auto m = total_moments(state);
    series.append({state.step(), m.first, m.second});
    if (observer) observer(state);
  };
  record();
  for (std::int64_t n = 0; n < steps; ++n) {
    step(state, coins);
    record();
  }
  return series;
}

std::vector<PositionRow> position_rows(const PureState& state) {
  std::vector<PositionRow> rows;
  if (state.empty_window()) return rows;
  const auto dist = state.position_distribution();
  for (std::int64_t x = state.window_low(); x <= state.window_high(); ++x) {
    rows.push_back({state.step(), x,
                    dist[static_cast<std::size_t>(x + state.half_width())]});
  }
  return rows;
}

}  // namespace parrondo::qwalk
