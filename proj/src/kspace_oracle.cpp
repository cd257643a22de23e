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

#include "parrondo/kspace_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "parrondo/errors.hpp"
#include "parrondo/lattice.hpp"
#include "parrondo/quantum_walk.hpp"

namespace parrondo::kspace {

KGrid::KGrid(int size) {
  if (size < 1) throw std::invalid_argument("KGrid: size must be positive");
  points_.resize(static_cast<std::size_t>(size));
  for (int m = 0; m < size; ++m) {
    points_[static_cast<std::size_t>(m)] = -kPi + 2.0 * kPi * m / size;
  }
}

KGrid KGrid::for_steps(std::int64_t steps) {
  if (steps < 0) throw std::invalid_argument("KGrid: steps < 0");
  auto size = 2 * steps + 3;
  if (size % 2 == 0) ++size;
  return KGrid(static_cast<int>(size));
}

bool KGrid::supports(std::int64_t steps) const {
  return size() >= 2 * steps + 3;
}

FiberVector BlockMatrix12::apply(const FiberVector& v) const {
  FiberVector out{};
  for (int r = 0; r < kFiberDim; ++r) {
    Complex sum{0.0};
    for (int c = 0; c < kFiberDim; ++c) sum += (*this)(r, c) * v[c];
    out[r] = sum;
  }
  return out;
}

double BlockMatrix12::unitarity_error() const {
  double worst = 0.0;
  for (int i = 0; i < kFiberDim; ++i) {
    for (int j = 0; j < kFiberDim; ++j) {
      Complex sum{0.0};
      for (int r = 0; r < kFiberDim; ++r) {
        sum += std::conj((*this)(r, i)) * (*this)(r, j);
      }
      if (i == j) sum -= 1.0;
      worst = std::max(worst, std::abs(sum));
    }
  }
  return worst;
}

double BlockMatrix12::block_magnitude(int to_class, int from_class) const {
  double worst = 0.0;
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) {
      worst = std::max(worst, std::abs((*this)(to_class * 4 + r,
                                               from_class * 4 + c)));
    }
  }
  return worst;
}

BlockMatrix12 build_block_matrix(double k, const CoinSet& coins) {
  if (!(k >= -kPi && k <= kPi)) {
    throw std::domain_error("build_block_matrix: k outside [-pi, pi]");
  }
  // Sites 0, 1, 2 read one period of the output; they are fed from x +- 1,
  // so sources on [-3, 5] cover every contribution.
  constexpr std::int64_t kHalfWidth = 8;
  BlockMatrix12 matrix;
  for (int j = 0; j < 3; ++j) {
    for (int d = 0; d < 2; ++d) {
      for (int c = 0; c < 2; ++c) {
        qwalk::PureState state(kHalfWidth, 0);
        for (std::int64_t x = -3; x <= 5; ++x) {
          if (residue3(x) == j) {
            state.set_amplitude(d, c, 0, x, std::polar(1.0, k * x));
          }
        }
        qwalk::step(state, coins);
        const int col = fiber_index(j, d, c);
        for (std::int64_t x = 0; x < 3; ++x) {
          const Complex phase = std::polar(1.0, -k * x);
          for (int d2 = 0; d2 < 2; ++d2) {
            for (int c2 = 0; c2 < 2; ++c2) {
              matrix(fiber_index(static_cast<int>(x), d2, c2), col) =
                  phase * state.amplitude(d2, c2, 0, x);
            }
          }
        }
      }
    }
  }
  return matrix;
}

std::vector<BlockMatrix12> build_block_matrices(const KGrid& grid,
                                                const CoinSet& coins) {
  std::vector<BlockMatrix12> out;
  out.reserve(static_cast<std::size_t>(grid.size()));
  for (double k : grid.points()) out.push_back(build_block_matrix(k, coins));
  return out;
}

KSpaceState initial_state(int d, int c, const KGrid& grid) {
  if ((d != 0 && d != 1) || (c != 0 && c != 1)) {
    throw std::invalid_argument("initial_state: d and c must be bits");
  }
  FiberVector chi{};
  for (int j = 0; j < 3; ++j) chi[fiber_index(j, d, c)] = 1.0;
  KSpaceState state;
  state.fibers.assign(static_cast<std::size_t>(grid.size()), chi);
  return state;
}

KSpaceState transform_positions(
    std::span<const std::pair<std::int64_t, SiteAmplitudes>> sites,
    const KGrid& grid) {
  KSpaceState state;
  state.fibers.assign(static_cast<std::size_t>(grid.size()), FiberVector{});
  for (const auto& [x, amps] : sites) {
    state.support_radius = std::max(state.support_radius, std::abs(x));
    const int j = residue3(x);
    for (int m = 0; m < grid.size(); ++m) {
      const Complex phase = std::polar(1.0, -grid[m] * x);
      for (int b = 0; b < 4; ++b) {
        state.fibers[static_cast<std::size_t>(m)][j * 4 + b] += phase * amps[b];
      }
    }
  }
  return state;
}

void evolve_one_step(KSpaceState& state, std::span<const BlockMatrix12> matrices) {
  if (matrices.size() != state.fibers.size()) {
    throw std::invalid_argument("evolve_one_step: one matrix per grid point required");
  }
  for (std::size_t m = 0; m < matrices.size(); ++m) {
    state.fibers[m] = matrices[m].apply(state.fibers[m]);
  }
  ++state.step;
  ++state.support_radius;
}

KSpaceState propagate(const CoinSet& coins, int d, int c, std::int64_t steps,
                      const KGrid& grid) {
  if (steps < 0 || !grid.supports(steps)) {
    throw std::invalid_argument("propagate: grid of size " +
                                std::to_string(grid.size()) +
                                " cannot resolve " + std::to_string(steps) +
                                " steps");
  }
  const auto matrices = build_block_matrices(grid, coins);
  KSpaceState state = initial_state(d, c, grid);
  for (std::int64_t n = 0; n < steps; ++n) evolve_one_step(state, matrices);
  return state;
}

std::vector<SiteAmplitudes> reconstruct_positions(const KSpaceState& state,
                                                  const KGrid& grid,
                                                  std::int64_t x_low,
                                                  std::int64_t x_high) {
  const auto size = static_cast<std::int64_t>(grid.size());
  if (std::max(std::abs(x_low), std::abs(x_high)) + state.support_radius >=
      size) {
    throw ReconstructionRange("reconstruct_positions: |x| + support radius " +
                              std::string("must stay below the grid size"));
  }
  std::vector<SiteAmplitudes> out;
  if (x_high < x_low) return out;
  out.reserve(static_cast<std::size_t>(x_high - x_low + 1));
  const double scale = 1.0 / static_cast<double>(size);
  for (std::int64_t x = x_low; x <= x_high; ++x) {
    const int j = residue3(x);
    SiteAmplitudes amps{};
    for (int m = 0; m < grid.size(); ++m) {
      const Complex phase = std::polar(1.0, grid[m] * x);
      const auto& fiber = state.fibers[static_cast<std::size_t>(m)];
      for (int b = 0; b < 4; ++b) amps[b] += phase * fiber[j * 4 + b];
    }
    for (auto& a : amps) a *= scale;
    out.push_back(amps);
  }
  return out;
}

std::vector<double> position_distribution(const KSpaceState& state,
                                          const KGrid& grid) {
  const auto amps =
      reconstruct_positions(state, grid, -state.step, state.step);
  std::vector<double> out;
  out.reserve(amps.size());
  for (const auto& site : amps) {
    double p = 0.0;
    for (const auto& a : site) p += std::norm(a);
    out.push_back(p);
  }
  return out;
}

double capital_via_kspace(const CoinSet& coins, int d, int c,
                          std::int64_t steps, const KGrid& grid) {
  const auto state = propagate(coins, d, c, steps, grid);
  const auto dist = position_distribution(state, grid);
  double capital = 0.0;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    capital += static_cast<double>(static_cast<std::int64_t>(i) - steps) * dist[i];
  }
  return capital;
}

}  // namespace parrondo::kspace
