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

// Momentum-space propagator for the quantum Parrondo walk.
//
// The step operator commutes with translations by three sites, so the Bloch
// states |chi>|phi_k^j> with phi_k^j = sum_{x = j mod 3} e^{ikx}|x> span a
// 12-dimensional invariant fiber for each quasi-momentum k (3 residue classes
// times H_D (x) H_C). Position amplitudes follow by a discrete inverse
// transform over a grid of K momenta.

#ifndef PARRONDO_KSPACE_ORACLE_HPP_
#define PARRONDO_KSPACE_ORACLE_HPP_

#include <array>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "parrondo/core_math.hpp"

namespace parrondo::kspace {

inline constexpr int kFiberDim = 12;

// Index of residue class j and register pair (d, c) inside a fiber vector.
constexpr int fiber_index(int residue, int d, int c) {
  return residue * 4 + d * 2 + c;
}

using FiberVector = std::array<Complex, kFiberDim>;
// Amplitudes of the (d, c) basis states at one capital site.
using SiteAmplitudes = std::array<Complex, 4>;

// k_m = -pi + 2 pi m / K for m = 0..K-1.
class KGrid {
 public:
  explicit KGrid(int size);
  // Smallest odd K >= 2 steps + 3.
  static KGrid for_steps(std::int64_t steps);

  int size() const { return static_cast<int>(points_.size()); }
  double operator[](int m) const { return points_[static_cast<std::size_t>(m)]; }
  std::span<const double> points() const { return points_; }

  // True when K >= 2 steps + 3.
  bool supports(std::int64_t steps) const;

 private:
  std::vector<double> points_;
};

// One game step restricted to the fiber at momentum k. Row block i, column
// block j maps residue class j to class i.
class BlockMatrix12 {
 public:
  Complex& operator()(int row, int col) { return m_[row * kFiberDim + col]; }
  const Complex& operator()(int row, int col) const {
    return m_[row * kFiberDim + col];
  }

  FiberVector apply(const FiberVector& v) const;
  // max |(M^dagger M - I)_{ij}|
  double unitarity_error() const;
  // Largest entry modulus of the 4x4 block (to_class, from_class).
  double block_magnitude(int to_class, int from_class) const;

 private:
  std::array<Complex, kFiberDim * kFiberDim> m_{};
};

// Built by stepping each Bloch basis vector through the position-space
// simulator and reading the coefficients back off one period.
BlockMatrix12 build_block_matrix(double k, const CoinSet& coins);

std::vector<BlockMatrix12> build_block_matrices(const KGrid& grid,
                                                const CoinSet& coins);

// Fiber vectors nu_j(k_m) for every grid point. support_radius bounds |x| of
// the represented position-space state.
struct KSpaceState {
  std::int64_t step = 0;
  std::int64_t support_radius = 0;
  std::vector<FiberVector> fibers;
};

// nu_j = |d>|c> for every class j: the transform of |d, c, x = 0>.
KSpaceState initial_state(int d, int c, const KGrid& grid);

// nu_j(k) = sum_{x = j mod 3} e^{-ikx} psi(x) for a finite position state.
KSpaceState transform_positions(
    std::span<const std::pair<std::int64_t, SiteAmplitudes>> sites,
    const KGrid& grid);

// One step on every fiber.
void evolve_one_step(KSpaceState& state, std::span<const BlockMatrix12> matrices);

// Throws std::invalid_argument unless grid.supports(steps).
KSpaceState propagate(const CoinSet& coins, int d, int c, std::int64_t steps,
                      const KGrid& grid);

// psi(x) = (1/K) sum_m e^{i k_m x} nu_{x mod 3}(k_m) for x in [x_low, x_high].
// Throws ReconstructionRange when |x| + support_radius >= K.
std::vector<SiteAmplitudes> reconstruct_positions(const KSpaceState& state,
                                                  const KGrid& grid,
                                                  std::int64_t x_low,
                                                  std::int64_t x_high);

// P(x) on [-step, step] from the reconstruction.
std::vector<double> position_distribution(const KSpaceState& state,
                                          const KGrid& grid);

double capital_via_kspace(const CoinSet& coins, int d, int c,
                          std::int64_t steps, const KGrid& grid);

}  // namespace parrondo::kspace

#endif  // PARRONDO_KSPACE_ORACLE_HPP_
