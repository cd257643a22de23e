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

#ifndef PARRONDO_LATTICE_HPP_
#define PARRONDO_LATTICE_HPP_

#include <cstdint>

namespace parrondo {

// Residue of x modulo 3 in {0, 1, 2}, also for negative x.
constexpr int residue3(std::int64_t x) {
  const auto r = static_cast<int>(x % 3);
  return r < 0 ? r + 3 : r;
}

constexpr bool divisible_by_3(std::int64_t x) { return residue3(x) == 0; }

// Capital displacement for chirality c: c = 0 moves left, c = 1 right.
constexpr int chirality_step(int c) { return 2 * c - 1; }

// The two Parrondo strategies: the single coin A, or the capital-dependent
// coins B0/B1.
enum class Strategy : char { kA = 'A', kB = 'B' };

}  // namespace parrondo

#endif  // PARRONDO_LATTICE_HPP_
