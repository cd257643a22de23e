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

// Data-parallel inner loops shared by the simulators. Each kernel has a
// portable scalar reference and, on x86-64, an AVX2/FMA variant. The active
// variant is chosen once at startup from CPU capabilities and may be forced
// with the environment variable PARRONDO_SIMD=scalar|avx2.

#ifndef PARRONDO_KERNELS_HPP_
#define PARRONDO_KERNELS_HPP_

#include <cstddef>
#include <span>
#include <string_view>

#include "parrondo/core_math.hpp"

namespace parrondo::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view isa_name(Isa isa);

// Probability-weighted sums over a run of lattice sites x0, x0 + 1, ...
struct Moments {
  double norm = 0.0;    // sum |a|^2
  double first = 0.0;   // sum x |a|^2
  double second = 0.0;  // sum x^2 |a|^2

  Moments& operator+=(const Moments& other) {
    norm += other.norm;
    first += other.first;
    second += other.second;
    return *this;
  }
};

struct KernelTable {
  // (a_i, b_i) <- m * (a_i, b_i) for i < a.size(). Spans must be equal length.
  void (*apply_pair)(std::span<Complex> a, std::span<Complex> b,
                     const Matrix2& m);
  // Each consecutive group of four values is a row-major 2x2 block; every
  // block is replaced by m * block.
  void (*left_multiply_blocks)(std::span<Complex> blocks, const Matrix2& m);
  // Moments of amps where amps[i] sits at lattice site x0 + i.
  Moments (*moments)(std::span<const Complex> amps, double x0);
  // out <- alpha * out + beta * in
  void (*axpby)(std::span<Complex> out, std::span<const Complex> in,
                double alpha, double beta);
};

const KernelTable& scalar_table();
// Null when the variant was not compiled in.
const KernelTable* avx2_table();

bool isa_available(Isa isa);
const KernelTable& table(Isa isa);

Isa active_isa();
const KernelTable& active();

// Overrides the runtime choice (tests, benchmarks). Throws
// std::invalid_argument if the ISA is unavailable.
void set_active_isa(Isa isa);

}  // namespace parrondo::kernels

#endif  // PARRONDO_KERNELS_HPP_
