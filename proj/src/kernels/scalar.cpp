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

#include <cassert>

#include "parrondo/kernels.hpp"

namespace parrondo::kernels {
namespace {

void apply_pair(std::span<Complex> a, std::span<Complex> b, const Matrix2& m) {
  assert(a.size() == b.size());
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Complex x = a[i];
    const Complex y = b[i];
    a[i] = m00 * x + m01 * y;
    b[i] = m10 * x + m11 * y;
  }
}

void left_multiply_blocks(std::span<Complex> blocks, const Matrix2& m) {
  assert(blocks.size() % 4 == 0);
  const Complex m00 = m(0, 0), m01 = m(0, 1), m10 = m(1, 0), m11 = m(1, 1);
  for (std::size_t i = 0; i < blocks.size(); i += 4) {
    for (std::size_t col = 0; col < 2; ++col) {
      const Complex top = blocks[i + col];
      const Complex bottom = blocks[i + 2 + col];
      blocks[i + col] = m00 * top + m01 * bottom;
      blocks[i + 2 + col] = m10 * top + m11 * bottom;
    }
  }
}

Moments moments(std::span<const Complex> amps, double x0) {
  Moments out;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const double p = std::norm(amps[i]);
    const double x = x0 + static_cast<double>(i);
    out.norm += p;
    out.first += x * p;
    out.second += x * x * p;
  }
  return out;
}

void axpby(std::span<Complex> out, std::span<const Complex> in, double alpha,
           double beta) {
  assert(out.size() == in.size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = alpha * out[i] + beta * in[i];
  }
}

constexpr KernelTable kScalarTable{apply_pair, left_multiply_blocks, moments,
                                   axpby};

}  // namespace

const KernelTable& scalar_table() { return kScalarTable; }

}  // namespace parrondo::kernels
