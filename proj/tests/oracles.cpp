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

#include "oracles.hpp"

#include <cmath>

namespace parrondo::oracle {

DenseMatrix multiply(const DenseMatrix& lhs, const DenseMatrix& rhs) {
  DenseMatrix out(lhs.rows, rhs.cols);
  for (std::size_t i = 0; i < lhs.rows; ++i) {
    for (std::size_t k = 0; k < lhs.cols; ++k) {
      const Complex a = lhs(i, k);
      if (a == Complex{0.0}) continue;
      for (std::size_t j = 0; j < rhs.cols; ++j) out(i, j) += a * rhs(k, j);
    }
  }
  return out;
}

DenseMatrix adjoint(const DenseMatrix& m) {
  DenseMatrix out(m.cols, m.rows);
  for (std::size_t i = 0; i < m.rows; ++i) {
    for (std::size_t j = 0; j < m.cols; ++j) out(j, i) = std::conj(m(i, j));
  }
  return out;
}

namespace {

std::size_t dim(std::int64_t half_width) {
  return static_cast<std::size_t>(2 * (2 * half_width + 1));
}

std::size_t basis(std::int64_t x, int c, std::int64_t half_width) {
  return static_cast<std::size_t>(2 * (x + half_width) + c);
}

}  // namespace

DenseMatrix coin_everywhere(const Matrix2& coin, std::int64_t half_width) {
  return capital_coins(coin, coin, half_width);
}

DenseMatrix capital_coins(const Matrix2& b0, const Matrix2& b1,
                          std::int64_t half_width) {
  DenseMatrix out(dim(half_width), dim(half_width));
  for (std::int64_t x = -half_width; x <= half_width; ++x) {
    const bool multiple = ((x % 3) + 3) % 3 == 0;
    const Matrix2& b = multiple ? b0 : b1;
    for (int r = 0; r < 2; ++r) {
      for (int c = 0; c < 2; ++c) {
        out(basis(x, r, half_width), basis(x, c, half_width)) = b(r, c);
      }
    }
  }
  return out;
}

DenseMatrix conditional_shift(std::int64_t half_width) {
  DenseMatrix out(dim(half_width), dim(half_width));
  for (std::int64_t x = -half_width; x <= half_width; ++x) {
    for (int c = 0; c < 2; ++c) {
      const std::int64_t target = c == 0 ? x - 1 : x + 1;
      if (target < -half_width || target > half_width) continue;
      out(basis(target, c, half_width), basis(x, c, half_width)) = 1.0;
    }
  }
  return out;
}

DenseMatrix kraus_step(const DenseMatrix& rho, const CoinSet& coins,
                       std::int64_t half_width) {
  const DenseMatrix shift = conditional_shift(half_width);
  const double root_half = std::sqrt(0.5);
  DenseMatrix out(rho.rows, rho.cols);
  for (const DenseMatrix& coin :
       {coin_everywhere(coins.a.matrix(), half_width),
        capital_coins(coins.b0.matrix(), coins.b1.matrix(), half_width)}) {
    DenseMatrix kraus = multiply(shift, coin);
    for (auto& z : kraus.data) z *= root_half;
    const DenseMatrix term = multiply(multiply(kraus, rho), adjoint(kraus));
    for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] += term.data[i];
  }
  return out;
}

std::array<double, 3> stationary_by_power_iteration(double p0, double p1,
                                                    int iterations) {
  const std::array<double, 3> win{p0, p1, p1};
  std::array<double, 3> pi{1.0 / 3, 1.0 / 3, 1.0 / 3};
  for (int it = 0; it < iterations; ++it) {
    std::array<double, 3> next{};
    for (int i = 0; i < 3; ++i) {
      next[i] += 0.5 * pi[i];
      next[(i + 1) % 3] += 0.5 * pi[i] * win[i];
      next[(i + 2) % 3] += 0.5 * pi[i] * (1.0 - win[i]);
    }
    pi = next;
  }
  return pi;
}

}  // namespace parrondo::oracle
