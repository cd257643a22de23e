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

#include "parrondo/core_math.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace parrondo {

Matrix2 Matrix2::adjoint() const {
  Matrix2 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) out(r, c) = std::conj((*this)(c, r));
  }
  return out;
}

Matrix2 Matrix2::conjugate() const {
  Matrix2 out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i] = std::conj(m[i]);
  return out;
}

Complex Matrix2::determinant() const {
  return m[0] * m[3] - m[1] * m[2];
}

Matrix2 operator*(const Matrix2& lhs, const Matrix2& rhs) {
  Matrix2 out;
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 2; ++c) {
      out(r, c) = lhs(r, 0) * rhs(0, c) + lhs(r, 1) * rhs(1, c);
    }
  }
  return out;
}

Matrix2 operator*(double scale, const Matrix2& rhs) {
  Matrix2 out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i] = scale * rhs.m[i];
  return out;
}

Matrix2 operator+(const Matrix2& lhs, const Matrix2& rhs) {
  Matrix2 out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i] = lhs.m[i] + rhs.m[i];
  return out;
}

Matrix2 operator-(const Matrix2& lhs, const Matrix2& rhs) {
  Matrix2 out;
  for (std::size_t i = 0; i < 4; ++i) out.m[i] = lhs.m[i] - rhs.m[i];
  return out;
}

Vector2 operator*(const Matrix2& lhs, const Vector2& rhs) {
  return {lhs(0, 0) * rhs[0] + lhs(0, 1) * rhs[1],
          lhs(1, 0) * rhs[0] + lhs(1, 1) * rhs[1]};
}

double max_abs_diff(const Matrix2& lhs, const Matrix2& rhs) {
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(lhs.m[i] - rhs.m[i]));
  }
  return worst;
}

bool is_unitary(const Matrix2& g, double tol) {
  return max_abs_diff(g.adjoint() * g, Matrix2::identity()) <= tol;
}

void validate(const SU2Params& params) {
  auto check = [](double value, double lo, double hi, const char* name) {
    if (!std::isfinite(value) || value < lo || value > hi) {
      throw std::domain_error(std::string("su2: ") + name + " = " +
                              std::to_string(value) + " outside [" +
                              std::to_string(lo) + ", " + std::to_string(hi) +
                              "]");
    }
  };
  check(params.theta, 0.0, kPi, "theta");
  check(params.alpha, -kPi, kPi, "alpha");
  check(params.beta, -kPi, kPi, "beta");
}

Unitary2 Unitary2::from_matrix(const Matrix2& matrix, double tol) {
  for (const auto& z : matrix.m) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw std::domain_error("Unitary2: non-finite entry");
    }
  }
  if (!is_unitary(matrix, tol)) {
    throw std::domain_error("Unitary2: matrix is not unitary");
  }
  return Unitary2(matrix);
}

Unitary2 su2(const SU2Params& params) {
  validate(params);
  const double c = std::cos(params.theta / 2.0);
  const double s = std::sin(params.theta / 2.0);
  const Complex ea = std::polar(1.0, params.alpha);
  const Complex eb = std::polar(1.0, params.beta);
  Matrix2 g;
  g(0, 0) = ea * c;
  g(0, 1) = kI * eb * s;
  g(1, 0) = kI * std::conj(eb) * s;
  g(1, 1) = std::conj(ea) * c;
  return Unitary2(g);
}

Unitary2 not_gate() {
  Matrix2 x;
  x(0, 0) = 0.0;
  x(0, 1) = 1.0;
  x(1, 0) = 1.0;
  x(1, 1) = 0.0;
  return Unitary2(x);
}

CoinAngles default_coin_angles(double epsilon) {
  CoinAngles angles;
  angles.a = {2.0 * (kPi / 2.0 - epsilon), 0.0, 0.0};
  angles.b0 = {2.0 * (kPi / 10.0 - epsilon), 0.0, 0.0};
  angles.b1 = {2.0 * (0.75 - epsilon), 0.0, 0.0};
  angles.u = {kPi / 2.0, 0.0, 0.0};
  return angles;
}

CoinSet make_coins(const CoinAngles& angles) {
  return CoinSet{su2(angles.a), su2(angles.b0), su2(angles.b1), su2(angles.u)};
}

CoinSet default_coins(double epsilon) {
  return make_coins(default_coin_angles(epsilon));
}

}  // namespace parrondo
