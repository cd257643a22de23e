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

#ifndef PARRONDO_CORE_MATH_HPP_
#define PARRONDO_CORE_MATH_HPP_

#include <array>
#include <complex>
#include <cstddef>
#include <numbers>

namespace parrondo {

using Complex = std::complex<double>;

// Exact-algebra identities (unitarity, conservation laws).
inline constexpr double kExactTolerance = 1e-12;
// Agreement between two independent numerical routes.
inline constexpr double kCrossMethodTolerance = 1e-8;

inline constexpr Complex kI{0.0, 1.0};
inline constexpr double kPi = std::numbers::pi;

// Row-major dense 2x2 complex matrix.
struct Matrix2 {
  std::array<Complex, 4> m{Complex{1.0}, Complex{0.0}, Complex{0.0},
                           Complex{1.0}};

  static constexpr Matrix2 identity() { return Matrix2{}; }

  constexpr Complex& operator()(int r, int c) { return m[2 * r + c]; }
  constexpr const Complex& operator()(int r, int c) const {
    return m[2 * r + c];
  }

  Matrix2 adjoint() const;
  Matrix2 conjugate() const;
  Complex determinant() const;
};

Matrix2 operator*(const Matrix2& lhs, const Matrix2& rhs);
Matrix2 operator*(double scale, const Matrix2& rhs);
Matrix2 operator+(const Matrix2& lhs, const Matrix2& rhs);
Matrix2 operator-(const Matrix2& lhs, const Matrix2& rhs);

using Vector2 = std::array<Complex, 2>;
Vector2 operator*(const Matrix2& lhs, const Vector2& rhs);

// Largest entrywise modulus of lhs - rhs.
double max_abs_diff(const Matrix2& lhs, const Matrix2& rhs);

// True when G^dagger G = I entrywise within tol.
bool is_unitary(const Matrix2& g, double tol = kExactTolerance);

// SU(2) angles: theta in [0, pi], alpha and beta in [-pi, pi].
struct SU2Params {
  double theta = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
};

// Throws std::domain_error when an angle is out of range or not finite.
void validate(const SU2Params& params);

// A 2x2 unitary. Only constructible through the factories below, so every
// instance satisfies G^dagger G = I.
class Unitary2 {
 public:
  Unitary2() = default;

  // Throws std::domain_error if the matrix is not unitary within tol.
  static Unitary2 from_matrix(const Matrix2& matrix,
                              double tol = kExactTolerance);

  const Matrix2& matrix() const { return matrix_; }
  const Complex& operator()(int r, int c) const { return matrix_(r, c); }
  Vector2 apply(const Vector2& v) const { return matrix_ * v; }

  friend Unitary2 operator*(const Unitary2& lhs, const Unitary2& rhs) {
    Unitary2 out;
    out.matrix_ = lhs.matrix_ * rhs.matrix_;
    return out;
  }

 private:
  explicit Unitary2(const Matrix2& matrix) : matrix_(matrix) {}
  friend Unitary2 su2(const SU2Params& params);
  friend Unitary2 not_gate();

  Matrix2 matrix_{};
};

//   G(theta, alpha, beta) = [ e^{i alpha} cos(theta/2)   i e^{i beta} sin(theta/2) ]
//                           [ i e^{-i beta} sin(theta/2) e^{-i alpha} cos(theta/2) ]
Unitary2 su2(const SU2Params& params);

// [[0, 1], [1, 0]]
Unitary2 not_gate();

// The strategy coins A, B0 (capital divisible by 3), B1 (otherwise) and the
// strategy-selector unitary U.
struct CoinSet {
  Unitary2 a;
  Unitary2 b0;
  Unitary2 b1;
  Unitary2 u;
};

// Angles of the default coin set: A = G(2(pi/2 - eps)), B0 = G(2(pi/10 - eps)),
// B1 = G(2(3/4 - eps)), U = G(pi/2). The B1 angle carries no factor of pi.
struct CoinAngles {
  SU2Params a;
  SU2Params b0;
  SU2Params b1;
  SU2Params u;
};

CoinAngles default_coin_angles(double epsilon);
CoinSet make_coins(const CoinAngles& angles);
CoinSet default_coins(double epsilon);

}  // namespace parrondo

#endif  // PARRONDO_CORE_MATH_HPP_
