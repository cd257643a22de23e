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

#include "parrondo/kernels.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "parrondo/cpmap_game.hpp"
#include "parrondo/quantum_walk.hpp"

namespace parrondo::kernels {
namespace {

std::vector<Complex> RandomVector(std::size_t n, std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  std::vector<Complex> out(n);
  for (auto& z : out) z = {normal(gen), normal(gen)};
  return out;
}

Matrix2 RandomMatrix(std::mt19937_64& gen) {
  std::normal_distribution<double> normal;
  Matrix2 m;
  for (auto& z : m.m) z = {normal(gen), normal(gen)};
  return m;
}

double MaxDiff(const std::vector<Complex>& a, const std::vector<Complex>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

class KernelEquivalenceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    if (!isa_available(Isa::kAvx2)) GTEST_SKIP() << "AVX2 not available";
  }
  const KernelTable& scalar() { return scalar_table(); }
  const KernelTable& simd() { return table(Isa::kAvx2); }
};

// Lengths 0..40 exercise the vector body and every scalar tail.
TEST_F(KernelEquivalenceTest, ApplyPair) {
  std::mt19937_64 gen(1);
  for (std::size_t n = 0; n <= 40; ++n) {
    const Matrix2 m = RandomMatrix(gen);
    auto a1 = RandomVector(n, gen);
    auto b1 = RandomVector(n, gen);
    auto a2 = a1;
    auto b2 = b1;
    scalar().apply_pair(a1, b1, m);
    simd().apply_pair(a2, b2, m);
    EXPECT_LT(MaxDiff(a1, a2), 1e-14) << "n = " << n;
    EXPECT_LT(MaxDiff(b1, b2), 1e-14) << "n = " << n;
  }
}

TEST_F(KernelEquivalenceTest, LeftMultiplyBlocks) {
  std::mt19937_64 gen(2);
  for (std::size_t blocks = 0; blocks <= 17; ++blocks) {
    const Matrix2 m = RandomMatrix(gen);
    auto v1 = RandomVector(4 * blocks, gen);
    auto v2 = v1;
    scalar().left_multiply_blocks(v1, m);
    simd().left_multiply_blocks(v2, m);
    EXPECT_LT(MaxDiff(v1, v2), 1e-14) << "blocks = " << blocks;
  }
}

TEST_F(KernelEquivalenceTest, Moments) {
  std::mt19937_64 gen(3);
  for (std::size_t n = 0; n <= 41; ++n) {
    const auto v = RandomVector(n, gen);
    const double x0 = -static_cast<double>(n) / 2.0;
    const Moments s = scalar().moments(v, x0);
    const Moments a = simd().moments(v, x0);
    const double scale = 1.0 + s.second;
    EXPECT_NEAR(s.norm, a.norm, 1e-13 * scale);
    EXPECT_NEAR(s.first, a.first, 1e-13 * scale);
    EXPECT_NEAR(s.second, a.second, 1e-13 * scale);
  }
}

TEST_F(KernelEquivalenceTest, Axpby) {
  std::mt19937_64 gen(4);
  for (std::size_t n = 0; n <= 21; ++n) {
    auto out1 = RandomVector(n, gen);
    const auto in = RandomVector(n, gen);
    auto out2 = out1;
    scalar().axpby(out1, in, 0.5, -1.25);
    simd().axpby(out2, in, 0.5, -1.25);
    EXPECT_LT(MaxDiff(out1, out2), 1e-14);
  }
}

TEST(KernelScalarTest, ApplyPairMatchesHandComputation) {
  std::vector<Complex> a{{1.0, 0.0}};
  std::vector<Complex> b{{0.0, 1.0}};
  Matrix2 m;
  m.m = {Complex{2.0}, Complex{0.0, 1.0}, Complex{1.0}, Complex{-1.0}};
  scalar_table().apply_pair(a, b, m);
  EXPECT_EQ(a[0], Complex(1.0, 0.0));   // 2 + i * i
  EXPECT_EQ(b[0], Complex(1.0, -1.0));  // 1 - i
}

TEST(KernelScalarTest, MomentsOfPointMass) {
  std::vector<Complex> v{{0.0, 0.0}, {0.6, 0.8}, {0.0, 0.0}};
  const Moments m = scalar_table().moments(v, -3.0);
  EXPECT_DOUBLE_EQ(m.norm, 1.0);
  EXPECT_DOUBLE_EQ(m.first, -2.0);
  EXPECT_DOUBLE_EQ(m.second, 4.0);
}

TEST(KernelDispatchTest, ScalarAlwaysAvailableAndSelectable) {
  EXPECT_TRUE(isa_available(Isa::kScalar));
  const Isa before = active_isa();
  set_active_isa(Isa::kScalar);
  EXPECT_EQ(active_isa(), Isa::kScalar);
  set_active_isa(before);
}

// Whole simulators under each kernel set.
class SimulatorEquivalenceTest : public KernelEquivalenceTest {
 protected:
  void TearDown() override { set_active_isa(saved_); }
  Isa saved_ = active_isa();
};

TEST_F(SimulatorEquivalenceTest, QuantumWalkSeries) {
  const CoinSet coins = default_coins(0.01);
  set_active_isa(Isa::kScalar);
  const CapitalSeries reference = qwalk::run(coins, 0, 1, 300);
  set_active_isa(Isa::kAvx2);
  const CapitalSeries vectorised = qwalk::run(coins, 0, 1, 300);
  for (std::size_t n = 0; n < reference.size(); ++n) {
    EXPECT_NEAR(reference[n].expected_capital, vectorised[n].expected_capital,
                1e-11);
    EXPECT_NEAR(reference[n].second_moment, vectorised[n].second_moment,
                1e-9);
  }
}

TEST_F(SimulatorEquivalenceTest, DensitySeries) {
  const CoinSet coins = default_coins(0.01);
  set_active_isa(Isa::kScalar);
  const CapitalSeries reference = cpmap::run_density(coins, 0, 40);
  set_active_isa(Isa::kAvx2);
  const CapitalSeries vectorised = cpmap::run_density(coins, 0, 40);
  for (std::size_t n = 0; n < reference.size(); ++n) {
    EXPECT_NEAR(reference[n].expected_capital, vectorised[n].expected_capital,
                1e-12);
    EXPECT_NEAR(reference[n].second_moment, vectorised[n].second_moment,
                1e-11);
  }
}

}  // namespace
}  // namespace parrondo::kernels
