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

#include "parrondo/cpmap_game.hpp"

#include <gtest/gtest.h>

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "parrondo/errors.hpp"
#include "parrondo/measurement_game.hpp"

namespace parrondo::cpmap {
namespace {

constexpr double kEps = 0.01;

oracle::DenseMatrix ToDense(const DensityState& rho) {
  const std::int64_t l = rho.half_width();
  const std::size_t dim = static_cast<std::size_t>(2 * (2 * l + 1));
  oracle::DenseMatrix out(dim, dim);
  for (std::int64_t x = -l; x <= l; ++x) {
    for (std::int64_t y = -l; y <= l; ++y) {
      const Matrix2 b = rho.block(x, y);
      for (int c = 0; c < 2; ++c) {
        for (int cp = 0; cp < 2; ++cp) {
          out(static_cast<std::size_t>(2 * (x + l) + c),
              static_cast<std::size_t>(2 * (y + l) + cp)) = b(c, cp);
        }
      }
    }
  }
  return out;
}

double MaxBlockDiff(const DensityState& a, const DensityState& b) {
  const std::int64_t l = std::max(a.half_width(), b.half_width());
  double worst = 0.0;
  for (std::int64_t x = -l; x <= l; ++x) {
    for (std::int64_t y = -l; y <= l; ++y) {
      worst = std::max(worst, max_abs_diff(a.block(x, y), b.block(x, y)));
    }
  }
  return worst;
}

TEST(InitDensityTest, PureProductState) {
  const DensityState rho = init_density(0, 0, 10);
  EXPECT_DOUBLE_EQ(rho.trace(), 1.0);
  EXPECT_EQ(rho.hermiticity_error(), 0.0);
  EXPECT_EQ(expected_capital_density(rho), 0.0);
  EXPECT_EQ(rho.block(0, 0)(0, 0), Complex{1.0});
  // Rank one: the only nonzero entry is the (0,0) one.
  const auto dense = rho.dense_window();
  int nonzero = 0;
  for (const Complex& z : dense) nonzero += (z != Complex{0.0});
  EXPECT_EQ(nonzero, 1);
  const DensityState shifted = init_density(1, -4, 3);
  EXPECT_DOUBLE_EQ(expected_capital_density(shifted), -4.0);
  EXPECT_DOUBLE_EQ(second_moment_density(shifted), 16.0);
}

TEST(StepDensityTest, OneStepPopulations) {
  const CoinSet coins = default_coins(kEps);
  DensityState rho = init_density(0, 0, 5);
  step_density(rho, coins);
  const double up = 0.5 * (std::norm(coins.a.matrix()(1, 0)) +
                           std::norm(coins.b0.matrix()(1, 0)));
  EXPECT_NEAR(rho.population(1), up, 1e-15);
  EXPECT_NEAR(rho.population(-1), 1.0 - up, 1e-15);
  EXPECT_EQ(rho.population(0), 0.0);
  EXPECT_EQ(rho.step(), 1);
}

TEST(StepDensityTest, MatchesDenseKrausOracle) {
  const CoinSet coins = make_coins(
      {{1.0, 0.2, -0.3}, {0.4, 0.0, 0.9}, {2.5, -1.1, 0.0}, {kPi / 2, 0, 0}});
  const std::int64_t budget = 9;
  for (int c = 0; c < 2; ++c) {
    DensityState rho = init_density(c, 0, budget);
    oracle::DenseMatrix expected = ToDense(rho);
    for (std::int64_t n = 1; n <= budget; ++n) {
      step_density(rho, coins);
      expected = oracle::kraus_step(expected, coins, budget);
      const oracle::DenseMatrix got = ToDense(rho);
      for (std::size_t i = 0; i < got.data.size(); ++i) {
        ASSERT_NEAR(std::abs(got.data[i] - expected.data[i]), 0.0, 1e-14)
            << "n=" << n;
      }
    }
  }
}

TEST(StepDensityTest, TraceHermiticityAndPositivity) {
  const CoinSet coins = default_coins(kEps);
  const std::int64_t budget = 20;
  DensityState rho = init_density(1, 0, budget);
  for (std::int64_t n = 1; n <= budget; ++n) {
    step_density(rho, coins);
    ASSERT_NEAR(rho.trace(), 1.0, 1e-12);
    ASSERT_LT(rho.hermiticity_error(), 1e-12);
    const oracle::DenseMatrix dense = ToDense(rho);
    Eigen::MatrixXcd m(dense.rows, dense.cols);
    for (std::size_t r = 0; r < dense.rows; ++r) {
      for (std::size_t c = 0; c < dense.cols; ++c) {
        m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
            dense(r, c);
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(
        m, Eigen::EigenvaluesOnly);
    ASSERT_GE(solver.eigenvalues().minCoeff(), -1e-10) << "n=" << n;
  }
}

TEST(StepDensityTest, OverflowThrows) {
  DensityState rho = init_density(0, 0, 1);
  step_density(rho, default_coins(kEps));
  EXPECT_THROW(step_density(rho, default_coins(kEps)), LatticeExhausted);
}

TEST(SwapSymmetryTest, SwapIsAnInvolution) {
  DensityState rho = init_density(0, 0, 6);
  for (int n = 0; n < 6; ++n) step_density(rho, default_coins(kEps));
  EXPECT_LT(MaxBlockDiff(swap_conjugate(swap_conjugate(rho)), rho), 1e-15);
  EXPECT_LT(MaxBlockDiff(mirror_conjugate(mirror_conjugate(rho)), rho), 1e-15);
  EXPECT_LT(MaxBlockDiff(swap_conjugate(init_density(0, 0, 3)),
                         init_density(1, 0, 3)),
            1e-15);
}

TEST(SwapSymmetryTest, SwappedStartEvolvesToMirroredState) {
  const CoinSet coins = default_coins(kEps);
  const std::int64_t budget = 20;
  DensityState rho = init_density(0, 0, budget);
  DensityState swapped = swap_conjugate(rho);
  for (std::int64_t n = 1; n <= budget; ++n) {
    step_density(rho, coins);
    step_density(swapped, coins);
    ASSERT_LT(MaxBlockDiff(swapped, mirror_conjugate(rho)), 1e-10) << n;
  }
}

TEST(RunDensityTest, AntisymmetricCapitalAndSharedSecondMoment) {
  const CoinSet coins = default_coins(kEps);
  const CapitalSeries c0 = run_density(coins, 0, 60);
  const CapitalSeries c1 = run_density(coins, 1, 60);
  ASSERT_EQ(c0.size(), 61u);
  for (std::size_t n = 0; n < c0.size(); ++n) {
    ASSERT_NEAR(c0[n].expected_capital, -c1[n].expected_capital, 1e-10);
    ASSERT_NEAR(c0[n].second_moment, c1[n].second_moment, 1e-10);
  }
}

TEST(RunDensityTest, BudgetIsEnforced) {
  EXPECT_THROW(run_density(default_coins(kEps), 0, 201), std::invalid_argument);
  EXPECT_NO_THROW(run_density(default_coins(kEps), 0, 8, 8));
}

TEST(RunDensityTest, ObserverSeesEveryStep) {
  std::vector<std::int64_t> seen;
  run_density(default_coins(kEps), 0, 5, 5,
              [&seen](const DensityState& rho) { seen.push_back(rho.step()); });
  EXPECT_EQ(seen, (std::vector<std::int64_t>{0, 1, 2, 3, 4, 5}));
}

TEST(RunDensityTest, IdentityCoinsGiveDeterministicDrift) {
  CoinSet coins = default_coins(kEps);
  coins.a = Unitary2{};
  coins.b0 = Unitary2{};
  coins.b1 = Unitary2{};
  const CapitalSeries up = run_density(coins, 1, 12, 12);
  const CapitalSeries down = run_density(coins, 0, 12, 12);
  for (std::size_t n = 0; n < up.size(); ++n) {
    EXPECT_NEAR(up[n].expected_capital, static_cast<double>(n), 1e-15);
    EXPECT_NEAR(down[n].expected_capital, -static_cast<double>(n), 1e-15);
  }
}

TEST(UnravellingTest, ExactEnumerationReproducesDensity) {
  const CoinSet coins = default_coins(kEps);
  for (int n : {1, 4, 8, 12}) {
    for (int c = 0; c < 2; ++c) {
      DensityState expected = init_density(c, 0, n);
      for (int i = 0; i < n; ++i) step_density(expected, coins);
      const double weight = std::ldexp(1.0, -n);
      std::vector<Matrix2> acc(static_cast<std::size_t>((2 * n + 1) * (2 * n + 1)),
                               Matrix2{{Complex{0.0}, Complex{0.0}, Complex{0.0},
                                        Complex{0.0}}});
      for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
        std::vector<Strategy> seq;
        for (int i = 0; i < n; ++i) {
          seq.push_back((bits >> i) & 1u ? Strategy::kB : Strategy::kA);
        }
        const ChiralState psi = evolve_sequence(coins, c, seq);
        for (std::int64_t x = -n; x <= n; ++x) {
          for (std::int64_t y = -n; y <= n; ++y) {
            Matrix2& b = acc[static_cast<std::size_t>((x + n) * (2 * n + 1) + y + n)];
            for (int a = 0; a < 2; ++a) {
              for (int ap = 0; ap < 2; ++ap) {
                b(a, ap) += weight * psi.amplitude(a, x) *
                            std::conj(psi.amplitude(ap, y));
              }
            }
          }
        }
      }
      double worst = 0.0;
      for (std::int64_t x = -n; x <= n; ++x) {
        for (std::int64_t y = -n; y <= n; ++y) {
          worst = std::max(
              worst,
              max_abs_diff(acc[static_cast<std::size_t>((x + n) * (2 * n + 1) + y + n)],
                           expected.block(x, y)));
        }
      }
      EXPECT_LT(worst, 1e-12) << "n=" << n << " c=" << c;
    }
  }
}

TEST(UnravellingTest, SampledTrajectoriesMatchDensity) {
  const CoinSet coins = default_coins(kEps);
  const std::int64_t n = 60;
  const CapitalSeries exact = run_density(coins, 0, n);
  const CapitalSeries sampled = measurement::average_trajectories(
      [&coins, n](std::uint64_t seed) {
        return sample_unitary_trajectory(coins, 0, n, seed);
      },
      2000, 7);
  for (std::size_t i = 1; i < exact.size(); ++i) {
    const double se = sampled[i].std_error;
    ASSERT_GT(se, 0.0);
    ASSERT_LT(std::abs(sampled[i].expected_capital - exact[i].expected_capital),
              4.0 * se + 1e-12)
        << "n=" << i;
  }
}

TEST(UnravellingTest, TrajectoriesAreSeedDeterministic) {
  const CoinSet coins = default_coins(kEps);
  const SampledPath a = sample_unitary_trajectory(coins, 1, 40, 99);
  const SampledPath b = sample_unitary_trajectory(coins, 1, 40, 99);
  EXPECT_EQ(a.capital, b.capital);
  EXPECT_EQ(a.strategies, b.strategies);
  EXPECT_EQ(a.capital.size(), 41u);
  EXPECT_EQ(a.strategies.size(), 40u);
}

}  // namespace
}  // namespace parrondo::cpmap
