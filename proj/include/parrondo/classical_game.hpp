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

#ifndef PARRONDO_CLASSICAL_GAME_HPP_
#define PARRONDO_CLASSICAL_GAME_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "parrondo/lattice.hpp"
#include "parrondo/series.hpp"

namespace parrondo::classical {

// Coin biases of the classical game: A wins with p; B wins with p0 when the
// capital is a multiple of 3 and with p1 otherwise.
struct ClassicalGameParams {
  double p = 0.5;
  double p0 = 0.5;
  double p1 = 0.5;
  double epsilon = 0.0;

  // p = 1/2 - eps, p0 = 1/10 - eps, p1 = 3/4 - eps.
  static ClassicalGameParams standard(double epsilon = 0.01);

  // Throws std::domain_error unless p, p0, p1 lie in [0, 1].
  void validate() const;

  double b_win_probability(std::int64_t capital) const;
};

// Which strategy is played at step n (n = 0 is the first toss).
class StrategySchedule {
 public:
  enum class Kind { kAlwaysA, kAlwaysB, kPeriodic, kRandomMixture };

  static StrategySchedule always_a();
  static StrategySchedule always_b();
  // Pattern indexed by n mod pattern length. Throws on an empty pattern.
  static StrategySchedule periodic(std::vector<Strategy> pattern);
  // Accepts strings over {A, B}, e.g. "AABB".
  static StrategySchedule periodic(std::string_view pattern);
  // A with probability prob_a at each step, independently.
  static StrategySchedule random_mixture(double prob_a);

  // Parses "A", "B", "random", "random:<p>" or a periodic pattern such as
  // "AABB". Throws std::invalid_argument.
  static StrategySchedule parse(std::string_view text);

  Kind kind() const { return kind_; }
  const std::vector<Strategy>& pattern() const { return pattern_; }
  double mixture_probability() const { return prob_a_; }

  // Probability that A is played at step n.
  double prob_a(std::int64_t n) const;

  std::string label() const;

 private:
  Kind kind_ = Kind::kAlwaysA;
  std::vector<Strategy> pattern_;
  double prob_a_ = 1.0;
};

// p0 threshold below which B-only play loses:
// (1 - 2 p1 + p1^2) / (1 - 2 p1 + 2 p1^2).
double losing_threshold(double p1);

// Per-step drift of B-only play under the stationary distribution of the
// capital mod 3 chain. Throws DegenerateChain if p0 or p1 is 0 or 1.
double stationary_drift(const ClassicalGameParams& params);

// Stationary distribution of the capital mod 3 chain under B-only play.
std::vector<double> stationary_distribution(const ClassicalGameParams& params);

// Exact distribution of the capital, stored densely over [x0 - n, x0 + n].
class CapitalDistribution {
 public:
  explicit CapitalDistribution(std::int64_t initial_capital);

  std::int64_t step() const { return step_; }
  std::int64_t lowest() const { return lowest_; }
  std::int64_t highest() const {
    return lowest_ + static_cast<std::int64_t>(probs_.size()) - 1;
  }
  double probability(std::int64_t x) const;
  std::span<const double> probabilities() const { return probs_; }

  double total() const;
  double expected_capital() const;
  double second_moment() const;

  // One master-equation step with win probability
  // prob_a * p + (1 - prob_a) * p_B(x) at capital x.
  void advance(const ClassicalGameParams& params, double prob_a);

 private:
  std::int64_t lowest_;
  std::int64_t step_ = 0;
  std::vector<double> probs_;
};

CapitalSeries propagate_distribution(const ClassicalGameParams& params,
                                     const StrategySchedule& schedule,
                                     std::int64_t steps,
                                     std::int64_t initial_capital = 0);

// One sampled capital path of length steps + 1.
std::vector<std::int64_t> play_trajectory(const ClassicalGameParams& params,
                                          const StrategySchedule& schedule,
                                          std::int64_t steps,
                                          std::int64_t initial_capital,
                                          std::uint64_t seed);

// V_x = -1/2 sum_{y=1..x} ln(p_{y-1} / (1 - p_y)) for x in [0, x_max], with
// win_probs[x] = p_x. Throws SingularPotential if a used p_x is 0 or 1 and
// std::invalid_argument if win_probs is shorter than x_max + 1.
std::vector<double> ratchet_potential(std::span<const double> win_probs,
                                      std::int64_t x_max);

// p_x of strategy B (or A, or a mixture) on [0, x_max].
std::vector<double> win_probabilities(const ClassicalGameParams& params,
                                      double prob_a, std::int64_t x_max);

}  // namespace parrondo::classical

#endif  // PARRONDO_CLASSICAL_GAME_HPP_
