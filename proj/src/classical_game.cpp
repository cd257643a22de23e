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

#include "parrondo/classical_game.hpp"

#include <array>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "parrondo/errors.hpp"
#include "parrondo/lattice.hpp"
#include "parrondo/rng.hpp"

namespace parrondo::classical {

ClassicalGameParams ClassicalGameParams::standard(double epsilon) {
  return {0.5 - epsilon, 0.1 - epsilon, 0.75 - epsilon, epsilon};
}

void ClassicalGameParams::validate() const {
  auto check = [](double value, const char* name) {
    if (!(value >= 0.0 && value <= 1.0)) {
      throw std::domain_error(std::string("ClassicalGameParams: ") + name +
                              " must be a probability");
    }
  };
  check(p, "p");
  check(p0, "p0");
  check(p1, "p1");
}

double ClassicalGameParams::b_win_probability(std::int64_t capital) const {
  return divisible_by_3(capital) ? p0 : p1;
}

StrategySchedule StrategySchedule::always_a() {
  StrategySchedule s;
  s.kind_ = Kind::kAlwaysA;
  s.prob_a_ = 1.0;
  return s;
}

StrategySchedule StrategySchedule::always_b() {
  StrategySchedule s;
  s.kind_ = Kind::kAlwaysB;
  s.prob_a_ = 0.0;
  return s;
}

StrategySchedule StrategySchedule::periodic(std::vector<Strategy> pattern) {
  if (pattern.empty()) {
    throw std::invalid_argument("StrategySchedule: empty periodic pattern");
  }
  StrategySchedule s;
  s.kind_ = Kind::kPeriodic;
  s.pattern_ = std::move(pattern);
  return s;
}

StrategySchedule StrategySchedule::periodic(std::string_view pattern) {
  std::vector<Strategy> parsed;
  parsed.reserve(pattern.size());
  for (char ch : pattern) {
    if (ch == 'A' || ch == 'a') {
      parsed.push_back(Strategy::kA);
    } else if (ch == 'B' || ch == 'b') {
      parsed.push_back(Strategy::kB);
    } else {
      throw std::invalid_argument("StrategySchedule: bad strategy '" +
                                  std::string(1, ch) + "'");
    }
  }
  return periodic(std::move(parsed));
}

StrategySchedule StrategySchedule::random_mixture(double prob_a) {
  if (!(prob_a >= 0.0 && prob_a <= 1.0)) {
    throw std::invalid_argument("StrategySchedule: mixture probability");
  }
  StrategySchedule s;
  s.kind_ = Kind::kRandomMixture;
  s.prob_a_ = prob_a;
  return s;
}

StrategySchedule StrategySchedule::parse(std::string_view text) {
  if (text == "A" || text == "a") return always_a();
  if (text == "B" || text == "b") return always_b();
  if (text == "random") return random_mixture(0.5);
  constexpr std::string_view kRandomPrefix = "random:";
  if (text.substr(0, kRandomPrefix.size()) == kRandomPrefix) {
    const std::string value(text.substr(kRandomPrefix.size()));
    std::size_t used = 0;
    double prob = 0.0;
    try {
      prob = std::stod(value, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (value.empty() || used != value.size()) {
      throw std::invalid_argument("StrategySchedule: bad mixture '" + value +
                                  "'");
    }
    return random_mixture(prob);
  }
  return periodic(text);
}

double StrategySchedule::prob_a(std::int64_t n) const {
  switch (kind_) {
    case Kind::kAlwaysA:
      return 1.0;
    case Kind::kAlwaysB:
      return 0.0;
    case Kind::kPeriodic: {
      const auto len = static_cast<std::int64_t>(pattern_.size());
      return pattern_[static_cast<std::size_t>(n % len)] == Strategy::kA ? 1.0
                                                                          : 0.0;
    }
    case Kind::kRandomMixture:
      return prob_a_;
  }
  return 0.0;
}

std::string StrategySchedule::label() const {
  switch (kind_) {
    case Kind::kAlwaysA:
      return "A";
    case Kind::kAlwaysB:
      return "B";
    case Kind::kPeriodic: {
      std::string out;
      for (Strategy s : pattern_) out.push_back(static_cast<char>(s));
      return out;
    }
    case Kind::kRandomMixture:
      return prob_a_ == 0.5 ? "random" : "random:" + std::to_string(prob_a_);
  }
  return {};
}

double losing_threshold(double p1) {
  const double q1 = 1.0 - p1;
  return q1 * q1 / (q1 * q1 + p1 * p1);
}

std::vector<double> stationary_distribution(const ClassicalGameParams& params) {
  params.validate();
  const std::array<double, 3> win{params.p0, params.p1, params.p1};
  for (double w : win) {
    if (w == 0.0 || w == 1.0) {
      throw DegenerateChain(
          "stationary_drift: win probability 0 or 1 makes the capital mod 3 "
          "chain deterministic on a state");
    }
  }
  // Balance equations pi = pi T, i.e. (T^T - I) pi = 0, with the last row
  // replaced by the normalisation sum pi = 1.
  std::array<std::array<double, 4>, 3> a{};
  for (int j = 0; j < 3; ++j) {
    a[j][j] -= 1.0;
    const int from_below = (j + 2) % 3;  // i -> i + 1 = j
    const int from_above = (j + 1) % 3;  // i -> i - 1 = j
    a[j][from_below] += win[from_below];
    a[j][from_above] += 1.0 - win[from_above];
  }
  a[2] = {1.0, 1.0, 1.0, 1.0};
  for (int col = 0; col < 3; ++col) {
    int pivot = col;
    for (int r = col + 1; r < 3; ++r) {
      if (std::abs(a[r][col]) > std::abs(a[pivot][col])) pivot = r;
    }
    if (std::abs(a[pivot][col]) < 1e-300) {
      throw DegenerateChain("stationary_drift: singular balance equations");
    }
    std::swap(a[col], a[pivot]);
    for (int r = 0; r < 3; ++r) {
      if (r == col) continue;
      const double f = a[r][col] / a[col][col];
      for (int k = col; k < 4; ++k) a[r][k] -= f * a[col][k];
    }
  }
  std::vector<double> pi(3);
  for (int i = 0; i < 3; ++i) pi[i] = a[i][3] / a[i][i];
  return pi;
}

double stationary_drift(const ClassicalGameParams& params) {
  const auto pi = stationary_distribution(params);
  const std::array<double, 3> win{params.p0, params.p1, params.p1};
  double drift = 0.0;
  for (int i = 0; i < 3; ++i) drift += pi[i] * (2.0 * win[i] - 1.0);
  return drift;
}

CapitalDistribution::CapitalDistribution(std::int64_t initial_capital)
    : lowest_(initial_capital), probs_{1.0} {}

double CapitalDistribution::probability(std::int64_t x) const {
  if (x < lowest_ || x > highest()) return 0.0;
  return probs_[static_cast<std::size_t>(x - lowest_)];
}

double CapitalDistribution::total() const {
  double sum = 0.0;
  for (double p : probs_) sum += p;
  return sum;
}

double CapitalDistribution::expected_capital() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    sum += static_cast<double>(lowest_ + static_cast<std::int64_t>(i)) *
           probs_[i];
  }
  return sum;
}

double CapitalDistribution::second_moment() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const auto x = static_cast<double>(lowest_ + static_cast<std::int64_t>(i));
    sum += x * x * probs_[i];
  }
  return sum;
}

void CapitalDistribution::advance(const ClassicalGameParams& params,
                                  double prob_a) {
  // P_x(n+1) = p_{x-1} P_{x-1}(n) + q_{x+1} P_{x+1}(n)
  std::vector<double> next(probs_.size() + 2, 0.0);
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    const std::int64_t x = lowest_ + static_cast<std::int64_t>(i);
    const double win =
        prob_a * params.p + (1.0 - prob_a) * params.b_win_probability(x);
    next[i + 2] += win * probs_[i];
    next[i] += (1.0 - win) * probs_[i];
  }
  probs_ = std::move(next);
  --lowest_;
  ++step_;
}

CapitalSeries propagate_distribution(const ClassicalGameParams& params,
                                     const StrategySchedule& schedule,
                                     std::int64_t steps,
                                     std::int64_t initial_capital) {
  params.validate();
  if (steps < 0) throw std::invalid_argument("propagate_distribution: steps");
  CapitalDistribution dist(initial_capital);
  CapitalSeries series;
  series.append({0, dist.expected_capital(), dist.second_moment()});
  for (std::int64_t n = 0; n < steps; ++n) {
    dist.advance(params, schedule.prob_a(n));
    series.append({n + 1, dist.expected_capital(), dist.second_moment()});
  }
  return series;
}

std::vector<std::int64_t> play_trajectory(const ClassicalGameParams& params,
                                          const StrategySchedule& schedule,
                                          std::int64_t steps,
                                          std::int64_t initial_capital,
                                          std::uint64_t seed) {
  params.validate();
  if (steps < 0) throw std::invalid_argument("play_trajectory: steps");
  Rng rng(seed);
  std::vector<std::int64_t> path;
  path.reserve(static_cast<std::size_t>(steps) + 1);
  std::int64_t capital = initial_capital;
  path.push_back(capital);
  for (std::int64_t n = 0; n < steps; ++n) {
    bool use_a = false;
    switch (schedule.kind()) {
      case StrategySchedule::Kind::kRandomMixture:
        use_a = rng.bernoulli(schedule.mixture_probability());
        break;
      default:
        use_a = schedule.prob_a(n) == 1.0;
        break;
    }
    const double win = use_a ? params.p : params.b_win_probability(capital);
    capital += rng.bernoulli(win) ? 1 : -1;
    path.push_back(capital);
  }
  return path;
}

std::vector<double> ratchet_potential(std::span<const double> win_probs,
                                      std::int64_t x_max) {
  if (x_max < 0) throw std::invalid_argument("ratchet_potential: x_max < 0");
  if (win_probs.size() < static_cast<std::size_t>(x_max) + 1) {
    throw std::invalid_argument("ratchet_potential: need p_x for x <= x_max");
  }
  std::vector<double> potential(static_cast<std::size_t>(x_max) + 1, 0.0);
  for (std::int64_t y = 1; y <= x_max; ++y) {
    const double below = win_probs[static_cast<std::size_t>(y - 1)];
    const double here = win_probs[static_cast<std::size_t>(y)];
    if (!(below > 0.0 && below < 1.0 && here > 0.0 && here < 1.0)) {
      throw SingularPotential(
          "ratchet_potential: win probabilities must lie in (0, 1)");
    }
    potential[static_cast<std::size_t>(y)] =
        potential[static_cast<std::size_t>(y - 1)] -
        0.5 * std::log(below / (1.0 - here));
  }
  return potential;
}

std::vector<double> win_probabilities(const ClassicalGameParams& params,
                                      double prob_a, std::int64_t x_max) {
  std::vector<double> out;
  for (std::int64_t x = 0; x <= x_max; ++x) {
    out.push_back(prob_a * params.p +
                  (1.0 - prob_a) * params.b_win_probability(x));
  }
  return out;
}

}  // namespace parrondo::classical
