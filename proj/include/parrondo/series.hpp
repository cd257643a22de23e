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

#ifndef PARRONDO_SERIES_HPP_
#define PARRONDO_SERIES_HPP_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace parrondo {

struct CapitalRow {
  std::int64_t n = 0;
  double expected_capital = 0.0;
  double second_moment = 0.0;
  // Standard error of expected_capital; only meaningful for sampled series.
  double std_error = 0.0;
};

// Per-step capital record. Rows are appended in strictly increasing n.
class CapitalSeries {
 public:
  CapitalSeries() = default;
  explicit CapitalSeries(bool sampled) : sampled_(sampled) {}

  // Throws std::invalid_argument if n does not increase.
  void append(const CapitalRow& row);

  const std::vector<CapitalRow>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  const CapitalRow& operator[](std::size_t i) const { return rows_[i]; }
  const CapitalRow& back() const { return rows_.back(); }

  // True when rows carry a standard error (Monte Carlo averages).
  bool sampled() const { return sampled_; }

 private:
  std::vector<CapitalRow> rows_;
  bool sampled_ = false;
};

// Header n,expected_capital,second_moment[,stderr]; LF line endings and
// 17 significant digits so values round-trip.
void write_csv(std::ostream& out, const CapitalSeries& series);
std::string to_csv(const CapitalSeries& series);

// Inverse of write_csv. Throws std::runtime_error on malformed input.
CapitalSeries read_csv(std::istream& in);

// One row of a position-distribution dump with header n,x,probability.
struct PositionRow {
  std::int64_t n = 0;
  std::int64_t x = 0;
  double probability = 0.0;
};

void write_positions_csv(std::ostream& out,
                         const std::vector<PositionRow>& rows);

// Shortest round-trippable decimal form used by every CSV writer.
std::string format_real(double value);

}  // namespace parrondo

#endif  // PARRONDO_SERIES_HPP_
