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

#include "parrondo/series.hpp"

#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace parrondo {

void CapitalSeries::append(const CapitalRow& row) {
  if (!rows_.empty() && row.n <= rows_.back().n) {
    throw std::invalid_argument("CapitalSeries: step index must increase");
  }
  rows_.push_back(row);
}

std::string format_real(double value) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  return buffer;
}

void write_csv(std::ostream& out, const CapitalSeries& series) {
  out << "n,expected_capital,second_moment";
  if (series.sampled()) out << ",stderr";
  out << '\n';
  for (const auto& row : series.rows()) {
    out << row.n << ',' << format_real(row.expected_capital) << ','
        << format_real(row.second_moment);
    if (series.sampled()) out << ',' << format_real(row.std_error);
    out << '\n';
  }
}

std::string to_csv(const CapitalSeries& series) {
  std::ostringstream out;
  write_csv(out, series);
  return out.str();
}

namespace {

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  return fields;
}

double parse_real(const std::string& text) {
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) {
    throw std::runtime_error("read_csv: malformed number '" + text + "'");
  }
  return value;
}

}  // namespace

CapitalSeries read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("read_csv: empty input");
  bool sampled = false;
  if (line == "n,expected_capital,second_moment,stderr") {
    sampled = true;
  } else if (line != "n,expected_capital,second_moment") {
    throw std::runtime_error("read_csv: unexpected header '" + line + "'");
  }
  CapitalSeries series(sampled);
  const std::size_t columns = sampled ? 4 : 3;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto fields = split(line, ',');
    if (fields.size() != columns) {
      throw std::runtime_error("read_csv: wrong column count in '" + line + "'");
    }
    CapitalRow row;
    std::int64_t n = 0;
    const auto [ptr, ec] = std::from_chars(
        fields[0].data(), fields[0].data() + fields[0].size(), n);
    if (ec != std::errc{} || ptr != fields[0].data() + fields[0].size()) {
      throw std::runtime_error("read_csv: malformed step '" + fields[0] + "'");
    }
    row.n = n;
    row.expected_capital = parse_real(fields[1]);
    row.second_moment = parse_real(fields[2]);
    if (sampled) row.std_error = parse_real(fields[3]);
    series.append(row);
  }
  return series;
}

void write_positions_csv(std::ostream& out,
                         const std::vector<PositionRow>& rows) {
  out << "n,x,probability\n";
  for (const auto& row : rows) {
    out << row.n << ',' << row.x << ',' << format_real(row.probability)
        << '\n';
  }
}

}  // namespace parrondo
