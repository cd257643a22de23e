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

// Command-line front end shared by the parrondo binary and its tests.

#ifndef PARRONDO_TOOLS_CLI_HPP_
#define PARRONDO_TOOLS_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "parrondo/core_math.hpp"
#include "parrondo/series.hpp"

namespace parrondo::cli {

enum class Game { kClassical, kQuantum, kCpmap, kTrajD, kTrajDc, kKspace };

const char* game_name(Game game);

struct RunConfig {
  Game game = Game::kClassical;
  std::int64_t steps = 1000;
  double epsilon = 0.01;
  std::string schedule = "random";
  int initial_d = 0;
  int initial_c = 0;
  std::int64_t samples = 5000;
  std::uint64_t seed = 42;
  // 0 selects the smallest grid that supports steps.
  int k_grid = 0;
  // Empty writes to stdout. With bundle, a prefix for one file per curve.
  std::string out_path;
  std::string positions_path;
  bool bundle = false;
  std::optional<SU2Params> coin_a;
  std::optional<SU2Params> coin_b0;
  std::optional<SU2Params> coin_b1;
  std::optional<SU2Params> coin_u;

  CoinSet coins() const;
};

// Bad flags, values or option combinations. Maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// --help; what() is the help text.
class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Steps used when --steps is absent.
std::int64_t default_steps(Game game);

// Parses argv (without the program name). A --config file holds flat
// "key = value" lines; flags given on the command line win. Throws
// UsageError or HelpRequested.
RunConfig parse_config(const std::vector<std::string>& args);

// "theta,alpha,beta" -> SU2Params. Throws UsageError.
SU2Params parse_su2(const std::string& text);

struct PlotColumn {
  std::string label;
  std::vector<double> values;
};

// "# n label..." header, then one whitespace-separated row per n. Throws
// std::invalid_argument if columns differ in length.
void emit_plot_data(std::ostream& out, const std::vector<PlotColumn>& columns);
std::vector<PlotColumn> read_plot_data(std::istream& in);

// Momentum-space vs direct simulation for one (d, c) input.
struct KspaceComparison {
  CapitalSeries kspace;
  CapitalSeries direct;
  // max_x |P_k(x, n) - P_direct(x, n)| per n.
  std::vector<double> discrepancy;
  double max_discrepancy = 0.0;
};

KspaceComparison compare_kspace(const CoinSet& coins, int d, int c,
                                std::int64_t steps, int k_grid);

// Header n,kspace_capital,direct_capital,kspace_second_moment,
// direct_second_moment,max_abs_discrepancy.
void write_kspace_csv(std::ostream& out, const KspaceComparison& comparison);

// One labelled curve of a run.
struct Curve {
  std::string label;
  CapitalSeries series;
};

// Simulates every curve the config asks for: one normally, the figure's
// full set with bundle.
std::vector<Curve> simulate(const RunConfig& config);

// Writes outputs and returns the exit status.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

// Full entry point: parse, run, map errors to exit codes (0 ok, 1 runtime
// failure, 2 usage).
int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err);

}  // namespace parrondo::cli

#endif  // PARRONDO_TOOLS_CLI_HPP_
