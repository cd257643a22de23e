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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "parrondo/classical_game.hpp"
#include "parrondo/cpmap_game.hpp"
#include "parrondo/kspace_oracle.hpp"
#include "parrondo/measurement_game.hpp"
#include "parrondo/quantum_walk.hpp"

namespace parrondo::cli {
namespace {

const std::map<std::string, Game> kGames{
    {"classical", Game::kClassical}, {"quantum", Game::kQuantum},
    {"cpmap", Game::kCpmap},         {"traj-d", Game::kTrajD},
    {"traj-dc", Game::kTrajDc},      {"kspace", Game::kKspace}};

bool uses_d(Game game) {
  return game == Game::kQuantum || game == Game::kKspace ||
         game == Game::kTrajD || game == Game::kTrajDc;
}

bool is_trajectory(Game game) {
  return game == Game::kTrajD || game == Game::kTrajDc;
}

std::string bit_label(char name, int bit) {
  return std::string(1, name) + std::to_string(bit);
}

std::ofstream open_output(const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot open " + path + " for writing");
  return file;
}

CapitalSeries quantum_series(const CoinSet& coins, int d, int c,
                             std::int64_t steps, const std::string& positions) {
  if (positions.empty()) return qwalk::run(coins, d, c, steps);
  std::vector<PositionRow> rows;
  const CapitalSeries series =
      qwalk::run(coins, d, c, steps, [&rows, steps](const qwalk::PureState& s) {
        if (s.step() == steps) rows = qwalk::position_rows(s);
      });
  std::ofstream file = open_output(positions);
  write_positions_csv(file, rows);
  return series;
}

CapitalSeries trajectory_series(const RunConfig& config, const CoinSet& coins,
                                int c) {
  const int d = config.initial_d;
  const std::int64_t steps = config.steps;
  measurement::TrajectoryRunner runner;
  if (config.game == Game::kTrajD) {
    runner = [&coins, d, c, steps](std::uint64_t seed) {
      return measurement::run_d_measured(coins, d, c, steps, seed);
    };
  } else {
    runner = [&coins, d, c, steps](std::uint64_t seed) {
      return measurement::run_dc_measured(coins, d, c, steps, seed);
    };
  }
  return measurement::average_trajectories(runner, config.samples, config.seed);
}

}  // namespace

const char* game_name(Game game) {
  for (const auto& [name, value] : kGames) {
    if (value == game) return name.c_str();
  }
  return "?";
}

CoinSet RunConfig::coins() const {
  CoinAngles angles = default_coin_angles(epsilon);
  if (coin_a) angles.a = *coin_a;
  if (coin_b0) angles.b0 = *coin_b0;
  if (coin_b1) angles.b1 = *coin_b1;
  if (coin_u) angles.u = *coin_u;
  return make_coins(angles);
}

std::int64_t default_steps(Game game) {
  switch (game) {
    case Game::kCpmap:
    case Game::kTrajD:
      return 200;
    case Game::kKspace:
      return 50;
    default:
      return 1000;
  }
}

SU2Params parse_su2(const std::string& text) {
  std::array<double, 3> values{};
  std::stringstream in(text);
  std::string field;
  std::size_t count = 0;
  while (std::getline(in, field, ',')) {
    if (count == 3) throw UsageError("coin angles: expected theta,alpha,beta");
    try {
      std::size_t used = 0;
      values[count] = std::stod(field, &used);
      if (used != field.size()) throw std::invalid_argument(field);
    } catch (const std::exception&) {
      throw UsageError("coin angles: malformed number '" + field + "'");
    }
    ++count;
  }
  if (count != 3) throw UsageError("coin angles: expected theta,alpha,beta");
  const SU2Params params{values[0], values[1], values[2]};
  try {
    validate(params);
  } catch (const std::domain_error& e) {
    throw UsageError(e.what());
  }
  return params;
}

RunConfig parse_config(const std::vector<std::string>& args) {
  CLI::App app{"Classical, quantum and mixed Parrondo games", "parrondo"};
  app.set_config("--config", "", "flat key = value file; flags override it");
  app.allow_config_extras(false);

  RunConfig config;
  std::string game;
  std::string coin_a, coin_b0, coin_b1, coin_u;
  app.add_option("--game", game, "classical|quantum|cpmap|traj-d|traj-dc|kspace")
      ->required()
      ->check(CLI::IsMember(kGames));
  auto* steps = app.add_option("--steps", config.steps, "game steps n")->check(CLI::NonNegativeNumber);
  app.add_option("--epsilon", config.epsilon, "bias epsilon");
  auto* schedule = app.add_option("--schedule", config.schedule,
                                  "A, B, random, random:<p> or a pattern");
  auto* initial_d = app.add_option("--initial-d,--initial_d", config.initial_d)
                        ->check(CLI::Range(0, 1));
  auto* initial_c = app.add_option("--initial-c,--initial_c", config.initial_c)
                        ->check(CLI::Range(0, 1));
  auto* samples = app.add_option("--samples", config.samples, "trajectories averaged")
                      ->check(CLI::PositiveNumber);
  app.add_option("--seed", config.seed, "trajectory games only use it");
  auto* k_grid = app.add_option("--k-grid,--k_grid", config.k_grid, "momentum grid size K")
                     ->check(CLI::PositiveNumber);
  app.add_option("--out,--out_path", config.out_path, "CSV path (stdout if absent)");
  auto* positions = app.add_option("--positions", config.positions_path,
                                   "final position distribution CSV");
  app.add_flag("--bundle", config.bundle,
                              "every curve of the figure; --out is a prefix");
  std::vector<CLI::Option*> coin_flags{
      app.add_option("--coin-a,--coin_a", coin_a, "theta,alpha,beta"),
      app.add_option("--coin-b0,--coin_b0", coin_b0, "theta,alpha,beta"),
      app.add_option("--coin-b1,--coin_b1", coin_b1, "theta,alpha,beta"),
      app.add_option("--coin-u,--coin_u", coin_u, "theta,alpha,beta")};

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  config.game = kGames.at(game);
  const Game g = config.game;
  auto conflict = [&](CLI::Option* option, bool allowed) {
    if (option->count() > 0 && !allowed) {
      throw UsageError(option->get_name() + " does not apply to --game " + game);
    }
  };
  conflict(schedule, g == Game::kClassical && !config.bundle);
  // Bundles fix the initial coin; quantum and kspace bundles fix d as well.
  conflict(initial_d, uses_d(g) && !(config.bundle && (g == Game::kQuantum ||
                                                        g == Game::kKspace)));
  conflict(initial_c, g != Game::kClassical && !config.bundle);
  conflict(samples, is_trajectory(g));
  conflict(k_grid, g == Game::kKspace);
  conflict(positions, g == Game::kQuantum && !config.bundle);
  for (CLI::Option* option : coin_flags) conflict(option, g != Game::kClassical);

  if (steps->count() == 0) config.steps = default_steps(g);
  if (config.bundle && config.out_path.empty()) {
    throw UsageError("--bundle needs --out <prefix>");
  }
  if (g == Game::kCpmap && config.steps > cpmap::kDefaultDensityBudget) {
    throw UsageError("--game cpmap supports at most " +
                     std::to_string(cpmap::kDefaultDensityBudget) + " steps");
  }
  if (g == Game::kKspace && config.k_grid > 0 &&
      !kspace::KGrid(config.k_grid).supports(config.steps)) {
    throw UsageError("--k-grid must be at least 2 * steps + 3");
  }
  if (g == Game::kClassical) {
    try {
      classical::StrategySchedule::parse(config.schedule);
      classical::ClassicalGameParams::standard(config.epsilon).validate();
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  } else {
    try {
      if (!coin_a.empty()) config.coin_a = parse_su2(coin_a);
      if (!coin_b0.empty()) config.coin_b0 = parse_su2(coin_b0);
      if (!coin_b1.empty()) config.coin_b1 = parse_su2(coin_b1);
      if (!coin_u.empty()) config.coin_u = parse_su2(coin_u);
      config.coins();
    } catch (const std::domain_error& e) {
      throw UsageError(e.what());
    }
  }
  return config;
}

void emit_plot_data(std::ostream& out, const std::vector<PlotColumn>& columns) {
  const std::size_t rows = columns.empty() ? 0 : columns.front().values.size();
  for (const PlotColumn& column : columns) {
    if (column.values.size() != rows) {
      throw std::invalid_argument("emit_plot_data: columns differ in length");
    }
    if (column.label.empty() ||
        column.label.find_first_of(" \t\n") != std::string::npos) {
      throw std::invalid_argument("emit_plot_data: bad label '" + column.label + "'");
    }
  }
  out << "# n";
  for (const PlotColumn& column : columns) out << ' ' << column.label;
  out << '\n';
  for (std::size_t n = 0; n < rows; ++n) {
    out << n;
    for (const PlotColumn& column : columns) {
      out << ' ' << format_real(column.values[n]);
    }
    out << '\n';
  }
}

std::vector<PlotColumn> read_plot_data(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::runtime_error("plot data: empty");
  std::istringstream header(line);
  std::string token;
  header >> token;
  if (token != "#") throw std::runtime_error("plot data: missing header");
  header >> token;
  if (token != "n") throw std::runtime_error("plot data: first column is not n");
  std::vector<PlotColumn> columns;
  while (header >> token) columns.push_back({token, {}});
  std::size_t expected_n = 0;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::size_t n = 0;
    if (!(row >> n) || n != expected_n) {
      throw std::runtime_error("plot data: bad row index");
    }
    for (PlotColumn& column : columns) {
      if (!(row >> token)) throw std::runtime_error("plot data: short row");
      column.values.push_back(std::stod(token));
    }
    ++expected_n;
  }
  return columns;
}

KspaceComparison compare_kspace(const CoinSet& coins, int d, int c,
                                std::int64_t steps, int k_grid) {
  const kspace::KGrid grid =
      k_grid > 0 ? kspace::KGrid(k_grid) : kspace::KGrid::for_steps(steps);
  if (!grid.supports(steps)) {
    throw std::invalid_argument("compare_kspace: grid too small for steps");
  }
  const auto matrices = kspace::build_block_matrices(grid, coins);
  kspace::KSpaceState state = kspace::initial_state(d, c, grid);

  KspaceComparison result;
  auto record_kspace = [&] {
    const auto dist = kspace::position_distribution(state, grid);
    double first = 0.0;
    double second = 0.0;
    for (std::size_t i = 0; i < dist.size(); ++i) {
      const double x = static_cast<double>(static_cast<std::int64_t>(i) - state.step);
      first += x * dist[i];
      second += x * x * dist[i];
    }
    result.kspace.append({state.step, first, second, 0.0});
    return dist;
  };

  std::vector<std::vector<double>> kspace_dists;
  kspace_dists.push_back(record_kspace());
  for (std::int64_t n = 0; n < steps; ++n) {
    kspace::evolve_one_step(state, matrices);
    kspace_dists.push_back(record_kspace());
  }

  result.direct = qwalk::run(coins, d, c, steps, [&](const qwalk::PureState& s) {
    const auto dist = s.position_distribution();
    const auto& reference = kspace_dists[static_cast<std::size_t>(s.step())];
    double worst = 0.0;
    for (std::int64_t x = -s.step(); x <= s.step(); ++x) {
      const double p_direct = dist[static_cast<std::size_t>(x + s.half_width())];
      const double p_k = reference[static_cast<std::size_t>(x + s.step())];
      worst = std::max(worst, std::abs(p_direct - p_k));
    }
    result.discrepancy.push_back(worst);
  });
  result.max_discrepancy =
      *std::max_element(result.discrepancy.begin(), result.discrepancy.end());
  return result;
}

void write_kspace_csv(std::ostream& out, const KspaceComparison& comparison) {
  out << "n,kspace_capital,direct_capital,kspace_second_moment,"
         "direct_second_moment,max_abs_discrepancy\n";
  for (std::size_t i = 0; i < comparison.kspace.size(); ++i) {
    const CapitalRow& k = comparison.kspace[i];
    const CapitalRow& d = comparison.direct[i];
    out << k.n << ',' << format_real(k.expected_capital) << ','
        << format_real(d.expected_capital) << ',' << format_real(k.second_moment)
        << ',' << format_real(d.second_moment) << ','
        << format_real(comparison.discrepancy[i]) << '\n';
  }
}

std::vector<Curve> simulate(const RunConfig& config) {
  std::vector<Curve> curves;
  const std::int64_t steps = config.steps;
  switch (config.game) {
    case Game::kClassical: {
      const auto params = classical::ClassicalGameParams::standard(config.epsilon);
      std::vector<std::string> schedules{config.schedule};
      if (config.bundle) schedules = {"A", "B", "AABB", "random"};
      for (const std::string& text : schedules) {
        const auto schedule = classical::StrategySchedule::parse(text);
        curves.push_back({schedule.label(),
                          classical::propagate_distribution(params, schedule, steps)});
      }
      break;
    }
    case Game::kQuantum: {
      const CoinSet coins = config.coins();
      if (config.bundle) {
        for (int d = 0; d < 2; ++d) {
          for (int c = 0; c < 2; ++c) {
            curves.push_back({bit_label('d', d) + bit_label('c', c),
                              qwalk::run(coins, d, c, steps)});
          }
        }
      } else {
        curves.push_back({bit_label('d', config.initial_d) +
                              bit_label('c', config.initial_c),
                          quantum_series(coins, config.initial_d, config.initial_c,
                                         steps, config.positions_path)});
      }
      break;
    }
    case Game::kCpmap: {
      const CoinSet coins = config.coins();
      std::vector<int> cs{config.initial_c};
      if (config.bundle) cs = {0, 1};
      for (int c : cs) {
        curves.push_back({bit_label('c', c), cpmap::run_density(coins, c, steps)});
      }
      break;
    }
    case Game::kTrajD:
    case Game::kTrajDc: {
      const CoinSet coins = config.coins();
      std::vector<int> cs{config.initial_c};
      if (config.bundle) cs = {0, 1};
      for (int c : cs) {
        curves.push_back({bit_label('d', config.initial_d) + bit_label('c', c),
                          trajectory_series(config, coins, c)});
      }
      break;
    }
    case Game::kKspace:
      throw std::logic_error("simulate: kspace runs go through compare_kspace");
  }
  return curves;
}

namespace {

int run_kspace(const RunConfig& config, std::ostream& out, std::ostream& err) {
  const CoinSet coins = config.coins();
  std::vector<std::pair<int, int>> inputs{{config.initial_d, config.initial_c}};
  if (config.bundle) inputs = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  double worst = 0.0;
  for (const auto& [d, c] : inputs) {
    const KspaceComparison comparison =
        compare_kspace(coins, d, c, config.steps, config.k_grid);
    worst = std::max(worst, comparison.max_discrepancy);
    if (config.bundle) {
      std::ofstream file = open_output(config.out_path + "_" + bit_label('d', d) +
                                       bit_label('c', c) + ".csv");
      write_kspace_csv(file, comparison);
    } else if (config.out_path.empty()) {
      write_kspace_csv(out, comparison);
    } else {
      std::ofstream file = open_output(config.out_path);
      write_kspace_csv(file, comparison);
    }
  }
  err << "max_abs_discrepancy " << format_real(worst) << '\n';
  return 0;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.game == Game::kKspace) return run_kspace(config, out, err);
  const std::vector<Curve> curves = simulate(config);
  if (!config.bundle) {
    if (config.out_path.empty()) {
      write_csv(out, curves.front().series);
    } else {
      std::ofstream file = open_output(config.out_path);
      write_csv(file, curves.front().series);
    }
    return 0;
  }
  std::vector<PlotColumn> columns;
  for (const Curve& curve : curves) {
    std::ofstream file = open_output(config.out_path + "_" + curve.label + ".csv");
    write_csv(file, curve.series);
    PlotColumn column{curve.label, {}};
    for (const CapitalRow& row : curve.series.rows()) {
      column.values.push_back(row.expected_capital);
    }
    columns.push_back(std::move(column));
  }
  std::ofstream plot = open_output(config.out_path + ".dat");
  emit_plot_data(plot, columns);
  return 0;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  RunConfig config;
  try {
    config = parse_config(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return 0;
  } catch (const UsageError& e) {
    err << e.what() << '\n';
    return 2;
  }
  try {
    return run(config, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace parrondo::cli
