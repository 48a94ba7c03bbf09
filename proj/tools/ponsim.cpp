/*
 * Copyright 2026 The ponsim Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Command-line front end: run, sweep, oracle, plot-data and compare.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ponsim/commands.hpp"
#include "ponsim/config.hpp"

namespace {

constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;

struct Overrides {
  std::string config_path;
  std::optional<std::size_t> onus;
  std::optional<std::size_t> cycles;
  std::optional<double> delta_x_us;
  std::optional<std::string> scheduler;
  std::optional<double> complement_max_us;
  std::optional<double> complement_value_us;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> output;
  std::optional<std::string> sort;
  std::string out;
  bool dump_config = false;
};

void add_common(CLI::App& cmd, Overrides& o) {
  cmd.add_option("--config", o.config_path, "Flat key=value config file");
  cmd.add_option("--onus", o.onus, "Number of ONUs");
  cmd.add_option("--cycles", o.cycles, "Number of cycles");
  cmd.add_option("--delta-x-us", o.delta_x_us, "RTT deviation half range (us)");
  cmd.add_option("--scheduler", o.scheduler, "ideal|baseline|complement");
  cmd.add_option("--complement-max-us", o.complement_max_us, "Upper bound of uniform C (us)");
  cmd.add_option("--complement-value-us", o.complement_value_us, "Constant C (us)");
  cmd.add_option("--seed", o.seed, "64-bit seed");
  cmd.add_option("--output", o.output, "csv|json");
  cmd.add_option("--sort", o.sort, "cycle|waste");
  cmd.add_option("--out", o.out, "Output file (directory for plot-data)");
  cmd.add_flag("--dump-config", o.dump_config, "Print the resolved config and exit");
}

ponsim::cli::ExperimentConfig resolve(const Overrides& o) {
  using ponsim::cli::apply_setting;
  ponsim::cli::ExperimentConfig cfg;
  if (!o.config_path.empty()) cfg = ponsim::cli::load_config_file(o.config_path);
  if (o.onus) cfg.onus = *o.onus;
  if (o.cycles) cfg.cycles = *o.cycles;
  if (o.delta_x_us) cfg.delta_x_us = *o.delta_x_us;
  if (o.scheduler) apply_setting(cfg, "scheduler", *o.scheduler);
  if (o.complement_max_us) cfg.complement_max_us = *o.complement_max_us;
  if (o.complement_value_us) {
    cfg.complement_value_us = *o.complement_value_us;
    cfg.complement_mode = ponsim::cli::ComplementMode::Constant;
  }
  if (o.seed) cfg.seed = *o.seed;
  if (o.output) apply_setting(cfg, "output", *o.output);
  if (o.sort) apply_setting(cfg, "sort", *o.sort);
  ponsim::cli::validate(cfg);
  return cfg;
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write '" + path + "'");
  f << text;
}

std::vector<std::string> split_values(const std::string& list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const auto end = comma == std::string::npos ? list.size() : comma;
    if (end > start) out.push_back(list.substr(start, end - start));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Upstream grant scheduling simulator for RTT estimation error in PONs"};
  app.require_subcommand(1);

  Overrides o;
  auto* run = app.add_subcommand("run", "Per-cycle metrics table");
  auto* sweep = app.add_subcommand("sweep", "Aggregate metrics over a parameter sweep");
  auto* oracle = app.add_subcommand("oracle", "Closed-form expected metrics");
  auto* plot = app.add_subcommand("plot-data", "Waste vs collision-rate series per policy");
  auto* compare = app.add_subcommand("compare", "Baseline vs complement on identical streams");
  for (auto* cmd : {run, sweep, oracle, plot, compare}) add_common(*cmd, o);

  std::string param;
  std::string values;
  sweep->add_option("--param", param, "delta_x_us|onus|complement_max_us|scheduler")->required();
  sweep->add_option("--values", values, "Comma-separated values")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  ponsim::cli::ExperimentConfig cfg;
  try {
    cfg = resolve(o);
  } catch (const ponsim::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  }

  if (o.dump_config) {
    emit(ponsim::cli::dump_config(cfg), o.out);
    return 0;
  }

  try {
    if (run->parsed()) {
      emit(ponsim::cli::cmd_run(cfg), o.out);
    } else if (sweep->parsed()) {
      emit(ponsim::cli::cmd_sweep(cfg, param, split_values(values)), o.out);
    } else if (oracle->parsed()) {
      emit(ponsim::cli::cmd_oracle(cfg), o.out);
    } else if (plot->parsed()) {
      const std::filesystem::path dir = o.out.empty() ? "." : o.out;
      std::filesystem::create_directories(dir);
      for (const auto& [name, body] : ponsim::cli::cmd_plot_data(cfg)) {
        emit(body, (dir / name).string());
        std::cout << (dir / name).string() << "\n";
      }
    } else if (compare->parsed()) {
      emit(ponsim::cli::cmd_compare(cfg), o.out);
    }
  } catch (const ponsim::cli::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return 0;
}
