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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ponsim/engine.hpp"

namespace ponsim::cli {

enum class SchedulerKind { Ideal, Baseline, Complement };
enum class ComplementMode { Uniform, Constant };
enum class TrafficKind { Uniform, Constant };
enum class OutputFormat { Csv, Json };
enum class SortOrder { Cycle, Waste };

// User-facing experiment settings, in decimal microseconds.
struct ExperimentConfig {
  std::size_t onus = 64;
  std::size_t cycles = 20;
  double delta_x_us = 1.0;
  SchedulerKind scheduler = SchedulerKind::Baseline;
  ComplementMode complement_mode = ComplementMode::Uniform;
  // Both default to delta_x_us when unset.
  std::optional<double> complement_max_us;
  std::optional<double> complement_value_us;
  ComplementScope complement_scope = ComplementScope::PerOnu;
  TrafficKind traffic = TrafficKind::Uniform;
  double traffic_min_us = 1.0;
  double traffic_max_us = 11.8;
  double traffic_length_us = 6.4;
  double base_rtt_min_us = 50.0;
  double base_rtt_max_us = 200.0;
  double guard_time_us = 0.0;
  std::uint64_t seed = 1;
  OutputFormat output = OutputFormat::Csv;
  SortOrder sort = SortOrder::Cycle;

  bool operator==(const ExperimentConfig&) const = default;
};

// Raised for unknown keys, unparsable values and violated constraints.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, const std::string& what);
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// Set one key from its textual value. Does not run cross-field validation.
void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view value);

// Parse flat `key=value` lines (`#` starts a comment) on top of `base`.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base = {});
ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base = {});

// Throws ConfigError naming the first offending key.
void validate(const ExperimentConfig& cfg);

// Text that parse_config() turns back into an equal config.
std::string dump_config(const ExperimentConfig& cfg);

ComplementModel complement_model(const ExperimentConfig& cfg);
Experiment to_experiment(const ExperimentConfig& cfg);

std::string_view to_string(SchedulerKind v);

}  // namespace ponsim::cli
