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

#include <string>
#include <utility>
#include <vector>

#include "ponsim/analysis.hpp"
#include "ponsim/config.hpp"

namespace ponsim::cli {

// Two-decimal fields of one table row, truncated toward zero from the exact
// integer metrics (31 of 64 collided prints as 48.43).
struct TableRow {
  std::size_t cycle = 0;  // 1-based
  std::size_t onus = 0;
  std::string collision_rate_pct;
  std::string waste_us;
  std::string utilization_pct;  // "NA" when undefined
};

TableRow table_row(std::size_t cycle_1based, const CycleMetrics& m);

// Per-cycle table plus a trailing `mean` row (means rounded to 2 decimals).
std::string render_run(const ExperimentConfig& cfg, const std::vector<CycleMetrics>& metrics);
std::string cmd_run(const ExperimentConfig& cfg);

bool is_sweep_parameter(std::string_view name);

// One aggregate row (mean and SE) per value of `parameter`.
std::string cmd_sweep(const ExperimentConfig& cfg, const std::string& parameter,
                      const std::vector<std::string>& values);

// Closed-form expectations for the configured policy.
std::string cmd_oracle(const ExperimentConfig& cfg);

// (waste_us, collision_rate_pct) pairs sorted by waste, for each policy.
// Returns (file name, contents) pairs.
std::vector<std::pair<std::string, std::string>> cmd_plot_data(const ExperimentConfig& cfg);

// Baseline vs complement on identical streams.
std::string cmd_compare(const ExperimentConfig& cfg);

}  // namespace ponsim::cli
