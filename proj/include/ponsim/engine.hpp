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
#include <span>
#include <vector>

#include "ponsim/model.hpp"
#include "ponsim/scheduler.hpp"
#include "ponsim/stochastic.hpp"

namespace ponsim {

// Everything needed to simulate a run, in ticks.
struct Experiment {
  std::size_t onus = 64;
  std::size_t cycles = 20;
  DeviationModel deviation{Tick::us(1)};
  SchedulerPolicy policy = BaselinePolicy{};
  TrafficModel traffic = LengthUniform{Tick::us(1), Tick::ns(11800)};
  Tick base_rtt_min = Tick::us(50);
  Tick base_rtt_max = Tick::us(200);
  Tick guard;
  std::uint64_t seed = 1;

  // Throws std::invalid_argument naming the violated constraint.
  void validate() const;
};

struct CycleResult {
  CycleOutcome outcome;
  CycleMetrics metrics;
};

// actual_open = grant_send + rtt_true, gap against the predecessor's
// actual_close whatever its status, Collided iff gap < 0.
CycleOutcome realize_cycle(const GrantSchedule& schedule, std::span<const OnuProfile> profiles);

// k, R_col, W, H and U over the Success outcomes. Idle time up to `guard`
// per boundary is not counted as waste.
CycleMetrics measure_cycle(const CycleOutcome& outcome, Tick guard = {});

// Per-ONU RTTs for cycle j: base RTT fixed per ONU, deviation redrawn.
std::vector<OnuProfile> draw_profiles(const Experiment& exp, CycleIndex cycle);
std::vector<Tick> draw_lengths(const Experiment& exp, CycleIndex cycle);

// Sample, schedule, realize and measure one cycle.
CycleResult simulate_cycle(const Experiment& exp, CycleIndex cycle);
CycleMetrics simulate_cycle_metrics(const Experiment& exp, CycleIndex cycle);

// Results are in cycle order. The parallel overloads spread cycles over
// OpenMP threads and agree bit-for-bit with the serial ones.
std::vector<CycleResult> run_cycles(const Experiment& exp);
std::vector<CycleResult> run_cycles_serial(const Experiment& exp);
std::vector<CycleMetrics> run_metrics(const Experiment& exp);
std::vector<CycleMetrics> run_metrics_serial(const Experiment& exp);

}  // namespace ponsim
