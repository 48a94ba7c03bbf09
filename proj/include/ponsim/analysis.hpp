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
#include <span>
#include <variant>
#include <vector>

#include "ponsim/engine.hpp"

namespace ponsim {

/*
 * Closed-form descriptors of the boundary gap
 *
 *   G = C + D,   D = dev(i) - dev(i-1),
 *
 * where dev ~ U[-dx, dx] i.i.d., so D is triangular on [-2dx, 2dx] with
 * density (2dx - |x|) / (4dx^2). With w = 2dx and a constant pad c in [0, w]:
 *
 *   P(c + D < 0)      = (w - c)^2 / (2 w^2)
 *   E[(c + D)^+]      = c + (w - c)^3 / (6 w^2)
 *
 * and both are averaged over C's law for the uniform pad. These are the
 * continuous forms; the engine draws integer ticks, which differ by O(1/dx).
 */
struct GapDescriptors {
  double collision_probability = 0.0;
  // E[G^+] in ticks.
  double expected_positive_gap = 0.0;
};

struct TriangularDiff {
  Tick half_range;
};
struct ShiftedByComplement {
  Tick half_range;
  ComplementModel complement;
};

struct GapDistribution {
  std::variant<TriangularDiff, ShiftedByComplement> kind;
  GapDescriptors descriptors;
};

// Baseline: (n - 1) * dx / 3 ticks per cycle.
double expected_waste_per_cycle(std::size_t n, Tick delta_x);

// Baseline: (n - 1) / (2n).
double expected_collision_rate_baseline(std::size_t n);

// Requires delta_x > 0 (std::domain_error otherwise).
GapDescriptors complement_descriptors(Tick delta_x, const ComplementModel& model);

GapDistribution gap_distribution(Tick delta_x, const ComplementModel& model = ComplementDisabled{});

// Descriptors for any policy, any dx >= 0. A guard shifts the collision
// threshold but not the waste, which is measured beyond the guard.
GapDescriptors policy_descriptors(const SchedulerPolicy& policy, Tick delta_x, Tick guard = {});

struct Prediction {
  double collision_rate = 0.0;
  double waste = 0.0;  // ticks per cycle
  // E[H] / (E[H] + E[W]) with E[H] = (1 + (n-1)(1-P)) * mean length. A
  // ratio of means, so only approximately the mean per-cycle U.
  double utilization = 1.0;
};

Prediction predict(const Experiment& exp);

struct MetricStat {
  double mean = 0.0;
  double se = 0.0;  // sample standard deviation / sqrt(count)
};

struct MonteCarloSummary {
  std::size_t cycles = 0;
  MetricStat collision_rate;
  MetricStat waste_us;
  MetricStat utilization;  // over cycles where U is defined
};

MonteCarloSummary summarize(std::span<const CycleMetrics> metrics);

// Runs `cycles` cycles of `exp` and summarizes them.
MonteCarloSummary monte_carlo_summary(Experiment exp, std::size_t cycles);

struct PairedCycle {
  CycleIndex cycle = 0;
  CycleMetrics baseline;
  CycleMetrics complement;
};

struct PairedReport {
  std::vector<PairedCycle> cycles;
  MonteCarloSummary baseline;
  MonteCarloSummary complement;
  double delta_collision_rate = 0.0;  // complement - baseline
  double delta_waste_us = 0.0;
  double delta_utilization = 0.0;
  // No cycle has more collisions under the complement than under baseline.
  bool pointwise_no_more_collisions = true;
};

// Runs Baseline and exp.policy (which must be ComplementPolicy) on the same
// deviation and length streams.
PairedReport paired_comparison(const Experiment& exp);

}  // namespace ponsim
