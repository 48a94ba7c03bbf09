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

#include "ponsim/engine.hpp"

#include <exception>
#include <stdexcept>

namespace ponsim {

void Experiment::validate() const {
  if (onus == 0) throw std::invalid_argument("onus must be >= 1");
  if (cycles == 0) throw std::invalid_argument("cycles must be >= 1");
  ponsim::validate(deviation);
  ponsim::validate(traffic);
  if (const auto* cp = std::get_if<ComplementPolicy>(&policy)) ponsim::validate(cp->model);
  if (guard < Tick{}) throw std::invalid_argument("guard time must be >= 0");
  if (base_rtt_max < base_rtt_min) throw std::invalid_argument("base RTT range is empty");
  if (base_rtt_min <= deviation.half_range) {
    throw std::invalid_argument("base RTT minimum must exceed the deviation half range");
  }
}

CycleOutcome realize_cycle(const GrantSchedule& schedule, std::span<const OnuProfile> profiles) {
  if (schedule.entries.size() != profiles.size()) {
    throw std::domain_error("realize_cycle: schedule and profiles differ in size");
  }
  CycleOutcome out;
  out.cycle = schedule.cycle;
  out.outcomes.reserve(profiles.size());
  for (std::size_t i = 0; i < profiles.size(); ++i) {
    const GrantEntry& e = schedule.entries[i];
    OnuOutcome o;
    o.onu = e.onu;
    o.actual_open = e.grant_send + profiles[i].rtt_true;
    o.actual_close = o.actual_open + e.length;
    o.gap = i == 0 ? Tick{} : o.actual_open - out.outcomes.back().actual_close;
    o.status = o.gap < Tick{} ? OnuStatus::Collided : OnuStatus::Success;
    out.outcomes.push_back(o);
  }
  return out;
}

CycleMetrics measure_cycle(const CycleOutcome& outcome, Tick guard) {
  if (outcome.outcomes.empty()) throw std::domain_error("measure_cycle: empty cycle");
  CycleMetrics m;
  m.n = outcome.outcomes.size();
  for (std::size_t i = 0; i < outcome.outcomes.size(); ++i) {
    const OnuOutcome& o = outcome.outcomes[i];
    if (o.status != OnuStatus::Success) continue;
    ++m.k;
    m.busy += o.length();
    if (i > 0) m.waste += max(o.gap - guard, Tick{});
  }
  m.collision_rate = collision_rate(m.n, m.k);
  if (m.busy + m.waste > Tick{}) m.utilization = utilization(m.busy, m.waste);
  return m;
}

std::vector<OnuProfile> draw_profiles(const Experiment& exp, CycleIndex cycle) {
  std::vector<OnuProfile> profiles(exp.onus);
  for (OnuIndex i = 0; i < exp.onus; ++i) {
    OnuProfile& p = profiles[i];
    p.id = i;
    p.base_rtt = sample_base_rtt(exp.base_rtt_min, exp.base_rtt_max,
                                 StreamKey{exp.seed, 0, i, Purpose::BaseRtt});
    p.rtt_estimate = p.base_rtt;
    p.rtt_true =
        p.base_rtt + sample_deviation(exp.deviation, StreamKey{exp.seed, cycle, i, Purpose::Deviation});
  }
  return profiles;
}

std::vector<Tick> draw_lengths(const Experiment& exp, CycleIndex cycle) {
  std::vector<Tick> lengths(exp.onus);
  for (OnuIndex i = 0; i < exp.onus; ++i) {
    lengths[i] = sample_length(exp.traffic, StreamKey{exp.seed, cycle, i, Purpose::Length});
  }
  return lengths;
}

CycleResult simulate_cycle(const Experiment& exp, CycleIndex cycle) {
  const auto profiles = draw_profiles(exp, cycle);
  const auto lengths = draw_lengths(exp, cycle);
  const Tick origin = default_origin(exp.policy, profiles);
  const auto schedule =
      schedule_cycle(exp.policy, profiles, lengths, cycle, origin, ScheduleOptions{exp.seed, exp.guard});
  CycleResult r;
  r.outcome = realize_cycle(schedule, profiles);
  r.metrics = measure_cycle(r.outcome, exp.guard);
  return r;
}

CycleMetrics simulate_cycle_metrics(const Experiment& exp, CycleIndex cycle) {
  return simulate_cycle(exp, cycle).metrics;
}

namespace {

template <class Result, class Fn>
std::vector<Result> parallel_over_cycles(const Experiment& exp, Fn&& fn) {
  exp.validate();
  const auto count = static_cast<std::int64_t>(exp.cycles);
  std::vector<Result> results(exp.cycles);
  std::vector<std::exception_ptr> errors(exp.cycles);
#pragma omp parallel for schedule(static)
  for (std::int64_t j = 0; j < count; ++j) {
    try {
      results[j] = fn(exp, static_cast<CycleIndex>(j));
    } catch (...) {
      errors[j] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return results;
}

template <class Result, class Fn>
std::vector<Result> serial_over_cycles(const Experiment& exp, Fn&& fn) {
  exp.validate();
  std::vector<Result> results;
  results.reserve(exp.cycles);
  for (CycleIndex j = 0; j < exp.cycles; ++j) results.push_back(fn(exp, j));
  return results;
}

}  // namespace

std::vector<CycleResult> run_cycles(const Experiment& exp) {
  return parallel_over_cycles<CycleResult>(exp, simulate_cycle);
}

std::vector<CycleResult> run_cycles_serial(const Experiment& exp) {
  return serial_over_cycles<CycleResult>(exp, simulate_cycle);
}

std::vector<CycleMetrics> run_metrics(const Experiment& exp) {
  return parallel_over_cycles<CycleMetrics>(exp, simulate_cycle_metrics);
}

std::vector<CycleMetrics> run_metrics_serial(const Experiment& exp) {
  return serial_over_cycles<CycleMetrics>(exp, simulate_cycle_metrics);
}

}  // namespace ponsim
