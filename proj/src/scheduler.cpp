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

#include "ponsim/scheduler.hpp"

#include <string>

#include "ponsim/detail/overloaded.hpp"

namespace ponsim {

using detail::overloaded;

std::string_view policy_name(const SchedulerPolicy& policy) {
  return std::visit(overloaded{
                        [](const IdealPolicy&) { return std::string_view{"ideal"}; },
                        [](const BaselinePolicy&) { return std::string_view{"baseline"}; },
                        [](const ComplementPolicy&) { return std::string_view{"complement"}; },
                    },
                    policy);
}

SchedulingOriginError::SchedulingOriginError(OnuIndex onu, Tick grant_send)
    : std::runtime_error("scheduling origin too early: ONU " + std::to_string(onu) +
                         " would receive its grant at " + std::to_string(grant_send.count()) +
                         " ns"),
      onu_(onu) {}

Tick rtt_used(const SchedulerPolicy& policy, const OnuProfile& profile) {
  return std::holds_alternative<IdealPolicy>(policy) ? profile.rtt_true : profile.rtt_estimate;
}

Tick complement_for(const SchedulerPolicy& policy, std::uint64_t seed, CycleIndex cycle,
                    OnuIndex onu) {
  const auto* cp = std::get_if<ComplementPolicy>(&policy);
  if (cp == nullptr) return Tick{};
  StreamKey key{seed, cycle, onu, Purpose::Complement};
  switch (cp->scope) {
    case ComplementScope::PerOnu:
      break;
    case ComplementScope::PerCycle:
      key.onu = 0;
      break;
    case ComplementScope::PerRun:
      key.cycle = 0;
      key.onu = 0;
      break;
  }
  return sample_complement(cp->model, key);
}

Tick default_origin(const SchedulerPolicy& policy, std::span<const OnuProfile> profiles) {
  Tick widest;
  for (const auto& p : profiles) widest = max(widest, rtt_used(policy, p));
  Tick pad;
  if (const auto* cp = std::get_if<ComplementPolicy>(&policy)) {
    pad = complement_upper_bound(cp->model);
  }
  return widest + pad + Tick::us(1);
}

GrantSchedule schedule_cycle(const SchedulerPolicy& policy, std::span<const OnuProfile> profiles,
                             std::span<const Tick> lengths, CycleIndex cycle, Tick origin,
                             const ScheduleOptions& options) {
  if (profiles.empty()) throw std::domain_error("schedule_cycle: no ONUs");
  if (profiles.size() != lengths.size()) {
    throw std::domain_error("schedule_cycle: profiles and lengths differ in size");
  }

  GrantSchedule schedule;
  schedule.cycle = cycle;
  schedule.entries.reserve(profiles.size());

  Tick boundary = origin;
  for (OnuIndex i = 0; i < profiles.size(); ++i) {
    if (lengths[i] <= Tick{}) throw std::domain_error("schedule_cycle: grant length must be > 0");
    GrantEntry e;
    e.onu = i;
    e.length = lengths[i];
    e.complement = complement_for(policy, options.seed, cycle, i);
    e.believed_open = boundary + e.complement + (i > 0 ? options.guard : Tick{});
    e.believed_close = e.believed_open + e.length;
    e.grant_send = e.believed_open - rtt_used(policy, profiles[i]);
    if (e.grant_send < Tick{}) throw SchedulingOriginError(i, e.grant_send);
    boundary = e.believed_close;
    schedule.entries.push_back(e);
  }
  return schedule;
}

}  // namespace ponsim
