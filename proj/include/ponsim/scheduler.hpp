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

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <variant>

#include "ponsim/model.hpp"
#include "ponsim/stochastic.hpp"

namespace ponsim {

// Schedules with the true RTTs; every realized gap is zero.
struct IdealPolicy {};

// Schedules with the stale estimates and back-to-back windows.
struct BaselinePolicy {};

// How often the complement C is redrawn.
enum class ComplementScope { PerOnu, PerCycle, PerRun };

// Stale estimates, plus a pad C(i) inserted before each window. Under
// realization ONU i sees gap = C(i) + dev(i) - dev(i-1).
struct ComplementPolicy {
  ComplementModel model = ComplementDisabled{};
  ComplementScope scope = ComplementScope::PerOnu;
};

using SchedulerPolicy = std::variant<IdealPolicy, BaselinePolicy, ComplementPolicy>;

std::string_view policy_name(const SchedulerPolicy& policy);

class SchedulingOriginError : public std::runtime_error {
 public:
  SchedulingOriginError(OnuIndex onu, Tick grant_send);
  OnuIndex onu() const { return onu_; }

 private:
  OnuIndex onu_;
};

struct ScheduleOptions {
  std::uint64_t seed = 0;
  // Idle time mandated between consecutive windows.
  Tick guard;
};

// RTT the OLT uses for this ONU under the policy.
Tick rtt_used(const SchedulerPolicy& policy, const OnuProfile& profile);

// The complement C(i) for (cycle, onu); zero except under ComplementPolicy.
Tick complement_for(const SchedulerPolicy& policy, std::uint64_t seed, CycleIndex cycle,
                    OnuIndex onu);

// max RTT used + max complement + 1 us, which keeps every grant_send >= 0.
Tick default_origin(const SchedulerPolicy& policy, std::span<const OnuProfile> profiles);

/*
 * Build the OLT's believed timeline for one cycle:
 *
 *   believed_open[0]  = origin + C(0)
 *   believed_open[i]  = believed_close[i-1] + guard + C(i)      (i >= 1)
 *   believed_close[i] = believed_open[i] + lengths[i]
 *   grant_send[i]     = believed_open[i] - rtt_used(i)
 *
 * Throws std::domain_error for an empty or mismatched input and
 * SchedulingOriginError when some grant_send would be negative.
 */
GrantSchedule schedule_cycle(const SchedulerPolicy& policy, std::span<const OnuProfile> profiles,
                             std::span<const Tick> lengths, CycleIndex cycle, Tick origin,
                             const ScheduleOptions& options = {});

}  // namespace ponsim
