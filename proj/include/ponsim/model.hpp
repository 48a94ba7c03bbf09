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
#include <optional>
#include <vector>

#include "ponsim/tick.hpp"

namespace ponsim {

using OnuIndex = std::size_t;
using CycleIndex = std::size_t;

struct OnuProfile {
  OnuIndex id = 0;
  Tick base_rtt;
  // Stale value the OLT schedules with.
  Tick rtt_estimate;
  // Value realized on the fiber this cycle.
  Tick rtt_true;

  constexpr Tick deviation() const { return rtt_true - rtt_estimate; }
};

// One row of the OLT's believed timeline.
//   believed_open  = grant_send + rtt_estimate
//   believed_close = believed_open + length
struct GrantEntry {
  OnuIndex onu = 0;
  Tick grant_send;
  Tick believed_open;
  Tick believed_close;
  Tick length;
  Tick complement;
};

struct GrantSchedule {
  CycleIndex cycle = 0;
  std::vector<GrantEntry> entries;
};

enum class OnuStatus { Success, Collided };

struct OnuOutcome {
  OnuIndex onu = 0;
  Tick actual_open;
  Tick actual_close;
  // actual_open minus the predecessor's actual_close; 0 for the first ONU.
  Tick gap;
  OnuStatus status = OnuStatus::Success;

  constexpr Tick length() const { return actual_close - actual_open; }
};

struct CycleOutcome {
  CycleIndex cycle = 0;
  std::vector<OnuOutcome> outcomes;
};

struct CycleMetrics {
  std::size_t n = 0;
  std::size_t k = 0;
  double collision_rate = 0.0;
  Tick waste;
  Tick busy;
  // Empty when busy + waste == 0.
  std::optional<double> utilization;
};

// (n - k) / n. Throws std::domain_error when n == 0 or k > n.
double collision_rate(std::size_t n, std::size_t k);

// busy / (busy + waste). Throws std::domain_error on negative inputs or an
// empty cycle.
double utilization(Tick busy, Tick waste);

}  // namespace ponsim
