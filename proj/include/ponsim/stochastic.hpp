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
#include <variant>

#include "ponsim/model.hpp"
#include "ponsim/tick.hpp"

namespace ponsim {

enum class Purpose : std::uint8_t { Deviation = 1, Complement = 2, Length = 3, BaseRtt = 4 };

// Identifies one independent random substream. Samples depend only on the
// key, never on how many other keys were drawn before it.
struct StreamKey {
  std::uint64_t seed = 0;
  CycleIndex cycle = 0;
  OnuIndex onu = 0;
  Purpose purpose = Purpose::Deviation;
};

/*
 * Counter-based generator over a StreamKey ("ponsim-v1", frozen).
 *
 * The key is folded into a 64-bit state with the SplitMix64 finalizer:
 *   h = mix(seed); h = mix(h ^ cycle); h = mix(h ^ onu); h = mix(h ^ purpose)
 * and draw c (0-based) is mix(h + (c + 1) * 0x9E3779B97F4A7C15). Bounded
 * integers use Lemire's multiply-shift with rejection, so they are unbiased
 * and identical on every platform.
 */
class KeyedStream {
 public:
  explicit KeyedStream(const StreamKey& key);

  std::uint64_t next();

  // Uniform on the closed interval [lo, hi]; requires lo <= hi.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
  std::uint64_t counter_ = 0;
};

std::uint64_t splitmix64_mix(std::uint64_t x);

enum class DeviationDistribution { Uniform };

struct DeviationModel {
  Tick half_range;  // must be >= 0
  DeviationDistribution distribution = DeviationDistribution::Uniform;
};

struct ComplementDisabled {};
struct ComplementUniform {
  Tick max;
};
struct ComplementConstant {
  Tick value;
};
using ComplementModel = std::variant<ComplementDisabled, ComplementUniform, ComplementConstant>;

struct LengthConstant {
  Tick length;
};
struct LengthUniform {
  Tick min;
  Tick max;
};
using TrafficModel = std::variant<LengthConstant, LengthUniform>;

// Largest value the model can return.
Tick complement_upper_bound(const ComplementModel& model);
double complement_mean(const ComplementModel& model);
double length_mean(const TrafficModel& model);

// Throw std::invalid_argument on a model whose bounds cannot be sampled.
void validate(const DeviationModel& model);
void validate(const ComplementModel& model);
void validate(const TrafficModel& model);

// Each sampler requires the matching key.purpose (std::invalid_argument
// otherwise) and is a pure function of (model, key).
Tick sample_deviation(const DeviationModel& model, const StreamKey& key);
Tick sample_complement(const ComplementModel& model, const StreamKey& key);
Tick sample_length(const TrafficModel& model, const StreamKey& key);

// Uniform integer in [lo, hi] from the BaseRtt substream.
Tick sample_base_rtt(Tick lo, Tick hi, const StreamKey& key);

}  // namespace ponsim
