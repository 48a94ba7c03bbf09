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

#include "ponsim/stochastic.hpp"

#include <stdexcept>
#include <string>

#include "ponsim/detail/overloaded.hpp"

namespace ponsim {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

void require_purpose(const StreamKey& key, Purpose expected, const char* who) {
  if (key.purpose != expected) {
    throw std::invalid_argument(std::string(who) + ": stream key has the wrong purpose");
  }
}

}  // namespace

using detail::overloaded;

std::uint64_t splitmix64_mix(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

KeyedStream::KeyedStream(const StreamKey& key) {
  std::uint64_t h = splitmix64_mix(key.seed + kGolden);
  h = splitmix64_mix(h ^ static_cast<std::uint64_t>(key.cycle));
  h = splitmix64_mix(h ^ static_cast<std::uint64_t>(key.onu));
  h = splitmix64_mix(h ^ static_cast<std::uint64_t>(key.purpose));
  state_ = h;
}

std::uint64_t KeyedStream::next() {
  ++counter_;
  return splitmix64_mix(state_ + counter_ * kGolden);
}

std::int64_t KeyedStream::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("KeyedStream::uniform: lo > hi");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span == ~std::uint64_t{0}) return static_cast<std::int64_t>(next());
  const std::uint64_t range = span + 1;

  // Lemire, "Fast Random Integer Generation in an Interval" (2019).
  unsigned __int128 m = static_cast<unsigned __int128>(next()) * range;
  auto low = static_cast<std::uint64_t>(m);
  if (low < range) {
    const std::uint64_t threshold = (0 - range) % range;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(next()) * range;
      low = static_cast<std::uint64_t>(m);
    }
  }
  const auto offset = static_cast<std::uint64_t>(m >> 64);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + offset);
}

Tick complement_upper_bound(const ComplementModel& model) {
  return std::visit(overloaded{
                        [](const ComplementDisabled&) { return Tick{}; },
                        [](const ComplementUniform& u) { return u.max; },
                        [](const ComplementConstant& c) { return c.value; },
                    },
                    model);
}

double complement_mean(const ComplementModel& model) {
  return std::visit(overloaded{
                        [](const ComplementDisabled&) { return 0.0; },
                        [](const ComplementUniform& u) { return u.max.count() / 2.0; },
                        [](const ComplementConstant& c) { return static_cast<double>(c.value.count()); },
                    },
                    model);
}

double length_mean(const TrafficModel& model) {
  return std::visit(overloaded{
                        [](const LengthConstant& c) { return static_cast<double>(c.length.count()); },
                        [](const LengthUniform& u) { return (u.min.count() + u.max.count()) / 2.0; },
                    },
                    model);
}

void validate(const DeviationModel& model) {
  if (model.half_range < Tick{}) throw std::invalid_argument("deviation half range must be >= 0");
}

void validate(const ComplementModel& model) {
  if (complement_upper_bound(model) < Tick{}) {
    throw std::invalid_argument("complement must be >= 0");
  }
}

void validate(const TrafficModel& model) {
  std::visit(overloaded{
                 [](const LengthConstant& c) {
                   if (c.length <= Tick{}) throw std::invalid_argument("grant length must be > 0");
                 },
                 [](const LengthUniform& u) {
                   if (u.min <= Tick{} || u.max < u.min) {
                     throw std::invalid_argument("grant length range requires 0 < min <= max");
                   }
                 },
             },
             model);
}

Tick sample_deviation(const DeviationModel& model, const StreamKey& key) {
  require_purpose(key, Purpose::Deviation, "sample_deviation");
  const auto h = model.half_range.count();
  if (h == 0) return Tick{};
  KeyedStream stream(key);
  return Tick{stream.uniform(-h, h)};
}

Tick sample_complement(const ComplementModel& model, const StreamKey& key) {
  require_purpose(key, Purpose::Complement, "sample_complement");
  return std::visit(overloaded{
                        [](const ComplementDisabled&) { return Tick{}; },
                        [&](const ComplementUniform& u) {
                          KeyedStream stream(key);
                          return Tick{stream.uniform(0, u.max.count())};
                        },
                        [](const ComplementConstant& c) { return c.value; },
                    },
                    model);
}

Tick sample_length(const TrafficModel& model, const StreamKey& key) {
  require_purpose(key, Purpose::Length, "sample_length");
  return std::visit(overloaded{
                        [](const LengthConstant& c) { return c.length; },
                        [&](const LengthUniform& u) {
                          KeyedStream stream(key);
                          return Tick{stream.uniform(u.min.count(), u.max.count())};
                        },
                    },
                    model);
}

Tick sample_base_rtt(Tick lo, Tick hi, const StreamKey& key) {
  require_purpose(key, Purpose::BaseRtt, "sample_base_rtt");
  KeyedStream stream(key);
  return Tick{stream.uniform(lo.count(), hi.count())};
}

}  // namespace ponsim
