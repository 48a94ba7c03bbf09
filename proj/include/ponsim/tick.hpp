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

#include <cmath>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace ponsim {

// Signed integer nanoseconds. Every timeline quantity (RTT, grant length,
// complement, gap) is a Tick; only ratios are floating point.
class Tick {
 public:
  using rep = std::int64_t;

  static constexpr rep kPerMicrosecond = 1000;

  constexpr Tick() = default;
  constexpr explicit Tick(rep ns) : ns_(ns) {}

  static constexpr Tick ns(rep v) { return Tick{v}; }
  static constexpr Tick us(rep v) { return Tick{v * kPerMicrosecond}; }

  // Decimal microseconds rounded to the nearest nanosecond.
  static Tick from_us(double us) {
    const double ns = us * static_cast<double>(kPerMicrosecond);
    if (!std::isfinite(ns) || std::fabs(ns) > 9.0e18) {
      throw std::out_of_range("microsecond value out of Tick range");
    }
    return Tick{static_cast<rep>(std::llround(ns))};
  }

  constexpr rep count() const { return ns_; }
  constexpr double to_us() const {
    return static_cast<double>(ns_) / static_cast<double>(kPerMicrosecond);
  }

  constexpr auto operator<=>(const Tick&) const = default;

  constexpr Tick operator-() const { return Tick{-ns_}; }
  constexpr Tick& operator+=(Tick o) { ns_ += o.ns_; return *this; }
  constexpr Tick& operator-=(Tick o) { ns_ -= o.ns_; return *this; }
  friend constexpr Tick operator+(Tick a, Tick b) { return a += b; }
  friend constexpr Tick operator-(Tick a, Tick b) { return a -= b; }
  friend constexpr Tick operator*(Tick a, rep s) { return Tick{a.ns_ * s}; }
  friend constexpr Tick operator*(rep s, Tick a) { return Tick{a.ns_ * s}; }

 private:
  rep ns_ = 0;
};

constexpr Tick max(Tick a, Tick b) { return a < b ? b : a; }
constexpr Tick min(Tick a, Tick b) { return b < a ? b : a; }

namespace literals {
constexpr Tick operator""_ns(unsigned long long v) { return Tick{static_cast<Tick::rep>(v)}; }
constexpr Tick operator""_us(unsigned long long v) { return Tick::us(static_cast<Tick::rep>(v)); }
}  // namespace literals

}  // namespace ponsim
