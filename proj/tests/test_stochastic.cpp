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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "ponsim/stochastic.hpp"

using namespace ponsim;
using namespace ponsim::literals;

namespace {

StreamKey key(std::uint64_t seed, CycleIndex cycle, OnuIndex onu, Purpose p) {
  return StreamKey{seed, cycle, onu, p};
}

}  // namespace

TEST_CASE("keyed stream matches the frozen v1 reference values") {
  // From an independent big-integer implementation of the documented
  // algorithm.
  KeyedStream s(key(42, 5, 3, Purpose::Deviation));
  CHECK(s.next() == 0xa491554c03e7b5daULL);
  CHECK(s.next() == 0x155cb72d8bdf9852ULL);
  CHECK(s.next() == 0xaea389ff5b0cdab8ULL);

  const DeviationModel dev{1_us};
  CHECK(sample_deviation(dev, key(42, 5, 3, Purpose::Deviation)) == 286_ns);
  CHECK(sample_deviation(dev, key(7, 0, 0, Purpose::Deviation)) == Tick::ns(-388));
  CHECK(sample_complement(ComplementUniform{1_us}, key(42, 5, 3, Purpose::Complement)) == 817_ns);
  CHECK(sample_length(LengthUniform{1_us, Tick::ns(11800)}, key(42, 5, 3, Purpose::Length)) ==
        8138_ns);
  CHECK(sample_base_rtt(50_us, 200_us, key(1, 0, 0, Purpose::BaseRtt)) == Tick::ns(195718));
}

TEST_CASE("uniform draws respect closed bounds including degenerate ones") {
  KeyedStream s(key(1, 2, 3, Purpose::Length));
  CHECK(s.uniform(5, 5) == 5);
  for (int i = 0; i < 1000; ++i) {
    const auto v = s.uniform(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
  CHECK_THROWS_AS(s.uniform(4, 3), std::invalid_argument);
  const auto full = s.uniform(INT64_MIN, INT64_MAX);
  (void)full;
}

TEST_CASE("sample_deviation") {
  SUBCASE("zero half range") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
      CHECK(sample_deviation(DeviationModel{0_ns}, key(seed, 1, 2, Purpose::Deviation)) == 0_ns);
    }
  }
  SUBCASE("deterministic and bounded") {
    const DeviationModel m{1_us};
    const auto k = key(99, 17, 4, Purpose::Deviation);
    const Tick first = sample_deviation(m, k);
    CHECK(first >= -1_us);
    CHECK(first <= 1_us);
    for (int i = 0; i < 10; ++i) CHECK(sample_deviation(m, k) == first);
  }
  SUBCASE("law of large numbers over a million keys") {
    const DeviationModel m{1_us};
    double sum = 0.0;
    Tick lo = 1_us, hi = -1_us;
    for (std::uint64_t i = 0; i < 1'000'000; ++i) {
      const Tick d = sample_deviation(m, key(3, i / 64, i % 64, Purpose::Deviation));
      sum += static_cast<double>(d.count());
      lo = min(lo, d);
      hi = max(hi, d);
    }
    CHECK(std::abs(sum / 1e6) <= 10.0);
    CHECK(lo <= Tick::ns(-990));
    CHECK(hi >= 990_ns);
  }
  CHECK_THROWS_AS(sample_deviation(DeviationModel{1_us}, key(1, 0, 0, Purpose::Length)),
                  std::invalid_argument);
}

TEST_CASE("sample_complement") {
  CHECK(sample_complement(ComplementDisabled{}, key(1, 2, 3, Purpose::Complement)) == 0_ns);
  CHECK(sample_complement(ComplementConstant{1440_ns}, key(1, 2, 3, Purpose::Complement)) == 1440_ns);
  CHECK(sample_complement(ComplementConstant{1440_ns}, key(8, 0, 9, Purpose::Complement)) == 1440_ns);

  double sum = 0.0;
  for (std::uint64_t i = 0; i < 1'000'000; ++i) {
    const Tick c = sample_complement(ComplementUniform{1_us}, key(11, i, 0, Purpose::Complement));
    REQUIRE(c >= 0_ns);
    REQUIRE(c <= 1_us);
    sum += static_cast<double>(c.count());
  }
  CHECK(std::abs(sum / 1e6 - 500.0) <= 10.0);
  CHECK_THROWS_AS(sample_complement(ComplementDisabled{}, key(1, 0, 0, Purpose::Deviation)),
                  std::invalid_argument);
}

TEST_CASE("sample_length") {
  CHECK(sample_length(LengthConstant{6400_ns}, key(5, 5, 5, Purpose::Length)) == 6400_ns);

  const TrafficModel m = LengthUniform{1000_ns, 12800_ns};
  double sum = 0.0;
  for (std::uint64_t i = 0; i < 1'000'000; ++i) {
    const Tick l = sample_length(m, key(21, i % 1000, i / 1000, Purpose::Length));
    REQUIRE(l >= 1000_ns);
    REQUIRE(l <= 12800_ns);
    sum += static_cast<double>(l.count());
  }
  CHECK(sum / 1e6 == doctest::Approx(6900.0).epsilon(0.01));
  CHECK(length_mean(m) == 6900.0);
}

TEST_CASE("property: bounds hold for random keys and ranges") {
  std::mt19937_64 gen(20261014);
  for (int trial = 0; trial < 20000; ++trial) {
    const StreamKey base{gen(), gen() % 100000, gen() % 4096, Purpose::Deviation};
    const Tick half{static_cast<Tick::rep>(gen() % 1'000'000)};
    const Tick d = sample_deviation(DeviationModel{half}, base);
    REQUIRE(d >= -half);
    REQUIRE(d <= half);

    StreamKey ck = base;
    ck.purpose = Purpose::Complement;
    const Tick c = sample_complement(ComplementUniform{half}, ck);
    REQUIRE(c >= 0_ns);
    REQUIRE(c <= half);

    StreamKey lk = base;
    lk.purpose = Purpose::Length;
    const Tick lo{1 + static_cast<Tick::rep>(gen() % 10000)};
    const Tick hi = lo + Tick{static_cast<Tick::rep>(gen() % 10000)};
    const Tick l = sample_length(LengthUniform{lo, hi}, lk);
    REQUIRE(l >= lo);
    REQUIRE(l <= hi);
  }
}

TEST_CASE("samples do not depend on sampling order") {
  const DeviationModel m{1_us};
  const Tick five_first = sample_deviation(m, key(4, 5, 5, Purpose::Deviation));
  const Tick three_after = sample_deviation(m, key(4, 5, 3, Purpose::Deviation));
  const Tick three_first = sample_deviation(m, key(4, 5, 3, Purpose::Deviation));
  const Tick five_after = sample_deviation(m, key(4, 5, 5, Purpose::Deviation));
  CHECK(five_first == five_after);
  CHECK(three_first == three_after);
}

TEST_CASE("distinct keys give distinct substreams") {
  std::set<std::uint64_t> firsts;
  for (CycleIndex j = 0; j < 16; ++j) {
    for (OnuIndex i = 0; i < 16; ++i) {
      for (Purpose p : {Purpose::Deviation, Purpose::Complement, Purpose::Length, Purpose::BaseRtt}) {
        firsts.insert(KeyedStream(key(1, j, i, p)).next());
      }
    }
  }
  CHECK(firsts.size() == 16 * 16 * 4);
}

TEST_CASE("deviation and complement streams of one ONU are uncorrelated") {
  double sxy = 0.0, sx = 0.0, sy = 0.0, sxx = 0.0, syy = 0.0;
  const int n = 200000;
  for (int i = 0; i < n; ++i) {
    const double x = static_cast<double>(
        sample_deviation(DeviationModel{1_us}, key(2, i, 7, Purpose::Deviation)).count());
    const double y = static_cast<double>(
        sample_complement(ComplementUniform{1_us}, key(2, i, 7, Purpose::Complement)).count());
    sx += x;
    sy += y;
    sxy += x * y;
    sxx += x * x;
    syy += y * y;
  }
  const double cov = sxy / n - (sx / n) * (sy / n);
  const double corr = cov / std::sqrt((sxx / n - (sx / n) * (sx / n)) * (syy / n - (sy / n) * (sy / n)));
  // Null SE is 1/sqrt(n) ~ 0.0022.
  CHECK(std::abs(corr) < 0.01);
}

TEST_CASE("model validation") {
  CHECK_THROWS_AS(validate(DeviationModel{-1_ns}), std::invalid_argument);
  CHECK_THROWS_AS(validate(ComplementModel{ComplementConstant{-1_ns}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(TrafficModel{LengthConstant{0_ns}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(TrafficModel{LengthUniform{0_ns, 5_ns}}), std::invalid_argument);
  CHECK_THROWS_AS(validate(TrafficModel{LengthUniform{6_ns, 5_ns}}), std::invalid_argument);
  CHECK_NOTHROW(validate(TrafficModel{LengthUniform{5_ns, 5_ns}}));
}
