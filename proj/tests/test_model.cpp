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

#include <stdexcept>

#include "doctest.h"
#include "ponsim/model.hpp"

using namespace ponsim;
using namespace ponsim::literals;

TEST_CASE("collision rate") {
  CHECK(collision_rate(64, 32) == 0.5);
  CHECK(collision_rate(64, 64) == 0.0);
  // 31 of 64 failed: the 48.43 rows of the Δx = 1 us table.
  CHECK(collision_rate(64, 33) == 0.484375);
  CHECK(collision_rate(1, 0) == 1.0);

  CHECK_THROWS_AS(collision_rate(0, 0), std::domain_error);
  CHECK_THROWS_AS(collision_rate(64, 65), std::domain_error);
}

TEST_CASE("utilization") {
  CHECK(utilization(212_us, 21_us) == doctest::Approx(0.9099).epsilon(1e-4));
  CHECK(utilization(37_us, 0_us) == 1.0);
  CHECK(utilization(100_ns, 100_ns) == 0.5);
  CHECK(utilization(0_ns, 10_ns) == 0.0);

  CHECK_THROWS_AS(utilization(0_ns, 0_ns), std::domain_error);
  CHECK_THROWS_AS(utilization(-1_ns, 5_ns), std::domain_error);
  CHECK_THROWS_AS(utilization(5_ns, -1_ns), std::domain_error);
}

TEST_CASE("tick conversions are exact at microsecond scale") {
  CHECK(Tick::from_us(1.0).count() == 1000);
  CHECK(Tick::from_us(11.8).count() == 11800);
  CHECK(Tick::from_us(6.4).count() == 6400);
  CHECK(Tick::from_us(-2.5).count() == -2500);
  CHECK(Tick::us(20).to_us() == 20.0);
  CHECK((5_us - 8_us).count() == -3000);
  CHECK(max(3_ns, -4_ns) == 3_ns);
  CHECK_THROWS_AS(Tick::from_us(1e300), std::out_of_range);
}

TEST_CASE("tick range covers a million ONUs of one-second windows") {
  const Tick second = Tick::us(1'000'000);
  const Tick total = second * 1'000'000;
  CHECK(total.count() == 1'000'000'000'000'000LL);
  CHECK((total + total).count() > 0);
}

TEST_CASE("outcome length and profile deviation") {
  OnuOutcome o{3, 100_ns, 175_ns, -4_ns, OnuStatus::Collided};
  CHECK(o.length() == 75_ns);
  OnuProfile p{0, 120_us, 120_us, Tick::ns(120'250)};
  CHECK(p.deviation() == 250_ns);
}
