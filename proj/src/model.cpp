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

#include "ponsim/model.hpp"

#include <stdexcept>

namespace ponsim {

double collision_rate(std::size_t n, std::size_t k) {
  if (n == 0) throw std::domain_error("collision_rate: n must be positive");
  if (k > n) throw std::domain_error("collision_rate: k exceeds n");
  return static_cast<double>(n - k) / static_cast<double>(n);
}

double utilization(Tick busy, Tick waste) {
  if (busy < Tick{} || waste < Tick{}) {
    throw std::domain_error("utilization: negative busy or waste time");
  }
  const Tick total = busy + waste;
  if (total == Tick{}) throw std::domain_error("utilization: empty cycle");
  return static_cast<double>(busy.count()) / static_cast<double>(total.count());
}

}  // namespace ponsim
