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

// Serial reference vs OpenMP cycle loop.

#include <benchmark/benchmark.h>

#include "ponsim/engine.hpp"

namespace {

ponsim::Experiment experiment(std::int64_t cycles) {
  ponsim::Experiment exp;
  exp.cycles = static_cast<std::size_t>(cycles);
  exp.policy = ponsim::ComplementPolicy{ponsim::ComplementUniform{ponsim::Tick::us(1)}};
  return exp;
}

void BM_RunMetricsSerial(benchmark::State& state) {
  const auto exp = experiment(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ponsim::run_metrics_serial(exp));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RunMetricsParallel(benchmark::State& state) {
  const auto exp = experiment(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ponsim::run_metrics(exp));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RunCyclesSerial(benchmark::State& state) {
  const auto exp = experiment(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ponsim::run_cycles_serial(exp));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_RunCyclesParallel(benchmark::State& state) {
  const auto exp = experiment(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(ponsim::run_cycles(exp));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_RunMetricsSerial)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunMetricsParallel)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunCyclesSerial)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RunCyclesParallel)->Arg(10000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
