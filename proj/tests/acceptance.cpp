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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "oracles.hpp"
#include "ponsim/analysis.hpp"
#include "ponsim/commands.hpp"

using namespace ponsim;
using namespace ponsim::literals;

namespace {

constexpr std::size_t kCycles = 10000;

struct Outcome {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
    if (!cond) {
      ok = false;
      detail += " [x]";
    }
  }
  void within(double value, double target, double tol, const std::string& what) {
    expect(std::abs(value - target) <= tol, fmt::format("{}={:.4f} (target {} ± {})", what, value, target, tol));
  }
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail += std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.ok) ++failures;
  std::printf("[%s] %s %s (%.2fs)\n      %s\n", o.ok ? "PASS" : "FAIL", id.c_str(), title.c_str(), secs,
              o.detail.c_str());
  std::fflush(stdout);
}

Experiment baseline(Tick dx) {
  Experiment e;
  e.deviation = DeviationModel{dx};
  e.seed = 20261014;
  return e;
}

double pct(double ratio) { return 100.0 * ratio; }

}  // namespace

int main() {
  criterion("AC1", "baseline, dx = 1 us", [](Outcome& o) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto s = monte_carlo_summary(baseline(1_us), kCycles);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    o.within(pct(s.collision_rate.mean), 49.2, 1.0, "R_col%");
    o.within(s.waste_us.mean, 21.0, 0.5, "W_us");
    o.within(pct(s.utilization.mean), 91.0, 2.0, "U%");
    o.expect(secs < 5.0, fmt::format("runtime={:.3f}s (< 5)", secs));
  });

  criterion("AC2", "baseline, dx = 2 us", [](Outcome& o) {
    const auto s1 = monte_carlo_summary(baseline(1_us), kCycles);
    const auto s2 = monte_carlo_summary(baseline(2_us), kCycles);
    o.within(s2.waste_us.mean, 42.0, 1.0, "W_us");
    o.within(pct(s2.collision_rate.mean), 49.2, 1.0, "R_col%");
    o.within(pct(s2.utilization.mean), 82.0, 2.5, "U%");
    o.within(s2.waste_us.mean / s1.waste_us.mean, 2.0, 0.1, "W ratio dx2/dx1");
    o.expect(s2.utilization.mean < s1.utilization.mean,
             fmt::format("U drops {:.2f}% -> {:.2f}%", pct(s1.utilization.mean), pct(s2.utilization.mean)));
  });

  criterion("AC3a", "uniform complement C ~ U[0, dx], dx = 1 us", [](Outcome& o) {
    Experiment e = baseline(1_us);
    e.policy = ComplementPolicy{ComplementUniform{1_us}};
    const auto s = monte_carlo_summary(e, kCycles);
    o.within(pct(s.collision_rate.mean), 28.7, 1.0, "R_col%");
    o.within(s.waste_us.mean, 41.3, 1.0, "W_us");
  });

  criterion("AC3b-i", "paired: complement collisions pointwise <= baseline", [](Outcome& o) {
    Experiment e = baseline(1_us);
    e.cycles = kCycles;
    e.policy = ComplementPolicy{ComplementUniform{1_us}};
    const auto r = paired_comparison(e);
    std::size_t worse = 0;
    for (const auto& c : r.cycles) worse += (c.complement.n - c.complement.k) > (c.baseline.n - c.baseline.k);
    o.expect(r.pointwise_no_more_collisions && worse == 0,
             fmt::format("cycles with more collisions under complement: {}", worse));
  });

  criterion("AC3b-ii", "paired: complement mean utilization > baseline", [](Outcome& o) {
    Experiment e = baseline(1_us);
    e.cycles = kCycles;
    e.policy = ComplementPolicy{ComplementUniform{1_us}};
    const auto r = paired_comparison(e);
    o.expect(r.complement.utilization.mean > r.baseline.utilization.mean,
             fmt::format("U baseline={:.3f}% complement={:.3f}%", pct(r.baseline.utilization.mean),
                         pct(r.complement.utilization.mean)));
  });

  criterion("AC3c", "constant complement C = 2 dx never collides", [](Outcome& o) {
    Experiment e = baseline(1_us);
    e.cycles = kCycles;
    e.policy = ComplementPolicy{ComplementConstant{2_us}};
    std::size_t collided = 0;
    for (const auto& m : run_metrics(e)) collided += m.n - m.k;
    o.expect(collided == 0, fmt::format("collided ONUs={}", collided));
  });

  criterion("AC4", "closed forms vs Monte-Carlo within 3 SE", [](Outcome& o) {
    std::size_t checks = 0;
    for (std::size_t n : {2u, 8u, 64u}) {
      for (Tick dx : {1_us, 2_us, 5_us}) {
        const double gaps = static_cast<double>(n - 1);
        Experiment b = baseline(dx);
        b.onus = n;
        const auto bs = monte_carlo_summary(b, kCycles);
        Experiment c = b;
        c.policy = ComplementPolicy{ComplementUniform{dx}};
        const auto cs = monte_carlo_summary(c, kCycles);

        const GapDescriptors base_d = policy_descriptors(b.policy, dx);
        const GapDescriptors comp_d = complement_descriptors(dx, ComplementUniform{dx});
        struct Row {
          const char* what;
          double sim, se, expect;
        } rows[] = {
            {"P", bs.collision_rate.mean, bs.collision_rate.se, gaps * base_d.collision_probability / n},
            {"E[W]", bs.waste_us.mean, bs.waste_us.se, expected_waste_per_cycle(n, dx) / 1000.0},
            {"P_c", cs.collision_rate.mean, cs.collision_rate.se, gaps * comp_d.collision_probability / n},
            {"E+_c", cs.waste_us.mean, cs.waste_us.se, gaps * comp_d.expected_positive_gap / 1000.0},
        };
        for (const auto& r : rows) {
          ++checks;
          const double z = r.se > 0 ? std::abs(r.sim - r.expect) / r.se : 0.0;
          if (z > 3.0) {
            o.expect(false, fmt::format("n={} dx={}us {} sim={:.5f} closed={:.5f} z={:.2f}", n, dx.to_us(),
                                        r.what, r.sim, r.expect, z));
          }
        }
      }
    }
    o.expect(std::abs(complement_descriptors(1_us, ComplementUniform{1_us}).collision_probability - 7.0 / 24.0) <
                 1e-12,
             "P_c = 7/24");
    o.expect(std::abs(complement_descriptors(1_us, ComplementUniform{1_us}).expected_positive_gap - 656.25) < 1e-9,
             "E+ = 0.65625 dx");
    o.expect(checks == 36, fmt::format("{} descriptor checks", checks));
  });

  criterion("AC5", "algebraic identities over 1000 random configurations", [](Outcome& o) {
    std::mt19937_64 gen(5);
    std::size_t gap_checks = 0, bad = 0;
    for (int trial = 0; trial < 1000; ++trial) {
      Experiment e;
      e.onus = 1 + gen() % 64;
      e.cycles = 1;
      e.deviation = DeviationModel{Tick{static_cast<Tick::rep>(gen() % 5001)}};
      e.seed = gen();
      const Tick cmax{static_cast<Tick::rep>(gen() % 4001)};
      const SchedulerPolicy policy =
          gen() % 2 ? SchedulerPolicy{BaselinePolicy{}} : SchedulerPolicy{ComplementPolicy{ComplementUniform{cmax}}};
      e.policy = policy;
      const CycleIndex j = gen() % 1000;

      const auto profiles = draw_profiles(e, j);
      const auto lengths = draw_lengths(e, j);
      const Tick origin = default_origin(policy, profiles);
      const auto sched = schedule_cycle(policy, profiles, lengths, j, origin, ScheduleOptions{e.seed});
      const auto out = realize_cycle(sched, profiles);
      const auto m = measure_cycle(out);

      // Gap identity, status rule and per-ONU sums.
      std::size_t collided = 0;
      Tick waste, busy;
      for (std::size_t i = 0; i < e.onus; ++i) {
        const auto& oi = out.outcomes[i];
        const Tick expect = i == 0 ? Tick{}
                                   : sched.entries[i].complement + profiles[i].deviation() -
                                         profiles[i - 1].deviation();
        ++gap_checks;
        bad += oi.gap != expect;
        bad += (oi.status == OnuStatus::Collided) != (oi.gap < Tick{});
        if (oi.status == OnuStatus::Collided) {
          ++collided;
        } else {
          waste += max(oi.gap, Tick{});
          busy += lengths[i];
        }
      }
      bad += m.k + collided != e.onus;
      bad += m.collision_rate != static_cast<double>(e.onus - m.k) / static_cast<double>(e.onus);
      bad += m.waste != waste || m.busy != busy;
      bad += *m.utilization != static_cast<double>(busy.count()) / static_cast<double>((busy + waste).count());

      // Base-RTT invariance and origin shift on the same deviation streams.
      auto moved = profiles;
      for (auto& p : moved) {
        const Tick shift{static_cast<Tick::rep>(gen() % 100'000)};
        p.base_rtt += shift;
        p.rtt_estimate += shift;
        p.rtt_true += shift;
      }
      const Tick origin2 = default_origin(policy, moved) + Tick{static_cast<Tick::rep>(gen() % 1'000'000)};
      const auto out2 =
          realize_cycle(schedule_cycle(policy, moved, lengths, j, origin2, ScheduleOptions{e.seed}), moved);
      const auto m2 = measure_cycle(out2);
      for (std::size_t i = 0; i < e.onus; ++i) {
        bad += out2.outcomes[i].gap != out.outcomes[i].gap;
        bad += out2.outcomes[i].status != out.outcomes[i].status;
      }
      bad += m2.k != m.k || m2.waste != m.waste || m2.busy != m.busy;

      // The ideal scheduler on the same profiles has no gap at all.
      const auto ideal = realize_cycle(
          schedule_cycle(IdealPolicy{}, profiles, lengths, j, default_origin(IdealPolicy{}, profiles)), profiles);
      for (const auto& oi : ideal.outcomes) bad += oi.gap != Tick{};
    }
    o.expect(bad == 0, fmt::format("{} ONU gaps checked, {} violations", gap_checks, bad));
  });

  criterion("AC6", "determinism and order independence", [](Outcome& o) {
    cli::ExperimentConfig cfg;
    cfg.seed = 4242;
    const std::string csv1 = cli::cmd_run(cfg);
    const std::string csv2 = cli::cmd_run(cfg);
    cfg.output = cli::OutputFormat::Json;
    const std::string json1 = cli::cmd_run(cfg);
    const std::string json2 = cli::cmd_run(cfg);
    o.expect(csv1 == csv2, "CSV byte-identical");
    o.expect(json1 == json2, "JSON byte-identical");

    const Experiment e = baseline(1_us);
    const auto par = run_metrics(e);
    const auto ser = run_metrics_serial(e);
    bool same = par.size() == ser.size();
    for (std::size_t j = 0; same && j < par.size(); ++j) same = par[j].waste == ser[j].waste && par[j].k == ser[j].k;
    o.expect(same, "parallel == serial");

    const DeviationModel dev{1_us};
    const Tick a5 = sample_deviation(dev, StreamKey{e.seed, 3, 5, Purpose::Deviation});
    const Tick a3 = sample_deviation(dev, StreamKey{e.seed, 3, 3, Purpose::Deviation});
    const Tick b3 = sample_deviation(dev, StreamKey{e.seed, 3, 3, Purpose::Deviation});
    const Tick b5 = sample_deviation(dev, StreamKey{e.seed, 3, 5, Purpose::Deviation});
    o.expect(a5 == b5 && a3 == b3, "ONU 5 before ONU 3 changes nothing");
  });

  std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
