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

#include "ponsim/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "ponsim/detail/overloaded.hpp"

namespace ponsim {

using detail::overloaded;

namespace {

// Pad-indexed collision probability and expected positive gap for a
// triangular D of width w = 2dx, with their antiderivatives in c.
struct PadCurves {
  double w;

  double collision(double c) const {
    if (c >= w) return 0.0;
    const double r = w - c;
    return r * r / (2.0 * w * w);
  }
  double collision_integral(double c) const {
    if (c >= w) return 0.0;
    const double r = w - c;
    return -r * r * r / (6.0 * w * w);
  }
  double positive_gap(double c) const {
    if (c >= w) return c;
    const double r = w - c;
    return c + r * r * r / (6.0 * w * w);
  }
  double positive_gap_integral(double c) const {
    if (c >= w) return c * c / 2.0;
    const double r = w - c;
    return c * c / 2.0 - r * r * r * r / (24.0 * w * w);
  }
};

// Descriptors for a pad uniform on [lo, hi] (lo == hi is a constant pad).
// `collision_shift` moves only the collision threshold.
GapDescriptors uniform_pad(double dx, double lo, double hi, double collision_shift) {
  const PadCurves f{2.0 * dx};
  GapDescriptors d;
  if (hi <= lo) {
    d.collision_probability = f.collision(lo + collision_shift);
    d.expected_positive_gap = f.positive_gap(lo);
    return d;
  }
  const double span = hi - lo;
  d.collision_probability =
      (f.collision_integral(hi + collision_shift) - f.collision_integral(lo + collision_shift)) / span;
  d.expected_positive_gap = (f.positive_gap_integral(hi) - f.positive_gap_integral(lo)) / span;
  return d;
}

GapDescriptors descriptors_for(double dx, const ComplementModel& model, double shift) {
  return std::visit(overloaded{
                        [&](const ComplementDisabled&) { return uniform_pad(dx, 0.0, 0.0, shift); },
                        [&](const ComplementUniform& u) {
                          return uniform_pad(dx, 0.0, static_cast<double>(u.max.count()), shift);
                        },
                        [&](const ComplementConstant& c) {
                          const auto v = static_cast<double>(c.value.count());
                          return uniform_pad(dx, v, v, shift);
                        },
                    },
                    model);
}

}  // namespace

double expected_waste_per_cycle(std::size_t n, Tick delta_x) {
  if (n == 0) throw std::domain_error("expected_waste_per_cycle: n must be >= 1");
  if (delta_x < Tick{}) throw std::domain_error("expected_waste_per_cycle: negative dx");
  return static_cast<double>(n - 1) * static_cast<double>(delta_x.count()) / 3.0;
}

double expected_collision_rate_baseline(std::size_t n) {
  if (n == 0) throw std::domain_error("expected_collision_rate_baseline: n must be >= 1");
  return static_cast<double>(n - 1) / (2.0 * static_cast<double>(n));
}

GapDescriptors complement_descriptors(Tick delta_x, const ComplementModel& model) {
  if (delta_x <= Tick{}) throw std::domain_error("complement_descriptors: dx must be > 0");
  if (complement_upper_bound(model) < Tick{}) {
    throw std::domain_error("complement_descriptors: negative complement");
  }
  return descriptors_for(static_cast<double>(delta_x.count()), model, 0.0);
}

GapDistribution gap_distribution(Tick delta_x, const ComplementModel& model) {
  GapDistribution g;
  if (std::holds_alternative<ComplementDisabled>(model)) {
    g.kind = TriangularDiff{delta_x};
  } else {
    g.kind = ShiftedByComplement{delta_x, model};
  }
  g.descriptors = complement_descriptors(delta_x, model);
  return g;
}

GapDescriptors policy_descriptors(const SchedulerPolicy& policy, Tick delta_x, Tick guard) {
  if (delta_x < Tick{} || guard < Tick{}) throw std::domain_error("policy_descriptors: negative input");
  if (std::holds_alternative<IdealPolicy>(policy)) return {};
  ComplementModel model = ComplementDisabled{};
  if (const auto* cp = std::get_if<ComplementPolicy>(&policy)) model = cp->model;
  if (delta_x == Tick{}) {
    // D == 0: every gap is C + guard >= 0.
    return GapDescriptors{0.0, complement_mean(model)};
  }
  return descriptors_for(static_cast<double>(delta_x.count()), model,
                         static_cast<double>(guard.count()));
}

Prediction predict(const Experiment& exp) {
  const GapDescriptors d = policy_descriptors(exp.policy, exp.deviation.half_range, exp.guard);
  const auto gaps = static_cast<double>(exp.onus - 1);
  Prediction p;
  p.collision_rate = gaps * d.collision_probability / static_cast<double>(exp.onus);
  p.waste = gaps * d.expected_positive_gap;
  const double busy = (1.0 + gaps * (1.0 - d.collision_probability)) * length_mean(exp.traffic);
  p.utilization = busy / (busy + p.waste);
  return p;
}

namespace {

class RunningStat {
 public:
  void add(double x) {
    ++n_;
    const double delta = x - mean_;
    mean_ += delta / static_cast<double>(n_);
    m2_ += delta * (x - mean_);
  }
  MetricStat stat() const {
    MetricStat s;
    s.mean = mean_;
    if (n_ > 1) s.se = std::sqrt(m2_ / static_cast<double>(n_ - 1) / static_cast<double>(n_));
    return s;
  }

 private:
  std::size_t n_ = 0;
  double mean_ = 0.0;
  double m2_ = 0.0;
};

}  // namespace

MonteCarloSummary summarize(std::span<const CycleMetrics> metrics) {
  RunningStat rc, rw, ru;
  for (const auto& m : metrics) {
    rc.add(m.collision_rate);
    rw.add(m.waste.to_us());
    if (m.utilization) ru.add(*m.utilization);
  }
  MonteCarloSummary s;
  s.cycles = metrics.size();
  s.collision_rate = rc.stat();
  s.waste_us = rw.stat();
  s.utilization = ru.stat();
  return s;
}

MonteCarloSummary monte_carlo_summary(Experiment exp, std::size_t cycles) {
  if (cycles == 0) throw std::invalid_argument("monte_carlo_summary: cycles must be >= 1");
  exp.cycles = cycles;
  const auto metrics = run_metrics(exp);
  return summarize(metrics);
}

PairedReport paired_comparison(const Experiment& exp) {
  if (!std::holds_alternative<ComplementPolicy>(exp.policy)) {
    throw std::invalid_argument("paired_comparison: experiment policy must be complement");
  }
  Experiment base = exp;
  base.policy = BaselinePolicy{};
  const auto b = run_metrics(base);
  const auto c = run_metrics(exp);

  PairedReport r;
  r.cycles.reserve(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) {
    r.cycles.push_back(PairedCycle{j, b[j], c[j]});
    if (c[j].n - c[j].k > b[j].n - b[j].k) r.pointwise_no_more_collisions = false;
  }
  r.baseline = summarize(b);
  r.complement = summarize(c);
  r.delta_collision_rate = r.complement.collision_rate.mean - r.baseline.collision_rate.mean;
  r.delta_waste_us = r.complement.waste_us.mean - r.baseline.waste_us.mean;
  r.delta_utilization = r.complement.utilization.mean - r.baseline.utilization.mean;
  return r;
}

}  // namespace ponsim
