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

#include "ponsim/commands.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <numeric>

#include <fmt/format.h>
#include "json.hpp"

namespace ponsim::cli {

namespace {

using Json = nlohmann::ordered_json;

// floor(10000 * num / den) rendered as a two-decimal percentage.
std::string percent_truncated(std::int64_t num, std::int64_t den) {
  const auto scaled = static_cast<std::int64_t>(static_cast<__int128>(num) * 10000 / den);
  return fmt::format("{}.{:02}", scaled / 100, scaled % 100);
}

std::string micros_truncated(Tick t) {
  const std::int64_t hundredths = t.count() / 10;
  const char* sign = hundredths < 0 ? "-" : "";
  const std::int64_t mag = hundredths < 0 ? -hundredths : hundredths;
  return fmt::format("{}{}.{:02}", sign, mag / 100, mag % 100);
}

std::string fixed2(double v) {
  std::string s = fmt::format("{:.2f}", v);
  if (s == "-0.00") s = "0.00";
  return s;
}

double as_number(const std::string& s) {
  double v = 0.0;
  std::from_chars(s.data(), s.data() + s.size(), v);
  return v;
}

Json number_or_null(const std::string& s) {
  if (s == "NA") return nullptr;
  return as_number(s);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::vector<std::size_t> waste_order(const std::vector<CycleMetrics>& metrics) {
  std::vector<std::size_t> order(metrics.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return metrics[a].waste < metrics[b].waste;
  });
  return order;
}

struct SummaryFields {
  std::string collision_rate_pct, collision_rate_se_pct;
  std::string waste_us, waste_se_us;
  std::string utilization_pct, utilization_se_pct;
};

SummaryFields summary_fields(const MonteCarloSummary& s) {
  return SummaryFields{
      fixed2(100.0 * s.collision_rate.mean), fixed2(100.0 * s.collision_rate.se),
      fixed2(s.waste_us.mean),               fixed2(s.waste_us.se),
      fixed2(100.0 * s.utilization.mean),    fixed2(100.0 * s.utilization.se),
  };
}

}  // namespace

TableRow table_row(std::size_t cycle_1based, const CycleMetrics& m) {
  TableRow r;
  r.cycle = cycle_1based;
  r.onus = m.n;
  r.collision_rate_pct =
      percent_truncated(static_cast<std::int64_t>(m.n - m.k), static_cast<std::int64_t>(m.n));
  r.waste_us = micros_truncated(m.waste);
  r.utilization_pct =
      m.utilization ? percent_truncated(m.busy.count(), (m.busy + m.waste).count()) : "NA";
  return r;
}

std::string render_run(const ExperimentConfig& cfg, const std::vector<CycleMetrics>& metrics) {
  std::vector<std::size_t> order(metrics.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  if (cfg.sort == SortOrder::Waste) order = waste_order(metrics);

  const MonteCarloSummary summary = summarize(metrics);
  const SummaryFields mean = summary_fields(summary);

  if (cfg.output == OutputFormat::Json) {
    Json rows = Json::array();
    for (std::size_t j : order) {
      const TableRow r = table_row(j + 1, metrics[j]);
      rows.push_back(Json{{"cycle", r.cycle},
                          {"onu", r.onus},
                          {"collision_rate", as_number(r.collision_rate_pct)},
                          {"waste_us", as_number(r.waste_us)},
                          {"line_utilization", number_or_null(r.utilization_pct)}});
    }
    Json doc{{"scheduler", to_string(cfg.scheduler)},
             {"onu", cfg.onus},
             {"seed", cfg.seed},
             {"rows", rows},
             {"mean",
              Json{{"collision_rate", as_number(mean.collision_rate_pct)},
                   {"waste_us", as_number(mean.waste_us)},
                   {"line_utilization", as_number(mean.utilization_pct)}}}};
    return dump(doc);
  }

  std::string out = "Cycle,ONU,Collision Rate (%),Waste of Trans Time (us),Line Utilization (%)\n";
  for (std::size_t j : order) {
    const TableRow r = table_row(j + 1, metrics[j]);
    out += fmt::format("{},{},{},{},{}\n", r.cycle, r.onus, r.collision_rate_pct, r.waste_us,
                       r.utilization_pct);
  }
  out += fmt::format("mean,{},{},{},{}\n", cfg.onus, mean.collision_rate_pct, mean.waste_us,
                     mean.utilization_pct);
  return out;
}

std::string cmd_run(const ExperimentConfig& cfg) {
  return render_run(cfg, run_metrics(to_experiment(cfg)));
}

bool is_sweep_parameter(std::string_view name) {
  return name == "delta_x_us" || name == "onus" || name == "complement_max_us" || name == "scheduler";
}

std::string cmd_sweep(const ExperimentConfig& cfg, const std::string& parameter,
                      const std::vector<std::string>& values) {
  if (!is_sweep_parameter(parameter)) {
    throw ConfigError("param", "cannot sweep '" + parameter +
                                   "' (expected delta_x_us|onus|complement_max_us|scheduler)");
  }
  if (values.empty()) throw ConfigError("values", "no sweep values given");

  Json rows = Json::array();
  std::string csv =
      "parameter,value,cycles,collision_rate_pct,collision_rate_se_pct,waste_us,waste_se_us,"
      "line_utilization_pct,line_utilization_se_pct\n";
  for (const auto& value : values) {
    ExperimentConfig point = cfg;
    apply_setting(point, parameter, value);
    const MonteCarloSummary s = summarize(run_metrics(to_experiment(point)));
    const SummaryFields f = summary_fields(s);
    csv += fmt::format("{},{},{},{},{},{},{},{},{}\n", parameter, value, s.cycles, f.collision_rate_pct,
                       f.collision_rate_se_pct, f.waste_us, f.waste_se_us, f.utilization_pct,
                       f.utilization_se_pct);
    rows.push_back(Json{{"parameter", parameter},
                        {"value", value},
                        {"cycles", s.cycles},
                        {"collision_rate", as_number(f.collision_rate_pct)},
                        {"collision_rate_se", as_number(f.collision_rate_se_pct)},
                        {"waste_us", as_number(f.waste_us)},
                        {"waste_se_us", as_number(f.waste_se_us)},
                        {"line_utilization", as_number(f.utilization_pct)},
                        {"line_utilization_se", as_number(f.utilization_se_pct)}});
  }
  if (cfg.output == OutputFormat::Json) return dump(Json{{"sweep", rows}});
  return csv;
}

std::string cmd_oracle(const ExperimentConfig& cfg) {
  const Experiment exp = to_experiment(cfg);
  const GapDescriptors d = policy_descriptors(exp.policy, exp.deviation.half_range, exp.guard);
  const Prediction p = predict(exp);

  const std::string collision = fixed2(100.0 * p.collision_rate);
  const std::string waste = fixed2(p.waste / 1000.0);
  const std::string util = fixed2(100.0 * p.utilization);
  const std::string gap_p = fmt::format("{:.6f}", d.collision_probability);
  const std::string gap_e = fmt::format("{:.6f}", d.expected_positive_gap / 1000.0);

  if (cfg.output == OutputFormat::Json) {
    return dump(Json{{"scheduler", to_string(cfg.scheduler)},
                     {"onu", cfg.onus},
                     {"delta_x_us", cfg.delta_x_us},
                     {"collision_rate", as_number(collision)},
                     {"waste_us", as_number(waste)},
                     {"line_utilization", as_number(util)},
                     {"gap_collision_probability", as_number(gap_p)},
                     {"gap_expected_positive_us", as_number(gap_e)}});
  }
  return fmt::format(
      "scheduler,onu,delta_x_us,collision_rate_pct,waste_us,line_utilization_pct,"
      "gap_collision_probability,gap_expected_positive_us\n"
      "{},{},{},{},{},{},{},{}\n",
      to_string(cfg.scheduler), cfg.onus, fixed2(cfg.delta_x_us), collision, waste, util, gap_p, gap_e);
}

std::vector<std::pair<std::string, std::string>> cmd_plot_data(const ExperimentConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> files;
  const std::string ext = cfg.output == OutputFormat::Json ? ".json" : ".csv";
  for (SchedulerKind kind : {SchedulerKind::Baseline, SchedulerKind::Complement}) {
    ExperimentConfig point = cfg;
    point.scheduler = kind;
    const auto metrics = run_metrics(to_experiment(point));

    std::string body;
    if (cfg.output == OutputFormat::Json) {
      Json pairs = Json::array();
      for (std::size_t j : waste_order(metrics)) {
        const TableRow r = table_row(j + 1, metrics[j]);
        pairs.push_back(Json{{"waste_us", as_number(r.waste_us)},
                             {"collision_rate", as_number(r.collision_rate_pct)}});
      }
      body = dump(Json{{"scheduler", to_string(kind)}, {"points", pairs}});
    } else {
      body = "waste_us,collision_rate_pct\n";
      for (std::size_t j : waste_order(metrics)) {
        const TableRow r = table_row(j + 1, metrics[j]);
        body += fmt::format("{},{}\n", r.waste_us, r.collision_rate_pct);
      }
    }
    files.emplace_back(fmt::format("plot_{}{}", to_string(kind), ext), std::move(body));
  }
  return files;
}

std::string cmd_compare(const ExperimentConfig& cfg) {
  ExperimentConfig point = cfg;
  point.scheduler = SchedulerKind::Complement;
  const PairedReport report = paired_comparison(to_experiment(point));
  const SummaryFields b = summary_fields(report.baseline);
  const SummaryFields c = summary_fields(report.complement);
  const std::string dc = fixed2(100.0 * report.delta_collision_rate);
  const std::string dw = fixed2(report.delta_waste_us);
  const std::string du = fixed2(100.0 * report.delta_utilization);

  if (cfg.output == OutputFormat::Json) {
    Json rows = Json::array();
    for (const auto& pc : report.cycles) {
      const TableRow rb = table_row(pc.cycle + 1, pc.baseline);
      const TableRow rc = table_row(pc.cycle + 1, pc.complement);
      rows.push_back(Json{{"cycle", pc.cycle + 1},
                          {"baseline",
                           Json{{"collision_rate", as_number(rb.collision_rate_pct)},
                                {"waste_us", as_number(rb.waste_us)},
                                {"line_utilization", number_or_null(rb.utilization_pct)}}},
                          {"complement",
                           Json{{"collision_rate", as_number(rc.collision_rate_pct)},
                                {"waste_us", as_number(rc.waste_us)},
                                {"line_utilization", number_or_null(rc.utilization_pct)}}}});
    }
    auto mean = [](const SummaryFields& f) {
      return Json{{"collision_rate", as_number(f.collision_rate_pct)},
                  {"waste_us", as_number(f.waste_us)},
                  {"line_utilization", as_number(f.utilization_pct)}};
    };
    return dump(Json{{"rows", rows},
                     {"mean", Json{{"baseline", mean(b)}, {"complement", mean(c)}}},
                     {"delta",
                      Json{{"collision_rate", as_number(dc)},
                           {"waste_us", as_number(dw)},
                           {"line_utilization", as_number(du)}}},
                     {"pointwise_no_more_collisions", report.pointwise_no_more_collisions}});
  }

  std::string out = "cycle,policy,collision_rate_pct,waste_us,line_utilization_pct\n";
  for (const auto& pc : report.cycles) {
    for (const auto& [name, m] : {std::pair{"baseline", &pc.baseline}, std::pair{"complement", &pc.complement}}) {
      const TableRow r = table_row(pc.cycle + 1, *m);
      out += fmt::format("{},{},{},{},{}\n", r.cycle, name, r.collision_rate_pct, r.waste_us,
                         r.utilization_pct);
    }
  }
  out += fmt::format("mean,baseline,{},{},{}\n", b.collision_rate_pct, b.waste_us, b.utilization_pct);
  out += fmt::format("mean,complement,{},{},{}\n", c.collision_rate_pct, c.waste_us, c.utilization_pct);
  out += fmt::format("delta,complement-baseline,{},{},{}\n", dc, dw, du);
  return out;
}

}  // namespace ponsim::cli
