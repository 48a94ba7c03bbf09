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

#include "ponsim/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace ponsim::cli {

ConfigError::ConfigError(std::string key, const std::string& what)
    : std::runtime_error(key.empty() ? what : key + ": " + what), key_(std::move(key)) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

template <class T>
T parse_integer(std::string_view key, std::string_view text) {
  T v{};
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError(std::string(key), "expected a non-negative integer, got '" + std::string(text) + "'");
  }
  return v;
}

double parse_double(std::string_view key, std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty() || !std::isfinite(v)) {
    throw ConfigError(std::string(key), "expected a decimal number, got '" + std::string(text) + "'");
  }
  return v;
}

template <class Enum, std::size_t N>
Enum parse_choice(std::string_view key, std::string_view text,
                  const std::pair<std::string_view, Enum> (&choices)[N]) {
  for (const auto& [name, value] : choices) {
    if (name == text) return value;
  }
  std::string allowed;
  for (const auto& [name, value] : choices) {
    if (!allowed.empty()) allowed += "|";
    allowed += name;
  }
  throw ConfigError(std::string(key), "expected one of {" + allowed + "}, got '" + std::string(text) + "'");
}

template <class Enum, std::size_t N>
std::string_view choice_name(Enum v, const std::pair<std::string_view, Enum> (&choices)[N]) {
  for (const auto& [name, value] : choices) {
    if (value == v) return name;
  }
  return "?";
}

constexpr std::pair<std::string_view, SchedulerKind> kSchedulers[] = {
    {"ideal", SchedulerKind::Ideal},
    {"baseline", SchedulerKind::Baseline},
    {"complement", SchedulerKind::Complement},
};
constexpr std::pair<std::string_view, ComplementMode> kComplementModes[] = {
    {"uniform", ComplementMode::Uniform},
    {"constant", ComplementMode::Constant},
};
constexpr std::pair<std::string_view, ComplementScope> kScopes[] = {
    {"onu", ComplementScope::PerOnu},
    {"cycle", ComplementScope::PerCycle},
    {"run", ComplementScope::PerRun},
};
constexpr std::pair<std::string_view, TrafficKind> kTraffic[] = {
    {"uniform", TrafficKind::Uniform},
    {"constant", TrafficKind::Constant},
};
constexpr std::pair<std::string_view, OutputFormat> kOutputs[] = {
    {"csv", OutputFormat::Csv},
    {"json", OutputFormat::Json},
};
constexpr std::pair<std::string_view, SortOrder> kSorts[] = {
    {"cycle", SortOrder::Cycle},
    {"waste", SortOrder::Waste},
};

void require(bool ok, std::string_view key, const std::string& what) {
  if (!ok) throw ConfigError(std::string(key), what);
}

}  // namespace

std::string_view to_string(SchedulerKind v) { return choice_name(v, kSchedulers); }

void apply_setting(ExperimentConfig& cfg, std::string_view key, std::string_view raw) {
  const std::string_view value = trim(raw);
  if (key == "onus") {
    cfg.onus = parse_integer<std::size_t>(key, value);
  } else if (key == "cycles") {
    cfg.cycles = parse_integer<std::size_t>(key, value);
  } else if (key == "delta_x_us") {
    cfg.delta_x_us = parse_double(key, value);
  } else if (key == "scheduler") {
    cfg.scheduler = parse_choice(key, value, kSchedulers);
  } else if (key == "complement_mode") {
    cfg.complement_mode = parse_choice(key, value, kComplementModes);
  } else if (key == "complement_max_us") {
    cfg.complement_max_us = parse_double(key, value);
  } else if (key == "complement_value_us") {
    cfg.complement_value_us = parse_double(key, value);
  } else if (key == "complement_scope") {
    cfg.complement_scope = parse_choice(key, value, kScopes);
  } else if (key == "traffic") {
    cfg.traffic = parse_choice(key, value, kTraffic);
  } else if (key == "traffic_min_us") {
    cfg.traffic_min_us = parse_double(key, value);
  } else if (key == "traffic_max_us") {
    cfg.traffic_max_us = parse_double(key, value);
  } else if (key == "traffic_length_us") {
    cfg.traffic_length_us = parse_double(key, value);
  } else if (key == "base_rtt_min_us") {
    cfg.base_rtt_min_us = parse_double(key, value);
  } else if (key == "base_rtt_max_us") {
    cfg.base_rtt_max_us = parse_double(key, value);
  } else if (key == "guard_time_us") {
    cfg.guard_time_us = parse_double(key, value);
  } else if (key == "seed") {
    cfg.seed = parse_integer<std::uint64_t>(key, value);
  } else if (key == "output") {
    cfg.output = parse_choice(key, value, kOutputs);
  } else if (key == "sort") {
    cfg.sort = parse_choice(key, value, kSorts);
  } else {
    throw ConfigError(std::string(key), "unknown key");
  }
}

ExperimentConfig parse_config(std::string_view text, ExperimentConfig base) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("", fmt::format("line {}: expected key=value", line_no));
    }
    apply_setting(base, trim(line.substr(0, eq)), line.substr(eq + 1));
  }
  return base;
}

ExperimentConfig load_config_file(const std::string& path, ExperimentConfig base) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config", "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str(), std::move(base));
}

void validate(const ExperimentConfig& cfg) {
  require(cfg.onus >= 1, "onus", "must be >= 1");
  require(cfg.cycles >= 1, "cycles", "must be >= 1");
  require(cfg.delta_x_us >= 0.0, "delta_x_us", "must be >= 0");
  if (cfg.complement_max_us) require(*cfg.complement_max_us >= 0.0, "complement_max_us", "must be >= 0");
  if (cfg.complement_value_us) {
    require(*cfg.complement_value_us >= 0.0, "complement_value_us", "must be >= 0");
  }
  if (cfg.traffic == TrafficKind::Uniform) {
    require(Tick::from_us(cfg.traffic_min_us) > Tick{}, "traffic_min_us", "must be > 0");
    require(cfg.traffic_max_us >= cfg.traffic_min_us, "traffic_max_us", "must be >= traffic_min_us");
  } else {
    require(Tick::from_us(cfg.traffic_length_us) > Tick{}, "traffic_length_us", "must be > 0");
  }
  require(cfg.guard_time_us >= 0.0, "guard_time_us", "must be >= 0");
  require(cfg.base_rtt_min_us > cfg.delta_x_us, "base_rtt_min_us", "must exceed delta_x_us");
  require(cfg.base_rtt_max_us >= cfg.base_rtt_min_us, "base_rtt_max_us", "must be >= base_rtt_min_us");
}

std::string dump_config(const ExperimentConfig& cfg) {
  std::string out;
  auto line = [&](std::string_view key, const auto& value) {
    out += fmt::format("{}={}\n", key, value);
  };
  line("onus", cfg.onus);
  line("cycles", cfg.cycles);
  line("delta_x_us", cfg.delta_x_us);
  line("scheduler", choice_name(cfg.scheduler, kSchedulers));
  line("complement_mode", choice_name(cfg.complement_mode, kComplementModes));
  if (cfg.complement_max_us) line("complement_max_us", *cfg.complement_max_us);
  if (cfg.complement_value_us) line("complement_value_us", *cfg.complement_value_us);
  line("complement_scope", choice_name(cfg.complement_scope, kScopes));
  line("traffic", choice_name(cfg.traffic, kTraffic));
  line("traffic_min_us", cfg.traffic_min_us);
  line("traffic_max_us", cfg.traffic_max_us);
  line("traffic_length_us", cfg.traffic_length_us);
  line("base_rtt_min_us", cfg.base_rtt_min_us);
  line("base_rtt_max_us", cfg.base_rtt_max_us);
  line("guard_time_us", cfg.guard_time_us);
  line("seed", cfg.seed);
  line("output", choice_name(cfg.output, kOutputs));
  line("sort", choice_name(cfg.sort, kSorts));
  return out;
}

ComplementModel complement_model(const ExperimentConfig& cfg) {
  if (cfg.complement_mode == ComplementMode::Uniform) {
    return ComplementUniform{Tick::from_us(cfg.complement_max_us.value_or(cfg.delta_x_us))};
  }
  return ComplementConstant{Tick::from_us(cfg.complement_value_us.value_or(cfg.delta_x_us))};
}

Experiment to_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  Experiment e;
  e.onus = cfg.onus;
  e.cycles = cfg.cycles;
  e.deviation = DeviationModel{Tick::from_us(cfg.delta_x_us)};
  switch (cfg.scheduler) {
    case SchedulerKind::Ideal:
      e.policy = IdealPolicy{};
      break;
    case SchedulerKind::Baseline:
      e.policy = BaselinePolicy{};
      break;
    case SchedulerKind::Complement:
      e.policy = ComplementPolicy{complement_model(cfg), cfg.complement_scope};
      break;
  }
  if (cfg.traffic == TrafficKind::Uniform) {
    e.traffic = LengthUniform{Tick::from_us(cfg.traffic_min_us), Tick::from_us(cfg.traffic_max_us)};
  } else {
    e.traffic = LengthConstant{Tick::from_us(cfg.traffic_length_us)};
  }
  e.base_rtt_min = Tick::from_us(cfg.base_rtt_min_us);
  e.base_rtt_max = Tick::from_us(cfg.base_rtt_max_us);
  e.guard = Tick::from_us(cfg.guard_time_us);
  e.seed = cfg.seed;
  try {
    e.validate();
  } catch (const std::invalid_argument& err) {
    throw ConfigError("", err.what());
  }
  return e;
}

}  // namespace ponsim::cli
