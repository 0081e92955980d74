// SPDX-License-Identifier: Apache-2.0
//
// fogran-sim: user pre-scheduling and beamforming for cloud/fog radio access networks
// Copyright (C) 2026 The fogran-sim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------
#include "fogran_cli/scenario_file.hpp"

#include <fstream>
#include <functional>
#include <limits>
#include <map>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "fogran/units.hpp"

namespace fogran::cli {

namespace {

std::string format_message(const std::string& origin, int line, const std::string& field, const std::string& message) {
  std::string out = origin;
  if (line > 0) out += ":" + std::to_string(line);
  out += ": ";
  if (!field.empty()) out += field + ": ";
  return out + message;
}

int line_of(const YAML::Node& node) { return node.Mark().is_null() ? 0 : node.Mark().line + 1; }

class Reader {
public:
  explicit Reader(std::string origin) : origin_(std::move(origin)) {}

  [[noreturn]] void fail(const YAML::Node& node, const std::string& field, const std::string& message) const {
    throw ParseError(origin_, line_of(node), field, message);
  }

  using Handler = std::function<void(const YAML::Node&, const std::string& field)>;

  /// Visits every key of `map`; keys without a handler are rejected.
  void section(const YAML::Node& map, const std::string& prefix, const std::map<std::string, Handler>& handlers) {
    if (map.IsNull()) return;
    if (!map.IsMap()) fail(map, prefix, "expected a mapping");
    for (const auto& entry : map) {
      const std::string key = entry.first.as<std::string>();
      const std::string field = prefix.empty() ? key : prefix + "." + key;
      const auto it = handlers.find(key);
      if (it == handlers.end()) fail(entry.first, field, "unknown key");
      lines_[field] = line_of(entry.first);
      it->second(entry.second, field);
    }
  }

  double number(const YAML::Node& node, const std::string& field) const {
    if (!node.IsScalar()) fail(node, field, "expected a number");
    try {
      return node.as<double>();
    } catch (const YAML::Exception&) {
      fail(node, field, "not a number: '" + node.Scalar() + "'");
    }
  }

  int integer(const YAML::Node& node, const std::string& field) const {
    if (!node.IsScalar()) fail(node, field, "expected an integer");
    long long v = 0;
    try {
      v = node.as<long long>();
    } catch (const YAML::Exception&) {
      fail(node, field, "not an integer: '" + node.Scalar() + "'");
    }
    if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) fail(node, field, "out of range");
    return static_cast<int>(v);
  }

  std::uint64_t unsigned64(const YAML::Node& node, const std::string& field) const {
    if (!node.IsScalar()) fail(node, field, "expected an unsigned integer");
    const std::string& s = node.Scalar();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      fail(node, field, "not an unsigned integer: '" + s + "'");
    try {
      return std::stoull(s);
    } catch (const std::exception&) {
      fail(node, field, "out of range");
    }
  }

  bool boolean(const YAML::Node& node, const std::string& field) const {
    if (!node.IsScalar()) fail(node, field, "expected true or false");
    try {
      return node.as<bool>();
    } catch (const YAML::Exception&) {
      fail(node, field, "not a boolean: '" + node.Scalar() + "'");
    }
  }

  std::string text(const YAML::Node& node, const std::string& field) const {
    if (!node.IsScalar()) fail(node, field, "expected a string");
    return node.Scalar();
  }

  std::vector<double> numbers(const YAML::Node& node, const std::string& field) const {
    if (!node.IsSequence()) fail(node, field, "expected a list of numbers");
    std::vector<double> out;
    for (const auto& item : node) out.push_back(number(item, field));
    return out;
  }

  int line(const std::string& field) const {
    // Fall back to the closest recorded parent ("solver.tolerance" -> "solver").
    std::string key = field;
    for (;;) {
      const auto it = lines_.find(key);
      if (it != lines_.end()) return it->second;
      const auto dot = key.rfind('.');
      if (dot == std::string::npos) return 0;
      key.resize(dot);
    }
  }

  const std::string& origin() const { return origin_; }

private:
  std::string origin_;
  std::map<std::string, int> lines_;
};

PathLossModel parse_path_loss(Reader& rd, const YAML::Node& node, const std::string& field, PathLossModel model) {
  rd.section(node, field,
             {{"intercept_db", [&](const YAML::Node& n, const std::string& f) { model.intercept_db = rd.number(n, f); }},
              {"slope_db", [&](const YAML::Node& n, const std::string& f) { model.slope_db = rd.number(n, f); }}});
  return model;
}

void parse_topology(Reader& rd, const YAML::Node& node, TopologyConfig& t) {
  auto num = [&](double& dst) { return [&rd, &dst](const YAML::Node& n, const std::string& f) { dst = rd.number(n, f); }; };
  auto cnt = [&](int& dst) { return [&rd, &dst](const YAML::Node& n, const std::string& f) { dst = rd.integer(n, f); }; };
  rd.section(node, "topology",
             {{"macro_count", cnt(t.macro_count)},
              {"pico_count", cnt(t.pico_count)},
              {"users", cnt(t.user_count)},
              {"extent_m", num(t.extent_m)},
              {"macro_antennas", cnt(t.macro_antennas)},
              {"pico_antennas", cnt(t.pico_antennas)},
              {"macro_power_dbm",
               [&](const YAML::Node& n, const std::string& f) { t.macro_power_w = dbm_to_watts(rd.number(n, f)); }},
              {"pico_power_dbm",
               [&](const YAML::Node& n, const std::string& f) { t.pico_power_w = dbm_to_watts(rd.number(n, f)); }},
              {"macro_fronthaul_mbps",
               [&](const YAML::Node& n, const std::string& f) { t.macro_fronthaul_bps = mbps_to_bps(rd.number(n, f)); }},
              {"pico_fronthaul_mbps",
               [&](const YAML::Node& n, const std::string& f) { t.pico_fronthaul_bps = mbps_to_bps(rd.number(n, f)); }},
              {"min_distance_m", num(t.min_distance_m)},
              {"user_weight", num(t.user_weight)}});
}

void parse_channel(Reader& rd, const YAML::Node& node, ChannelConfig& c) {
  rd.section(
      node, "channel",
      {{"bandwidth_mhz", [&](const YAML::Node& n, const std::string& f) { c.bandwidth_hz = mhz_to_hz(rd.number(n, f)); }},
       {"noise_psd_dbm_hz",
        [&](const YAML::Node& n, const std::string& f) {
          c.noise_psd_w_per_hz = dbm_per_hz_to_watts_per_hz(rd.number(n, f));
        }},
       {"macro_path_loss",
        [&](const YAML::Node& n, const std::string& f) { c.macro_path_loss = parse_path_loss(rd, n, f, c.macro_path_loss); }},
       {"pico_path_loss",
        [&](const YAML::Node& n, const std::string& f) { c.pico_path_loss = parse_path_loss(rd, n, f, c.pico_path_loss); }},
       {"shadowing_std_db", [&](const YAML::Node& n, const std::string& f) { c.shadowing_std_db = rd.number(n, f); }},
       {"shadowing", [&](const YAML::Node& n, const std::string& f) { c.shadowing = rd.boolean(n, f); }},
       {"fading", [&](const YAML::Node& n, const std::string& f) {
          const std::string v = rd.text(n, f);
          if (v == "rayleigh")
            c.fading = FadingMode::Rayleigh;
          else if (v == "unit")
            c.fading = FadingMode::Unit;
          else
            rd.fail(n, f, "expected 'rayleigh' or 'unit', got '" + v + "'");
        }}});
}

void parse_solver(Reader& rd, const YAML::Node& node, SolverParams& s) {
  auto num = [&](double& dst) { return [&rd, &dst](const YAML::Node& n, const std::string& f) { dst = rd.number(n, f); }; };
  auto cnt = [&](int& dst) { return [&rd, &dst](const YAML::Node& n, const std::string& f) { dst = rd.integer(n, f); }; };
  rd.section(node, "solver",
             {{"max_inner_iterations", cnt(s.max_inner_iterations)},
              {"tolerance", num(s.tolerance)},
              {"max_dual_updates", cnt(s.max_dual_updates)},
              {"smoothing_tau", num(s.smoothing_tau)},
              {"dual_step", num(s.dual_step)},
              {"dual_tolerance", num(s.dual_tolerance)},
              {"active_threshold_factor", num(s.active_threshold_factor)},
              {"enforce_fronthaul",
               [&](const YAML::Node& n, const std::string& f) { s.enforce_fronthaul = rd.boolean(n, f); }}});
}

void parse_prescheduler(Reader& rd, const YAML::Node& node, PreschedulerParams& p) {
  auto num = [&](double& dst) { return [&rd, &dst](const YAML::Node& n, const std::string& f) { dst = rd.number(n, f); }; };
  auto cnt = [&](int& dst) { return [&rd, &dst](const YAML::Node& n, const std::string& f) { dst = rd.integer(n, f); }; };
  rd.section(node, "prescheduler",
             {{"initial_penalty", num(p.initial_penalty)},
              {"penalty_growth", num(p.penalty_growth)},
              {"passes", cnt(p.passes)},
              {"concentration_target", num(p.concentration_target)},
              {"local_search", [&](const YAML::Node& n, const std::string& f) { p.local_search = rd.boolean(n, f); }},
              {"local_search_passes", cnt(p.local_search_passes)}});
}

std::string leakage_name(LeakageScope scope) { return scope == LeakageScope::AllUsers ? "all-users" : "own-cluster"; }

}  // namespace

ParseError::ParseError(std::string origin, int line, std::string field, const std::string& message)
    : std::runtime_error(format_message(origin, line, field, message)),
      origin_(std::move(origin)),
      line_(line),
      field_(std::move(field)) {}

std::vector<std::string> preset_names() { return {"desk-scale", "paper-scale"}; }

std::optional<Scenario> preset(std::string_view name) {
  if (name == "desk-scale") return desk_scale_scenario();
  if (name == "paper-scale") return paper_scale_scenario();
  return std::nullopt;
}

Scenario parse_scenario_text(std::string_view text, const std::string& origin, std::string_view base_preset) {
  YAML::Node root;
  try {
    root = YAML::Load(std::string(text));
  } catch (const YAML::ParserException& e) {
    throw ParseError(origin, e.mark.is_null() ? 0 : e.mark.line + 1, "", e.msg);
  }
  Reader rd(origin);
  if (!root.IsNull() && !root.IsMap()) rd.fail(root, "", "top level must be a mapping");

  std::string preset_name = base_preset.empty() ? "desk-scale" : std::string(base_preset);
  if (root.IsMap()) {
    if (const YAML::Node p = root["preset"]) {
      const std::string file_preset = rd.text(p, "preset");
      if (!base_preset.empty() && file_preset != base_preset)
        rd.fail(p, "preset", "file asks for '" + file_preset + "' but '" + std::string(base_preset) + "' was requested");
      preset_name = file_preset;
      if (!preset(preset_name)) rd.fail(p, "preset", "unknown preset '" + preset_name + "'");
    }
  }
  const std::optional<Scenario> base = preset(preset_name);
  if (!base) throw ParseError(origin, 0, "preset", "unknown preset '" + preset_name + "'");
  Scenario s = *base;

  auto cnt = [&](int& dst) { return [&rd, &dst](const YAML::Node& n, const std::string& f) { dst = rd.integer(n, f); }; };
  rd.section(
      root, "",
      {{"preset", [](const YAML::Node&, const std::string&) {}},
       {"name", [&](const YAML::Node& n, const std::string& f) { s.name = rd.text(n, f); }},
       {"master_seed", [&](const YAML::Node& n, const std::string& f) { s.master_seed = rd.unsigned64(n, f); }},
       {"drops", cnt(s.drops)},
       {"frames_per_drop", cnt(s.frames_per_drop)},
       {"preschedule_period", cnt(s.preschedule_period)},
       {"sweep", [&](const YAML::Node& n, const std::string& f) { s.sweep = rd.numbers(n, f); }},
       {"packet_bits", [&](const YAML::Node& n, const std::string& f) { s.packet_bits = rd.numbers(n, f); }},
       {"schemes",
        [&](const YAML::Node& n, const std::string& f) {
          if (!n.IsSequence()) rd.fail(n, f, "expected a list of schemes");
          s.schemes.clear();
          for (const auto& item : n) {
            try {
              s.schemes.push_back(scheme_from_string(rd.text(item, f)));
            } catch (const std::invalid_argument& e) {
              rd.fail(item, f, e.what());
            }
          }
        }},
       {"leakage",
        [&](const YAML::Node& n, const std::string& f) {
          const std::string v = rd.text(n, f);
          if (v == "all-users")
            s.leakage = LeakageScope::AllUsers;
          else if (v == "own-cluster")
            s.leakage = LeakageScope::OwnCluster;
          else
            rd.fail(n, f, "expected 'all-users' or 'own-cluster', got '" + v + "'");
        }},
       {"cran_latency_ms",
        [&](const YAML::Node& n, const std::string& f) { s.cran_latency_s = rd.number(n, f) * 1e-3; }},
       {"fogran_latency_ms",
        [&](const YAML::Node& n, const std::string& f) { s.fogran_latency_s = rd.number(n, f) * 1e-3; }},
       {"topology", [&](const YAML::Node& n, const std::string&) { parse_topology(rd, n, s.topology); }},
       {"channel", [&](const YAML::Node& n, const std::string&) { parse_channel(rd, n, s.channel); }},
       {"solver", [&](const YAML::Node& n, const std::string&) { parse_solver(rd, n, s.solver); }},
       {"prescheduler", [&](const YAML::Node& n, const std::string&) { parse_prescheduler(rd, n, s.prescheduler); }}});

  try {
    validate(s);
  } catch (const ScenarioError& e) {
    throw ParseError(origin, rd.line(e.field()), e.field(),
                     std::string(e.what()).substr(e.field().size() + 2));
  }
  return s;
}

Scenario parse_scenario(const std::filesystem::path& path, std::string_view base_preset) {
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) {
    const std::string name = path.string();
    if (auto p = preset(name)) {
      if (!base_preset.empty() && base_preset != name)
        throw ParseError(name, 0, "preset", "conflicts with requested preset '" + std::string(base_preset) + "'");
      return *p;
    }
    throw ParseError(name, 0, "", "no such file or preset");
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string(), 0, "", "cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario_text(buf.str(), path.string(), base_preset);
}

nlohmann::json to_json(const Scenario& s) {
  using nlohmann::json;
  json schemes = json::array();
  for (Scheme sc : s.schemes) schemes.push_back(std::string(to_string(sc)));
  const auto& t = s.topology;
  const auto& c = s.channel;
  const auto& v = s.solver;
  const auto& p = s.prescheduler;
  return json{
      {"name", s.name},
      {"master_seed", s.master_seed},
      {"drops", s.drops},
      {"frames_per_drop", s.frames_per_drop},
      {"preschedule_period", s.preschedule_period},
      {"sweep", s.sweep},
      {"packet_bits", s.packet_bits},
      {"schemes", schemes},
      {"leakage", leakage_name(s.leakage)},
      {"cran_latency_s", s.cran_latency_s},
      {"fogran_latency_s", s.fogran_latency_s},
      {"topology",
       {{"macro_count", t.macro_count},
        {"pico_count", t.pico_count},
        {"users", t.user_count},
        {"extent_m", t.extent_m},
        {"macro_antennas", t.macro_antennas},
        {"pico_antennas", t.pico_antennas},
        {"macro_power_w", t.macro_power_w},
        {"pico_power_w", t.pico_power_w},
        {"macro_fronthaul_bps", t.macro_fronthaul_bps},
        {"pico_fronthaul_bps", t.pico_fronthaul_bps},
        {"min_distance_m", t.min_distance_m},
        {"user_weight", t.user_weight}}},
      {"channel",
       {{"bandwidth_hz", c.bandwidth_hz},
        {"noise_psd_w_per_hz", c.noise_psd_w_per_hz},
        {"macro_path_loss", {{"intercept_db", c.macro_path_loss.intercept_db}, {"slope_db", c.macro_path_loss.slope_db}}},
        {"pico_path_loss", {{"intercept_db", c.pico_path_loss.intercept_db}, {"slope_db", c.pico_path_loss.slope_db}}},
        {"shadowing_std_db", c.shadowing_std_db},
        {"shadowing", c.shadowing},
        {"fading", c.fading == FadingMode::Rayleigh ? "rayleigh" : "unit"}}},
      {"solver",
       {{"max_inner_iterations", v.max_inner_iterations},
        {"tolerance", v.tolerance},
        {"max_dual_updates", v.max_dual_updates},
        {"smoothing_tau", v.smoothing_tau},
        {"dual_step", v.dual_step},
        {"dual_tolerance", v.dual_tolerance},
        {"active_threshold_factor", v.active_threshold_factor},
        {"enforce_fronthaul", v.enforce_fronthaul}}},
      {"prescheduler",
       {{"initial_penalty", p.initial_penalty},
        {"penalty_growth", p.penalty_growth},
        {"passes", p.passes},
        {"concentration_target", p.concentration_target},
        {"local_search", p.local_search},
        {"local_search_passes", p.local_search_passes}}}};
}

}  // namespace fogran::cli
