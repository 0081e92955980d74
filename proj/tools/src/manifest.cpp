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
#include "fogran_cli/manifest.hpp"

#include <chrono>
#include <ctime>
#include <stdexcept>

#include "fogran_cli/scenario_file.hpp"

namespace fogran::cli {

nlohmann::json to_json(const RunManifest& m) {
  nlohmann::json j{{"manifest_version", kManifestVersion},
                   {"tool", "fogran"},
                   {"tool_version", m.tool_version},
                   {"scenario_path", m.scenario_path},
                   {"scenario_source", m.scenario_source},
                   {"preset", m.preset},
                   {"master_seed", m.master_seed},
                   {"resolved", m.resolved},
                   {"output_dir", m.output_dir},
                   {"threads", m.threads},
                   {"started_utc", m.started_utc},
                   {"finished_utc", m.finished_utc},
                   {"outputs", m.outputs}};
  j["seed_override"] = m.seed_override ? nlohmann::json(*m.seed_override) : nlohmann::json(nullptr);
  return j;
}

RunManifest manifest_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object() || j.value("tool", "") != "fogran") throw std::runtime_error("not a fogran run manifest");
    const int version = j.at("manifest_version").get<int>();
    if (version != kManifestVersion)
      throw std::runtime_error("unsupported manifest version " + std::to_string(version));
    RunManifest m;
    m.tool_version = j.at("tool_version").get<std::string>();
    m.scenario_path = j.at("scenario_path").get<std::string>();
    m.scenario_source = j.at("scenario_source").get<std::string>();
    m.preset = j.at("preset").get<std::string>();
    if (!j.at("seed_override").is_null()) m.seed_override = j.at("seed_override").get<std::uint64_t>();
    m.master_seed = j.at("master_seed").get<std::uint64_t>();
    m.resolved = j.at("resolved");
    m.output_dir = j.value("output_dir", "");
    m.threads = j.value("threads", 1);
    m.started_utc = j.value("started_utc", "");
    m.finished_utc = j.value("finished_utc", "");
    m.outputs = j.value("outputs", std::vector<std::string>{});
    return m;
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error(std::string("manifest: ") + e.what());
  }
}

Scenario build_scenario(const std::string& source, const std::string& origin, const std::string& preset,
                        std::optional<std::uint64_t> seed_override) {
  Scenario s = parse_scenario_text(source, origin, preset);
  if (seed_override) s.master_seed = *seed_override;
  return s;
}

Scenario resolve(const RunManifest& m) {
  const std::string origin = m.scenario_path.empty() ? "<manifest>" : m.scenario_path;
  Scenario s = build_scenario(m.scenario_source, origin, m.preset, m.seed_override);
  if (to_json(s) != m.resolved)
    throw std::runtime_error("manifest: stored scenario text no longer resolves to the recorded configuration");
  return s;
}

std::string utc_now() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace fogran::cli
