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
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fogran/harness.hpp"

namespace fogran::cli {

inline constexpr int kManifestVersion = 1;

/// Everything needed to repeat a run. The scenario text is stored verbatim
/// so a replay goes through the same parse (and the same unit conversions)
/// as the original; `resolved` is the SI snapshot it must reproduce.
struct RunManifest {
  std::string tool_version;
  std::string scenario_path;
  std::string scenario_source;
  std::string preset;
  std::optional<std::uint64_t> seed_override;
  std::uint64_t master_seed = 0;
  nlohmann::json resolved;
  std::string output_dir;
  int threads = 1;
  std::string started_utc;
  std::string finished_utc;
  std::vector<std::string> outputs;
};

nlohmann::json to_json(const RunManifest& manifest);
/// Throws std::runtime_error on a malformed or unsupported manifest.
RunManifest manifest_from_json(const nlohmann::json& j);

/// Rebuilds the scenario and checks it against `resolved`.
Scenario resolve(const RunManifest& manifest);

/// Scenario from text + optional preset + optional seed override; the
/// common path for fresh runs and replays.
Scenario build_scenario(const std::string& source, const std::string& origin, const std::string& preset,
                        std::optional<std::uint64_t> seed_override);

/// ISO-8601 UTC, second resolution.
std::string utc_now();

}  // namespace fogran::cli
