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

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "fogran/harness.hpp"

namespace fogran::cli {

/// Scenario file problem. `line()` is 1-based, 0 when no location applies.
class ParseError : public std::runtime_error {
public:
  ParseError(std::string origin, int line, std::string field, const std::string& message);

  const std::string& origin() const { return origin_; }
  int line() const { return line_; }
  const std::string& field() const { return field_; }

private:
  std::string origin_;
  int line_;
  std::string field_;
};

std::vector<std::string> preset_names();
/// nullopt for an unknown name.
std::optional<Scenario> preset(std::string_view name);

/// Parses YAML scenario text on top of `base_preset` (or the file's own
/// `preset:` key, or desk-scale). All values end up in SI units and the
/// result has passed validate(Scenario).
Scenario parse_scenario_text(std::string_view text, const std::string& origin = "<scenario>",
                             std::string_view base_preset = {});

/// `path` names a scenario file; if no such file exists but it matches a
/// preset name, that preset is returned.
Scenario parse_scenario(const std::filesystem::path& path, std::string_view base_preset = {});

/// Fully resolved configuration (SI units) for manifests and logs.
nlohmann::json to_json(const Scenario& scenario);

}  // namespace fogran::cli
