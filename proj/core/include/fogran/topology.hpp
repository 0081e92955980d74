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
#include <string_view>
#include <vector>

namespace fogran {

struct Position {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Position&, const Position&) = default;
};

enum class ApKind { Macro, Pico };

std::string_view to_string(ApKind kind);

struct AccessPoint {
  int id = 0;
  ApKind kind = ApKind::Macro;
  Position position;
  int antennas = 1;
  double max_power_w = 1.0;
  double fronthaul_bps = 1.0;

  friend bool operator==(const AccessPoint&, const AccessPoint&) = default;
};

struct User {
  int id = 0;
  Position position;
  double weight = 1.0;

  friend bool operator==(const User&, const User&) = default;
};

/// Geometry and radio parameters for one network drop. Powers and
/// capacities are SI; the scenario parser converts from dBm/Mbps.
struct TopologyConfig {
  int macro_count = 3;
  int pico_count = 9;
  int user_count = 60;
  double extent_m = 1000.0;
  int macro_antennas = 4;
  int pico_antennas = 2;
  double macro_power_w = 19.952623149688797;  // 43 dBm
  double pico_power_w = 1.0;                  // 30 dBm
  double macro_fronthaul_bps = 690.0e6;
  double pico_fronthaul_bps = 107.0e6;
  double min_distance_m = 10.0;
  double user_weight = 1.0;
  std::uint64_t seed = 0;

  friend bool operator==(const TopologyConfig&, const TopologyConfig&) = default;
};

/// Two-tier network on a square wrap-around plane. APs are indexed first
/// by macro then by pico; `antenna_offset(r)` gives the row of AP r's
/// block inside a stacked per-user vector.
class NetworkTopology {
public:
  NetworkTopology(std::vector<AccessPoint> aps, std::vector<User> users, double extent_m);

  const std::vector<AccessPoint>& aps() const { return aps_; }
  const std::vector<User>& users() const { return users_; }
  const AccessPoint& ap(int r) const { return aps_.at(static_cast<std::size_t>(r)); }
  const User& user(int k) const { return users_.at(static_cast<std::size_t>(k)); }

  int ap_count() const { return static_cast<int>(aps_.size()); }
  int user_count() const { return static_cast<int>(users_.size()); }
  double extent() const { return extent_m_; }
  int total_antennas() const { return total_antennas_; }
  int antenna_offset(int r) const { return offsets_.at(static_cast<std::size_t>(r)); }
  std::vector<int> antenna_counts() const;

  double distance(int r, int k) const;

  /// Copy with user weights replaced; used by fairness sweeps and tests.
  NetworkTopology with_weights(const std::vector<double>& weights) const;

  friend bool operator==(const NetworkTopology&, const NetworkTopology&) = default;

private:
  std::vector<AccessPoint> aps_;
  std::vector<User> users_;
  double extent_m_ = 0.0;
  int total_antennas_ = 0;
  std::vector<int> offsets_;
};

/// Deterministic for a fixed `config.seed`. Macro sites sit on a ring
/// around the plane center (one macro sits at the center); picos and users
/// are uniform. Users are redrawn until they are at least
/// `min_distance_m` from every AP.
NetworkTopology build_topology(const TopologyConfig& config);

/// Torus distance: per-axis deltas reduced to magnitude <= extent/2, then
/// the Euclidean norm.
double wrap_distance(Position a, Position b, double extent);

}  // namespace fogran
