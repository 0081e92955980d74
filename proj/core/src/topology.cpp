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

#include "fogran/topology.hpp"

#include "fogran/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fogran {

std::string_view to_string(ApKind kind) { return kind == ApKind::Macro ? "macro" : "pico"; }

namespace {

bool inside(Position p, double extent) {
  return p.x >= 0.0 && p.x < extent && p.y >= 0.0 && p.y < extent;
}

double wrap_axis(double delta, double extent) {
  double d = std::fmod(std::abs(delta), extent);
  return d > 0.5 * extent ? extent - d : d;
}

}  // namespace

NetworkTopology::NetworkTopology(std::vector<AccessPoint> aps, std::vector<User> users, double extent_m)
    : aps_(std::move(aps)), users_(std::move(users)), extent_m_(extent_m) {
  if (aps_.empty()) throw std::invalid_argument("topology: at least one access point required");
  if (users_.empty()) throw std::invalid_argument("topology: at least one user required");
  if (!(extent_m_ > 0.0)) throw std::invalid_argument("topology: plane extent must be positive");

  offsets_.reserve(aps_.size());
  for (std::size_t r = 0; r < aps_.size(); ++r) {
    const AccessPoint& ap = aps_[r];
    if (ap.id != static_cast<int>(r)) throw std::invalid_argument("topology: AP ids must be 0..R-1 in order");
    if (ap.antennas < 1) throw std::invalid_argument("topology: AP " + std::to_string(r) + " needs >= 1 antenna");
    if (!(ap.max_power_w > 0.0)) throw std::invalid_argument("topology: AP " + std::to_string(r) + " max power must be > 0");
    if (!(ap.fronthaul_bps > 0.0))
      throw std::invalid_argument("topology: AP " + std::to_string(r) + " fronthaul capacity must be > 0");
    if (!inside(ap.position, extent_m_))
      throw std::invalid_argument("topology: AP " + std::to_string(r) + " lies outside the plane");
    offsets_.push_back(total_antennas_);
    total_antennas_ += ap.antennas;
  }
  for (std::size_t k = 0; k < users_.size(); ++k) {
    const User& u = users_[k];
    if (!(u.weight >= 0.0)) throw std::invalid_argument("topology: user " + std::to_string(k) + " weight must be >= 0");
    if (!inside(u.position, extent_m_))
      throw std::invalid_argument("topology: user " + std::to_string(k) + " lies outside the plane");
  }
}

std::vector<int> NetworkTopology::antenna_counts() const {
  std::vector<int> counts;
  counts.reserve(aps_.size());
  for (const auto& ap : aps_) counts.push_back(ap.antennas);
  return counts;
}

double NetworkTopology::distance(int r, int k) const {
  return wrap_distance(ap(r).position, user(k).position, extent_m_);
}

NetworkTopology NetworkTopology::with_weights(const std::vector<double>& weights) const {
  if (weights.size() != users_.size()) throw std::invalid_argument("topology: weight count must match user count");
  std::vector<User> users = users_;
  for (std::size_t k = 0; k < users.size(); ++k) users[k].weight = weights[k];
  return NetworkTopology(aps_, std::move(users), extent_m_);
}

double wrap_distance(Position a, Position b, double extent) {
  const double dx = wrap_axis(a.x - b.x, extent);
  const double dy = wrap_axis(a.y - b.y, extent);
  return std::hypot(dx, dy);
}

NetworkTopology build_topology(const TopologyConfig& config) {
  const int ap_total = config.macro_count + config.pico_count;
  if (config.macro_count < 0 || config.pico_count < 0 || ap_total < 1)
    throw std::invalid_argument("build_topology: at least one access point required");
  if (config.user_count < 1) throw std::invalid_argument("build_topology: at least one user required");
  if (!(config.extent_m > 0.0)) throw std::invalid_argument("build_topology: extent must be positive");
  if (config.min_distance_m < 0.0 || config.min_distance_m * std::numbers::sqrt2 >= 0.5 * config.extent_m)
    throw std::invalid_argument("build_topology: min_distance_m incompatible with extent");

  Rng rng(derive_seed(config.seed, {tag(StreamTag::Topology)}));
  std::uniform_real_distribution<double> coord(0.0, config.extent_m);

  std::vector<AccessPoint> aps;
  aps.reserve(static_cast<std::size_t>(ap_total));
  const double center = 0.5 * config.extent_m;
  const double ring = 0.25 * config.extent_m;
  for (int i = 0; i < config.macro_count; ++i) {
    Position p{center, center};
    if (config.macro_count > 1) {
      const double angle = std::numbers::pi / 2.0 + 2.0 * std::numbers::pi * i / config.macro_count;
      p = {center + ring * std::cos(angle), center + ring * std::sin(angle)};
    }
    aps.push_back({static_cast<int>(aps.size()), ApKind::Macro, p, config.macro_antennas, config.macro_power_w,
                   config.macro_fronthaul_bps});
  }
  for (int i = 0; i < config.pico_count; ++i) {
    Position p{coord(rng), coord(rng)};
    aps.push_back({static_cast<int>(aps.size()), ApKind::Pico, p, config.pico_antennas, config.pico_power_w,
                   config.pico_fronthaul_bps});
  }

  std::vector<User> users;
  users.reserve(static_cast<std::size_t>(config.user_count));
  for (int k = 0; k < config.user_count; ++k) {
    Position p;
    bool ok = false;
    for (int attempt = 0; attempt < 100000 && !ok; ++attempt) {
      p = {coord(rng), coord(rng)};
      ok = true;
      for (const auto& ap : aps) {
        if (wrap_distance(p, ap.position, config.extent_m) < config.min_distance_m) {
          ok = false;
          break;
        }
      }
    }
    if (!ok) throw std::runtime_error("build_topology: could not place user away from APs");
    users.push_back({k, p, config.user_weight});
  }
  return NetworkTopology(std::move(aps), std::move(users), config.extent_m);
}

}  // namespace fogran
