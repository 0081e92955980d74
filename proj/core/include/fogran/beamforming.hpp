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

#include "fogran/channel.hpp"
#include "fogran/layout.hpp"
#include "fogran/topology.hpp"

#include <Eigen/Dense>

#include <vector>

namespace fogran {

/// Per-(AP, user) transmit beamformers w_rk, stored as an M x K matrix whose
/// column k is the stacked w_k.
class BeamformingSolution {
public:
  BeamformingSolution() = default;
  explicit BeamformingSolution(AntennaLayout layout);
  BeamformingSolution(AntennaLayout layout, Eigen::MatrixXcd stacked);

  const AntennaLayout& layout() const { return layout_; }
  int ap_count() const { return layout_.ap_count(); }
  int user_count() const { return layout_.user_count(); }

  const Eigen::MatrixXcd& matrix() const { return w_; }
  Eigen::MatrixXcd& matrix() { return w_; }

  auto block(int r, int k) const { return w_.col(k).segment(layout_.offset(r), layout_.antennas(r)); }
  auto block(int r, int k) { return w_.col(k).segment(layout_.offset(r), layout_.antennas(r)); }
  auto stacked(int k) const { return w_.col(k); }

  double block_power(int r, int k) const { return block(r, k).squaredNorm(); }
  double ap_power(int r) const;
  std::vector<double> per_ap_power() const;

private:
  AntennaLayout layout_;
  Eigen::MatrixXcd w_;
};

struct RateVector {
  std::vector<double> rates_bps;
  std::vector<double> sinrs;

  double sum() const;
};

/// Users served by each AP: sets[r] lists user indices in increasing order.
/// For FogRAN the sets partition the users; for CRAN they may overlap.
using ServingSets = std::vector<std::vector<int>>;

/// gamma_k = |h_k^H w_k|^2 / (sum_{j != k} |h_k^H w_j|^2 + noise).
double compute_sinr(const ChannelMatrix& channel, const BeamformingSolution& solution, int k);

/// All SINRs for stacked channel H (M x K) and beamformers W (M x K).
std::vector<double> compute_sinrs(const Eigen::MatrixXcd& channel, const Eigen::MatrixXcd& beamformers,
                                  double noise_power);

/// Achievable rate B log2(1 + sinr), bits per second.
double shannon_rate(double bandwidth_hz, double sinr);

/// Threshold below which ||w_rk||^2 does not count as "AP r serves user k".
double active_threshold(const NetworkTopology& topology, int r, double factor);

/// {k : ||w_rk||^2 > factor * P_r / K} for every AP.
ServingSets active_serving_sets(const BeamformingSolution& solution, const NetworkTopology& topology, double factor);

/// Zero every block at or below its activity threshold. Returns the number
/// of blocks cleared.
int prune_inactive_blocks(BeamformingSolution& solution, const NetworkTopology& topology, double factor);

/// Proportional fronthaul throttling. For every AP whose served rate sum
/// exceeds its capacity the factor C_r / sum is computed; each user is
/// scaled by the smallest factor over the APs serving it. With disjoint
/// sets this makes every overloaded AP's sum equal its capacity exactly.
std::vector<double> throttle_to_fronthaul(const std::vector<double>& rates_bps, const ServingSets& sets,
                                          const std::vector<double>& capacities_bps);

std::vector<double> fronthaul_capacities(const NetworkTopology& topology);

}  // namespace fogran
