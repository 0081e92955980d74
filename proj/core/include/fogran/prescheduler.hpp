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

#include "fogran/beamforming.hpp"
#include "fogran/channel.hpp"
#include "fogran/topology.hpp"
#include "fogran/wsr_solver.hpp"

#include <vector>

namespace fogran {

/// Exact user -> FogAP partition. Empty clusters are allowed.
class Clustering {
public:
  Clustering(std::vector<int> assignment, int ap_count);

  int ap_of(int k) const { return assignment_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& assignment() const { return assignment_; }
  const ServingSets& per_ap_sets() const { return sets_; }
  const std::vector<int>& cluster(int r) const { return sets_[static_cast<std::size_t>(r)]; }
  int cluster_size(int r) const { return static_cast<int>(cluster(r).size()); }
  int ap_count() const { return static_cast<int>(sets_.size()); }
  int user_count() const { return static_cast<int>(assignment_.size()); }

  friend bool operator==(const Clustering&, const Clustering&) = default;

private:
  std::vector<int> assignment_;
  ServingSets sets_;
};

/// True when `sets` covers {0..users-1} with every user in exactly one set.
bool is_partition(const ServingSets& sets, int users);

struct PreSchedule {
  Clustering clustering;
  int valid_for_frames = 10;
  double based_on_error_variance = 0.0;
  /// Every user reached the concentration target before the pass limit.
  bool converged = false;
  int passes = 0;
  /// Fraction of users whose beamforming power was at least the target
  /// share inside one AP block when the reweighting stopped.
  double concentrated_fraction = 0.0;
  /// Users moved by the local search.
  int moves = 0;
};

struct PreschedulerParams {
  SolverParams solver;
  /// Initial group-sparsity weight c (nats per active block, scaled by the
  /// mean user weight); multiplied by `penalty_growth` after every pass.
  double initial_penalty = 1e-3;
  double penalty_growth = 2.0;
  int passes = 10;
  double concentration_target = 0.95;
  int period_frames = 10;
  /// After extraction, improve the partition by single-user moves that
  /// raise the FogRAN weighted sum-rate predicted on the noisy CSI.
  bool local_search = true;
  int local_search_passes = 4;

  friend bool operator==(const PreschedulerParams&, const PreschedulerParams&) = default;
};

void validate(const PreschedulerParams& params);

/// Hard assignment k -> argmax_r ||w_rk||^2, ties to the lowest AP index.
/// Users with an all-zero column go to the AP with the largest received
/// power P_r ||h~_rk||^2 on the noisy CSI.
Clustering extract_clustering(const BeamformingSolution& solution, const NoisyChannelMatrix& fallback_channel,
                              const NetworkTopology& topology);

/// Strongest-received-power association on the noisy CSI.
Clustering strongest_channel_clustering(const NoisyChannelMatrix& channel, const NetworkTopology& topology);

/// Weighted sum-rate the cloud predicts for `clustering` if every FogAP
/// ran equal-power SLNR beamforming on the noisy CSI.
double predicted_fogran_utility(const NoisyChannelMatrix& noisy_channel, const NetworkTopology& topology,
                                const Clustering& clustering);

/// Centralized pre-scheduling on outdated CSI. Solves the weighted
/// sum-rate problem with an extra reweighted group-sparsity penalty
///   c / (||w_rk||^2 + tau) * ||w_rk||^2
/// whose weight c grows geometrically until every user's power sits in one
/// AP block, then extracts the partition and (optionally) refines it by
/// local search on the predicted FogRAN utility. Reads only the noisy CSI.
PreSchedule preschedule(const NoisyChannelMatrix& noisy_channel, const NetworkTopology& topology,
                        const PreschedulerParams& params = {});

}  // namespace fogran
