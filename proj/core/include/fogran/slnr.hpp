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
#include "fogran/prescheduler.hpp"
#include "fogran/topology.hpp"

#include <Eigen/Dense>

#include <utility>
#include <vector>

namespace fogran {

/// Which users a FogAP counts as leakage victims.
enum class LeakageScope {
  /// Every other user in the network (leakage term summed over all k' != k).
  AllUsers,
  /// Only the other members of the AP's own cluster.
  OwnCluster,
};

/// What FogAP r knows locally: its own channel vector toward every user
/// (h_rk, length M_r), the set of users counted as leakage targets, and the
/// noise level. Built from the true channel only.
struct LocalCsi {
  int ap_id = 0;
  std::vector<Eigen::VectorXcd> channels;
  std::vector<int> leakage_users;
  double noise_power = 0.0;
  double max_power = 0.0;

  int antennas() const { return channels.empty() ? 0 : static_cast<int>(channels.front().size()); }
};

LocalCsi make_local_csi(const ChannelMatrix& true_channel, const NetworkTopology& topology, int r,
                        const Clustering& clustering, LeakageScope scope = LeakageScope::AllUsers);

struct SlnrBeam {
  Eigen::VectorXcd w;
  /// Set when h_rk = 0; w is then the zero vector.
  bool zero_channel = false;
};

/// SLNR-maximizing beamformer with ||w||^2 = power_share:
///   w ∝ (sum_{k' != k} h_rk' h_rk'^H + (noise / power_share) I)^{-1} h_rk,
/// phase fixed so the first nonzero entry is real and positive.
SlnrBeam slnr_beamformer(const LocalCsi& csi, int k, double power_share);

/// |h_rk^H w|^2 / (sum_{k' != k} |h_rk'^H w|^2 + noise).
double compute_slnr(const LocalCsi& csi, int k, const Eigen::VectorXcd& w);

/// Equal power split P_r / K_r over `cluster`; empty cluster -> no beams.
std::vector<std::pair<int, Eigen::VectorXcd>> beamform_cluster(const LocalCsi& csi, const std::vector<int>& cluster);

/// Local beamforming at every FogAP assembled into a network-wide solution
/// (zero outside each user's assigned block).
BeamformingSolution fogran_beamforming(const ChannelMatrix& true_channel, const NetworkTopology& topology,
                                       const Clustering& clustering, LeakageScope scope = LeakageScope::AllUsers);

/// Rotates `v` so its first entry with magnitude above 1e-12 ||v|| is real
/// and positive.
void fix_phase(Eigen::VectorXcd& v);

namespace detail {
/// Principal eigenvector of B^{-1} h h^H by explicit inversion and a
/// general complex eigendecomposition, unit norm and phase-fixed. Slower
/// cross-check of the linear-solve path.
Eigen::VectorXcd slnr_direction_by_eigendecomposition(const LocalCsi& csi, int k, double power_share);
}  // namespace detail

}  // namespace fogran
