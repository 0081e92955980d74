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

#include <string_view>
#include <vector>

namespace fogran {

enum class Scheme { CranRef, FogranProp };

std::string_view to_string(Scheme scheme);
/// Accepts "cran", "cran-ref", "CranRef", "fogran", "fogran-prop", "FogranProp".
Scheme scheme_from_string(std::string_view text);

/// Realized rates on the true channel with the full cross-AP interference
/// sum. Rates are B log2(1 + gamma_k), then each AP whose served sum exceeds
/// C_r has its users scaled proportionally (see throttle_to_fronthaul).
RateVector realized_rates(const ChannelMatrix& true_channel, const BeamformingSolution& solution,
                          const NetworkTopology& topology, const ServingSets& serving);

/// FogRAN variant: checks that every user's stacked beamformer is zero
/// outside its assigned AP block before computing, and throttles per
/// cluster.
RateVector realized_rates(const ChannelMatrix& true_channel, const BeamformingSolution& solution,
                          const NetworkTopology& topology, const Clustering& clustering);

/// Throws std::invalid_argument if some w_rk != 0 with r not the AP of k.
void validate_block_sparsity(const BeamformingSolution& solution, const Clustering& clustering);

struct DelayStats {
  /// packet_bits / R_k + latency; +inf when R_k = 0.
  std::vector<double> per_user_delay;
  /// Mean over users with R_k > 0; NaN when there are none.
  double mean_delay = 0.0;
  int zero_rate_users = 0;
};

/// Time to receive a packet of `packet_bits` at each user's rate, plus an
/// optional fixed per-architecture latency (seconds).
DelayStats packet_delay(const RateVector& rates, double packet_bits, double extra_latency_s = 0.0);

struct MetricsReport {
  std::vector<double> per_user_rate;
  std::vector<double> per_user_delay;
  double sum_rate = 0.0;
  double mean_delay = 0.0;
  int zero_rate_users = 0;
  Scheme scheme = Scheme::CranRef;
  double error_variance = 0.0;
  double packet_bits = 0.0;
};

MetricsReport make_report(Scheme scheme, double error_variance, const RateVector& rates, double packet_bits,
                          double extra_latency_s = 0.0);

}  // namespace fogran
