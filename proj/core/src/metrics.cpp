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

#include "fogran/metrics.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace fogran {

std::string_view to_string(Scheme scheme) { return scheme == Scheme::CranRef ? "CranRef" : "FogranProp"; }

Scheme scheme_from_string(std::string_view text) {
  if (text == "cran" || text == "cran-ref" || text == "CranRef") return Scheme::CranRef;
  if (text == "fogran" || text == "fogran-prop" || text == "FogranProp") return Scheme::FogranProp;
  throw std::invalid_argument("unknown scheme '" + std::string(text) + "'");
}

RateVector realized_rates(const ChannelMatrix& true_channel, const BeamformingSolution& solution,
                          const NetworkTopology& topology, const ServingSets& serving) {
  if (!true_channel.layout().same_shape(solution.layout()))
    throw std::invalid_argument("realized_rates: channel and solution shapes differ");
  if (serving.size() != static_cast<std::size_t>(topology.ap_count()))
    throw std::invalid_argument("realized_rates: one serving set per AP required");
  RateVector out;
  out.sinrs = compute_sinrs(true_channel.matrix(), solution.matrix(), noise_power(true_channel));
  std::vector<double> raw(out.sinrs.size());
  for (std::size_t k = 0; k < raw.size(); ++k) raw[k] = shannon_rate(true_channel.bandwidth_hz(), out.sinrs[k]);
  out.rates_bps = throttle_to_fronthaul(raw, serving, fronthaul_capacities(topology));
  return out;
}

void validate_block_sparsity(const BeamformingSolution& solution, const Clustering& clustering) {
  if (clustering.user_count() != solution.user_count() || clustering.ap_count() != solution.ap_count())
    throw std::invalid_argument("block sparsity: clustering does not match solution");
  for (int k = 0; k < solution.user_count(); ++k) {
    for (int r = 0; r < solution.ap_count(); ++r) {
      if (r != clustering.ap_of(k) && !solution.block(r, k).isZero(0.0))
        throw std::invalid_argument("block sparsity: user " + std::to_string(k) + " has a nonzero beam from AP " +
                                    std::to_string(r) + " outside its cluster");
    }
  }
}

RateVector realized_rates(const ChannelMatrix& true_channel, const BeamformingSolution& solution,
                          const NetworkTopology& topology, const Clustering& clustering) {
  validate_block_sparsity(solution, clustering);
  return realized_rates(true_channel, solution, topology, clustering.per_ap_sets());
}

DelayStats packet_delay(const RateVector& rates, double packet_bits, double extra_latency_s) {
  if (!(packet_bits > 0.0)) throw std::invalid_argument("packet_delay: packet size must be > 0");
  DelayStats out;
  out.per_user_delay.reserve(rates.rates_bps.size());
  double total = 0.0;
  int finite = 0;
  for (double r : rates.rates_bps) {
    if (r > 0.0) {
      const double d = packet_bits / r + extra_latency_s;
      out.per_user_delay.push_back(d);
      total += d;
      ++finite;
    } else {
      out.per_user_delay.push_back(std::numeric_limits<double>::infinity());
      ++out.zero_rate_users;
    }
  }
  out.mean_delay = finite > 0 ? total / finite : std::numeric_limits<double>::quiet_NaN();
  return out;
}

MetricsReport make_report(Scheme scheme, double error_variance, const RateVector& rates, double packet_bits,
                          double extra_latency_s) {
  const DelayStats delay = packet_delay(rates, packet_bits, extra_latency_s);
  MetricsReport report;
  report.per_user_rate = rates.rates_bps;
  report.per_user_delay = delay.per_user_delay;
  report.sum_rate = rates.sum();
  report.mean_delay = delay.mean_delay;
  report.zero_rate_users = delay.zero_rate_users;
  report.scheme = scheme;
  report.error_variance = error_variance;
  report.packet_bits = packet_bits;
  return report;
}

}  // namespace fogran
