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

#include "fogran/prescheduler.hpp"

#include "fogran/metrics.hpp"
#include "fogran/slnr.hpp"

#include "wmmse.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace fogran {

Clustering::Clustering(std::vector<int> assignment, int ap_count)
    : assignment_(std::move(assignment)), sets_(static_cast<std::size_t>(ap_count)) {
  if (ap_count < 1) throw std::invalid_argument("clustering: at least one AP required");
  for (std::size_t k = 0; k < assignment_.size(); ++k) {
    const int r = assignment_[k];
    if (r < 0 || r >= ap_count)
      throw std::invalid_argument("clustering: user " + std::to_string(k) + " assigned to unknown AP");
    sets_[static_cast<std::size_t>(r)].push_back(static_cast<int>(k));
  }
}

bool is_partition(const ServingSets& sets, int users) {
  std::vector<int> seen(static_cast<std::size_t>(users), 0);
  for (const auto& s : sets) {
    for (int k : s) {
      if (k < 0 || k >= users) return false;
      if (++seen[static_cast<std::size_t>(k)] > 1) return false;
    }
  }
  return std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; });
}

void validate(const PreschedulerParams& params) {
  validate(params.solver);
  if (!(params.initial_penalty > 0.0)) throw std::invalid_argument("prescheduler: initial_penalty must be > 0");
  if (!(params.penalty_growth >= 1.0)) throw std::invalid_argument("prescheduler: penalty_growth must be >= 1");
  if (params.passes < 1) throw std::invalid_argument("prescheduler: passes must be >= 1");
  if (!(params.concentration_target > 0.0 && params.concentration_target <= 1.0))
    throw std::invalid_argument("prescheduler: concentration_target must be in (0, 1]");
  if (params.period_frames < 1) throw std::invalid_argument("prescheduler: period must be >= 1 frame");
  if (params.local_search_passes < 0) throw std::invalid_argument("prescheduler: local_search_passes must be >= 0");
}

double predicted_fogran_utility(const NoisyChannelMatrix& noisy_channel, const NetworkTopology& topology,
                                const Clustering& clustering) {
  const ChannelMatrix& estimate = noisy_channel.estimate();
  const BeamformingSolution beams = fogran_beamforming(estimate, topology, clustering);
  const RateVector rates = realized_rates(estimate, beams, topology, clustering);
  double value = 0.0;
  for (int k = 0; k < topology.user_count(); ++k) value += topology.user(k).weight * rates.rates_bps[static_cast<std::size_t>(k)];
  return value;
}

namespace {

int strongest_ap(const NoisyChannelMatrix& channel, const NetworkTopology& topology, int k) {
  int best = 0;
  double best_power = -1.0;
  for (int r = 0; r < channel.ap_count(); ++r) {
    const double p = topology.ap(r).max_power_w * channel.block(r, k).squaredNorm();
    if (p > best_power) {
      best_power = p;
      best = r;
    }
  }
  return best;
}

}  // namespace

Clustering strongest_channel_clustering(const NoisyChannelMatrix& channel, const NetworkTopology& topology) {
  std::vector<int> assignment(static_cast<std::size_t>(channel.user_count()));
  for (int k = 0; k < channel.user_count(); ++k) assignment[static_cast<std::size_t>(k)] = strongest_ap(channel, topology, k);
  return Clustering(std::move(assignment), channel.ap_count());
}

Clustering extract_clustering(const BeamformingSolution& solution, const NoisyChannelMatrix& fallback_channel,
                              const NetworkTopology& topology) {
  if (!solution.layout().same_shape(fallback_channel.layout()))
    throw std::invalid_argument("extract_clustering: solution and channel shapes differ");
  std::vector<int> assignment(static_cast<std::size_t>(solution.user_count()));
  for (int k = 0; k < solution.user_count(); ++k) {
    int best = -1;
    double best_power = 0.0;
    for (int r = 0; r < solution.ap_count(); ++r) {
      const double p = solution.block_power(r, k);
      if (!std::isfinite(p)) throw std::invalid_argument("extract_clustering: non-finite beamformer");
      if (p > best_power) {
        best_power = p;
        best = r;
      }
    }
    assignment[static_cast<std::size_t>(k)] = best >= 0 ? best : strongest_ap(fallback_channel, topology, k);
  }
  return Clustering(std::move(assignment), solution.ap_count());
}

PreSchedule preschedule(const NoisyChannelMatrix& noisy_channel, const NetworkTopology& topology,
                        const PreschedulerParams& params) {
  validate(params);
  if (noisy_channel.layout().antenna_counts() != topology.antenna_counts() ||
      noisy_channel.user_count() != topology.user_count())
    throw std::invalid_argument("preschedule: channel shape does not match topology");

  const AntennaLayout& layout = noisy_channel.layout();
  const int aps = layout.ap_count();
  const int users = layout.user_count();
  const SolverParams& sp = params.solver;

  if (aps == 1) {
    return PreSchedule{Clustering(std::vector<int>(static_cast<std::size_t>(users), 0), 1), params.period_frames,
                       noisy_channel.error_variance(), true, 0, 1.0};
  }

  std::vector<double> max_power;
  for (const auto& ap : topology.aps()) max_power.push_back(ap.max_power_w);
  const std::vector<double> capacities = fronthaul_capacities(topology);
  std::vector<double> weights;
  for (const auto& u : topology.users()) weights.push_back(u.weight);
  const double mean_weight = std::accumulate(weights.begin(), weights.end(), 0.0) / users;
  const double price_scale = mean_weight > 0.0 ? mean_weight : 1.0;
  const double noise = noise_power(noisy_channel);
  const double bandwidth = noisy_channel.estimate().bandwidth_hz();

  const detail::WmmseEngine engine(noisy_channel.matrix(), layout, noise, max_power);
  Eigen::MatrixXcd w = engine.matched_initialization();
  Eigen::MatrixXd penalties(aps, users);
  std::vector<double> lambda(static_cast<std::size_t>(aps), 0.0);

  PreSchedule out{Clustering(std::vector<int>(static_cast<std::size_t>(users), 0), aps), params.period_frames,
                  noisy_channel.error_variance(), true, 0, 0.0};
  double c = params.initial_penalty;
  for (int pass = 0; pass < params.passes; ++pass) {
    std::vector<double> gamma = engine.sinrs(w);
    for (int r = 0; r < aps; ++r) {
      for (int k = 0; k < users; ++k) {
        const double block = w.col(k).segment(layout.offset(r), layout.antennas(r)).squaredNorm();
        const double price = sp.enforce_fronthaul
                                 ? lambda[static_cast<std::size_t>(r)] * std::log1p(gamma[static_cast<std::size_t>(k)])
                                 : 0.0;
        penalties(r, k) = price_scale * (c + price) / (block + sp.smoothing_tau);
      }
    }
    engine.run(w, weights, penalties, sp.max_inner_iterations, sp.tolerance);
    ++out.passes;

    // Fronthaul prices on the current sparse support.
    BeamformingSolution current(layout, w);
    prune_inactive_blocks(current, topology, sp.active_threshold_factor);
    gamma = compute_sinrs(noisy_channel.matrix(), current.matrix(), noise);
    const ServingSets sets = active_serving_sets(current, topology, sp.active_threshold_factor);
    for (int r = 0; r < aps && sp.enforce_fronthaul; ++r) {
      double load = 0.0;
      for (int k : sets[static_cast<std::size_t>(r)])
        load += shannon_rate(bandwidth, gamma[static_cast<std::size_t>(k)]);
      const double cap = capacities[static_cast<std::size_t>(r)];
      double& l = lambda[static_cast<std::size_t>(r)];
      l = std::max(0.0, l + sp.dual_step * (load - cap) / cap);
    }

    int concentrated = 0;
    for (int k = 0; k < users; ++k) {
      double total = 0.0;
      double peak = 0.0;
      for (int r = 0; r < aps; ++r) {
        const double p = w.col(k).segment(layout.offset(r), layout.antennas(r)).squaredNorm();
        total += p;
        peak = std::max(peak, p);
      }
      if (total <= 0.0 || peak >= params.concentration_target * total) ++concentrated;
    }
    out.concentrated_fraction = static_cast<double>(concentrated) / users;
    out.converged = concentrated == users;
    if (out.converged) break;
    c *= params.penalty_growth;
  }

  out.clustering = extract_clustering(BeamformingSolution(layout, w), noisy_channel, topology);
  if (!params.local_search) return out;

  // First-improvement single-user moves; strict gains only, so it terminates.
  std::vector<int> assignment = out.clustering.assignment();
  double best = predicted_fogran_utility(noisy_channel, topology, out.clustering);
  for (int pass = 0; pass < params.local_search_passes; ++pass) {
    bool improved = false;
    for (int k = 0; k < users; ++k) {
      const int home = assignment[static_cast<std::size_t>(k)];
      int best_ap = home;
      for (int r = 0; r < aps; ++r) {
        if (r == home) continue;
        assignment[static_cast<std::size_t>(k)] = r;
        const double v = predicted_fogran_utility(noisy_channel, topology, Clustering(assignment, aps));
        if (v > best * (1.0 + 1e-12)) {
          best = v;
          best_ap = r;
        }
      }
      assignment[static_cast<std::size_t>(k)] = best_ap;
      if (best_ap != home) {
        improved = true;
        ++out.moves;
      }
    }
    if (!improved) break;
  }
  out.clustering = Clustering(std::move(assignment), aps);
  return out;
}

}  // namespace fogran
