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

#include "fogran/beamforming.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace fogran {

BeamformingSolution::BeamformingSolution(AntennaLayout layout)
    : layout_(std::move(layout)), w_(Eigen::MatrixXcd::Zero(layout_.total_antennas(), layout_.user_count())) {}

BeamformingSolution::BeamformingSolution(AntennaLayout layout, Eigen::MatrixXcd stacked)
    : layout_(std::move(layout)), w_(std::move(stacked)) {
  if (w_.rows() != layout_.total_antennas() || w_.cols() != layout_.user_count())
    throw std::invalid_argument("beamforming solution: matrix shape does not match layout");
}

double BeamformingSolution::ap_power(int r) const {
  return w_.middleRows(layout_.offset(r), layout_.antennas(r)).squaredNorm();
}

std::vector<double> BeamformingSolution::per_ap_power() const {
  std::vector<double> p(static_cast<std::size_t>(ap_count()));
  for (int r = 0; r < ap_count(); ++r) p[static_cast<std::size_t>(r)] = ap_power(r);
  return p;
}

double RateVector::sum() const { return std::accumulate(rates_bps.begin(), rates_bps.end(), 0.0); }

std::vector<double> compute_sinrs(const Eigen::MatrixXcd& channel, const Eigen::MatrixXcd& beamformers,
                                  double noise_power) {
  if (channel.rows() != beamformers.rows() || channel.cols() != beamformers.cols())
    throw std::invalid_argument("compute_sinrs: channel and beamformer shapes differ");
  const Eigen::MatrixXcd gains = channel.adjoint() * beamformers;  // (k, j) = h_k^H w_j
  const Eigen::Index users = gains.rows();
  std::vector<double> sinr(static_cast<std::size_t>(users));
  for (Eigen::Index k = 0; k < users; ++k) {
    double interference = 0.0;
    for (Eigen::Index j = 0; j < users; ++j) {
      if (j != k) interference += std::norm(gains(k, j));
    }
    sinr[static_cast<std::size_t>(k)] = std::norm(gains(k, k)) / (interference + noise_power);
  }
  return sinr;
}

double compute_sinr(const ChannelMatrix& channel, const BeamformingSolution& solution, int k) {
  if (!channel.layout().same_shape(solution.layout()))
    throw std::invalid_argument("compute_sinr: channel and solution shapes differ");
  const auto h = channel.stacked(k);
  const double signal = std::norm(h.dot(solution.stacked(k)));
  double interference = 0.0;
  for (int j = 0; j < solution.user_count(); ++j) {
    if (j != k) interference += std::norm(h.dot(solution.stacked(j)));
  }
  return signal / (interference + noise_power(channel));
}

double shannon_rate(double bandwidth_hz, double sinr) { return bandwidth_hz * std::log2(1.0 + sinr); }

double active_threshold(const NetworkTopology& topology, int r, double factor) {
  return factor * topology.ap(r).max_power_w / topology.user_count();
}

ServingSets active_serving_sets(const BeamformingSolution& solution, const NetworkTopology& topology, double factor) {
  ServingSets sets(static_cast<std::size_t>(solution.ap_count()));
  for (int r = 0; r < solution.ap_count(); ++r) {
    const double eps = active_threshold(topology, r, factor);
    for (int k = 0; k < solution.user_count(); ++k) {
      if (solution.block_power(r, k) > eps) sets[static_cast<std::size_t>(r)].push_back(k);
    }
  }
  return sets;
}

int prune_inactive_blocks(BeamformingSolution& solution, const NetworkTopology& topology, double factor) {
  int cleared = 0;
  for (int r = 0; r < solution.ap_count(); ++r) {
    const double eps = active_threshold(topology, r, factor);
    for (int k = 0; k < solution.user_count(); ++k) {
      auto b = solution.block(r, k);
      if (b.squaredNorm() <= eps && !b.isZero(0.0)) {
        b.setZero();
        ++cleared;
      }
    }
  }
  return cleared;
}

std::vector<double> throttle_to_fronthaul(const std::vector<double>& rates_bps, const ServingSets& sets,
                                          const std::vector<double>& capacities_bps) {
  if (sets.size() != capacities_bps.size()) throw std::invalid_argument("throttle: one capacity per AP required");
  std::vector<double> factor(rates_bps.size(), 1.0);
  for (std::size_t r = 0; r < sets.size(); ++r) {
    double load = 0.0;
    for (int k : sets[r]) load += rates_bps.at(static_cast<std::size_t>(k));
    if (load > capacities_bps[r]) {
      const double s = capacities_bps[r] / load;
      for (int k : sets[r]) factor[static_cast<std::size_t>(k)] = std::min(factor[static_cast<std::size_t>(k)], s);
    }
  }
  std::vector<double> out(rates_bps.size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = rates_bps[k] * factor[k];
  return out;
}

std::vector<double> fronthaul_capacities(const NetworkTopology& topology) {
  std::vector<double> c;
  c.reserve(static_cast<std::size_t>(topology.ap_count()));
  for (const auto& ap : topology.aps()) c.push_back(ap.fronthaul_bps);
  return c;
}

}  // namespace fogran
