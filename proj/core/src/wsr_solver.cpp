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

#include "fogran/wsr_solver.hpp"

#include "wmmse.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <stdexcept>

namespace fogran {

void validate(const SolverParams& params) {
  if (params.max_inner_iterations < 1) throw std::invalid_argument("solver: max_inner_iterations must be >= 1");
  if (!(params.tolerance > 0.0)) throw std::invalid_argument("solver: tolerance must be > 0");
  if (params.max_dual_updates < 0) throw std::invalid_argument("solver: max_dual_updates must be >= 0");
  if (!(params.smoothing_tau > 0.0)) throw std::invalid_argument("solver: smoothing_tau must be > 0");
  if (!(params.dual_step > 0.0)) throw std::invalid_argument("solver: dual_step must be > 0");
  if (!(params.dual_tolerance > 0.0)) throw std::invalid_argument("solver: dual_tolerance must be > 0");
  if (!(params.active_threshold_factor >= 0.0))
    throw std::invalid_argument("solver: active_threshold_factor must be >= 0");
}

namespace {

void check_shapes(const NoisyChannelMatrix& channel, const NetworkTopology& topology) {
  if (channel.layout().antenna_counts() != topology.antenna_counts() ||
      channel.user_count() != topology.user_count())
    throw std::invalid_argument("solver: channel shape does not match topology");
  for (const auto& ap : topology.aps()) {
    if (!(ap.fronthaul_bps > 0.0)) throw std::invalid_argument("solver: fronthaul capacity must be > 0");
  }
}

struct Candidate {
  BeamformingSolution solution;
  std::vector<double> sinrs;
  std::vector<double> raw_rates;
  std::vector<double> rates;
  ServingSets sets;
  double value = -std::numeric_limits<double>::infinity();
};

Candidate evaluate(const Eigen::MatrixXcd& channel, const Eigen::MatrixXcd& w, const NetworkTopology& topology,
                   const AntennaLayout& layout, double noise, double bandwidth, const std::vector<double>& capacities,
                   const SolverParams& params) {
  Candidate c;
  c.solution = BeamformingSolution(layout, w);
  prune_inactive_blocks(c.solution, topology, params.active_threshold_factor);
  c.sinrs = compute_sinrs(channel, c.solution.matrix(), noise);
  c.raw_rates.resize(c.sinrs.size());
  for (std::size_t k = 0; k < c.sinrs.size(); ++k) c.raw_rates[k] = shannon_rate(bandwidth, c.sinrs[k]);
  c.sets = active_serving_sets(c.solution, topology, params.active_threshold_factor);
  c.rates = params.enforce_fronthaul ? throttle_to_fronthaul(c.raw_rates, c.sets, capacities) : c.raw_rates;
  c.value = 0.0;
  for (std::size_t k = 0; k < c.rates.size(); ++k) c.value += topology.user(static_cast<int>(k)).weight * c.rates[k];
  return c;
}

}  // namespace

WsrResult solve_wsr(const NoisyChannelMatrix& noisy_channel, const NetworkTopology& topology,
                    const SolverParams& params) {
  validate(params);
  check_shapes(noisy_channel, topology);

  const AntennaLayout& layout = noisy_channel.layout();
  const Eigen::MatrixXcd& h = noisy_channel.matrix();
  const double noise = noise_power(noisy_channel);
  const double bandwidth = noisy_channel.estimate().bandwidth_hz();
  const int aps = layout.ap_count();
  const int users = layout.user_count();

  std::vector<double> max_power;
  for (const auto& ap : topology.aps()) max_power.push_back(ap.max_power_w);
  const std::vector<double> capacities = fronthaul_capacities(topology);
  std::vector<double> weights;
  for (const auto& u : topology.users()) weights.push_back(u.weight);
  const double mean_weight = std::accumulate(weights.begin(), weights.end(), 0.0) / users;
  const double price_scale = mean_weight > 0.0 ? mean_weight : 1.0;
  const double to_bps = bandwidth / std::numbers::ln2;

  const detail::WmmseEngine engine(h, layout, noise, max_power);
  Eigen::MatrixXcd w = engine.matched_initialization();
  Eigen::MatrixXd penalties = Eigen::MatrixXd::Zero(aps, users);
  std::vector<double> lambda(static_cast<std::size_t>(aps), 0.0);

  SolverReport report;
  Candidate best;
  std::vector<bool> best_binding(static_cast<std::size_t>(aps), false);
  double previous_value = std::numeric_limits<double>::quiet_NaN();

  for (int pass = 0;; ++pass) {
    const detail::InnerLoopResult inner =
        engine.run(w, weights, penalties, params.max_inner_iterations, params.tolerance);
    report.segment_starts.push_back(report.objective_trace.size());
    for (double v : inner.trace) report.objective_trace.push_back(v * to_bps);
    report.iterations += inner.iterations;

    Candidate cand = evaluate(h, w, topology, layout, noise, bandwidth, capacities, params);

    std::vector<double> violation(static_cast<std::size_t>(aps), 0.0);
    std::vector<bool> binding(static_cast<std::size_t>(aps), false);
    bool feasible = true;
    for (int r = 0; r < aps; ++r) {
      double load = 0.0;
      for (int k : cand.sets[static_cast<std::size_t>(r)]) load += cand.raw_rates[static_cast<std::size_t>(k)];
      const double cap = capacities[static_cast<std::size_t>(r)];
      violation[static_cast<std::size_t>(r)] = (load - cap) / cap;
      binding[static_cast<std::size_t>(r)] = load >= cap * (1.0 - 1e-6);
      if (load > cap * (1.0 + 1e-6)) feasible = false;
    }

    const bool stable = pass > 0 && std::abs(cand.value - previous_value) <= params.dual_tolerance * std::abs(cand.value);
    previous_value = cand.value;
    if (cand.value > best.value) {
      best = std::move(cand);
      best_binding = binding;
    }

    const bool no_prices = std::all_of(lambda.begin(), lambda.end(), [](double l) { return l == 0.0; });
    if (!params.enforce_fronthaul || (feasible && (stable || no_prices))) {
      report.converged = inner.converged;
      break;
    }
    if (pass >= params.max_dual_updates) break;

    const double step = params.dual_step / std::sqrt(static_cast<double>(report.dual_updates) + 1.0);
    for (int r = 0; r < aps; ++r) {
      double& l = lambda[static_cast<std::size_t>(r)];
      l = std::max(0.0, l + step * violation[static_cast<std::size_t>(r)]);
    }
    ++report.dual_updates;

    const std::vector<double> gamma = engine.sinrs(w);
    for (int r = 0; r < aps; ++r) {
      for (int k = 0; k < users; ++k) {
        const double block = w.col(k).segment(layout.offset(r), layout.antennas(r)).squaredNorm();
        penalties(r, k) = price_scale * lambda[static_cast<std::size_t>(r)] *
                          std::log1p(gamma[static_cast<std::size_t>(k)]) / (block + params.smoothing_tau);
      }
    }
  }

  report.fronthaul_multipliers = lambda;
  report.fronthaul_binding = best_binding;
  report.weighted_sum_rate = best.value;
  report.active_constraints.resize(static_cast<std::size_t>(aps));
  for (int r = 0; r < aps; ++r) {
    report.active_constraints[static_cast<std::size_t>(r)] =
        best.solution.ap_power(r) >= max_power[static_cast<std::size_t>(r)] * (1.0 - 1e-6);
  }

  WsrResult result{std::move(best.solution), RateVector{std::move(best.rates), std::move(best.sinrs)},
                   std::move(report)};
  return result;
}

RateVector evaluate_true_rates(const ChannelMatrix& true_channel, const BeamformingSolution& solution,
                               const NetworkTopology& topology, double active_threshold_factor) {
  if (!true_channel.layout().same_shape(solution.layout()))
    throw std::invalid_argument("evaluate_true_rates: channel and solution shapes differ");
  RateVector out;
  out.sinrs = compute_sinrs(true_channel.matrix(), solution.matrix(), noise_power(true_channel));
  std::vector<double> raw(out.sinrs.size());
  for (std::size_t k = 0; k < raw.size(); ++k) raw[k] = shannon_rate(true_channel.bandwidth_hz(), out.sinrs[k]);
  out.rates_bps = throttle_to_fronthaul(raw, active_serving_sets(solution, topology, active_threshold_factor),
                                        fronthaul_capacities(topology));
  return out;
}

}  // namespace fogran
