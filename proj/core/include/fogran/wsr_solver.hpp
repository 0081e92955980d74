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

#include <vector>

namespace fogran {

struct SolverParams {
  int max_inner_iterations = 200;
  /// Relative objective change that ends an inner WMMSE loop.
  double tolerance = 1e-5;
  int max_dual_updates = 50;
  /// tau in the reweighted activity indicator ||w||^2 / (||w||^2 + tau), watts.
  double smoothing_tau = 1e-8;
  /// Projected-subgradient step on the fronthaul multipliers. The violation
  /// is normalized by C_r, so the step is dimensionless.
  /// Step t uses dual_step / sqrt(t + 1).
  double dual_step = 0.5;
  /// Dual ascent stops once the iterate is fronthaul-feasible and its value
  /// moved by less than this fraction since the previous update.
  double dual_tolerance = 1e-3;
  /// "AP r serves user k" iff ||w_rk||^2 > factor * P_r / K.
  double active_threshold_factor = 1e-6;
  /// When false the fronthaul constraint is ignored (pure power-constrained
  /// weighted sum-rate).
  bool enforce_fronthaul = true;

  friend bool operator==(const SolverParams&, const SolverParams&) = default;
};

void validate(const SolverParams& params);

struct SolverReport {
  /// Penalized objective (bits/s) per WMMSE iteration, all inner loops
  /// concatenated. Each inner loop starts with the objective of its
  /// starting point.
  std::vector<double> objective_trace;
  /// Index into objective_trace where each inner loop begins.
  std::vector<std::size_t> segment_starts;
  int iterations = 0;
  int dual_updates = 0;
  bool converged = false;
  /// Per-AP: power budget met with equality (relative 1e-6).
  std::vector<bool> active_constraints;
  /// Per-AP: served rate sum reached C_r before throttling.
  std::vector<bool> fronthaul_binding;
  std::vector<double> fronthaul_multipliers;
  /// Weighted sum-rate of the returned (feasible) solution, bits/s.
  double weighted_sum_rate = 0.0;
};

struct WsrResult {
  BeamformingSolution solution;
  RateVector rates;
  SolverReport report;
};

/// Centralized weighted sum-rate maximization over all (AP, user) blocks
/// under per-AP power and fronthaul constraints, designed on the noisy CSI
/// only. Fronthaul is handled by dual ascent on per-AP prices that enter as
/// reweighted penalties lambda_r R_k ||w_rk||^2 / (||w_rk||^2 + tau). The
/// returned solution is the best feasible iterate: inactive blocks are
/// cleared and residual fronthaul overload is removed by proportional
/// throttling of the allocated rates.
WsrResult solve_wsr(const NoisyChannelMatrix& noisy_channel, const NetworkTopology& topology,
                    const SolverParams& params = {});

/// Rates of `solution` on the true channel, with the same activity
/// threshold and fronthaul throttling the solver applies.
RateVector evaluate_true_rates(const ChannelMatrix& true_channel, const BeamformingSolution& solution,
                               const NetworkTopology& topology, double active_threshold_factor = 1e-6);

}  // namespace fogran
