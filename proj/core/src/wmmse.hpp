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

// Weighted-MMSE inner loop shared by the centralized solver and the
// pre-scheduler. Not part of the installed interface.

#include "fogran/layout.hpp"

#include <Eigen/Dense>

#include <vector>

namespace fogran::detail {

struct InnerLoopResult {
  /// Penalized objective before the first update followed by one entry per
  /// iteration. Non-decreasing up to rounding.
  std::vector<double> trace;
  int iterations = 0;
  bool converged = false;
};

/// Block-coordinate WMMSE for
///   max  sum_k a_k ln(1 + gamma_k) - sum_{r,k} mu_rk ||w_rk||^2
///   s.t. sum_k ||w_rk||^2 <= P_r  for every AP r.
/// One iteration: MMSE receive scalars, MSE weights a_k / MSE_k, then an
/// exact minimization of the quadratic surrogate AP by AP (Gauss-Seidel),
/// each AP's power multiplier found by bisection.
class WmmseEngine {
public:
  WmmseEngine(const Eigen::MatrixXcd& channel, AntennaLayout layout, double noise_power,
              std::vector<double> max_power);

  /// Runs until the relative objective change drops below `tolerance` or
  /// `max_iterations` is reached. `beamformers` is updated in place.
  InnerLoopResult run(Eigen::MatrixXcd& beamformers, const std::vector<double>& weights,
                      const Eigen::MatrixXd& penalties, int max_iterations, double tolerance) const;

  double objective(const Eigen::MatrixXcd& beamformers, const std::vector<double>& weights,
                   const Eigen::MatrixXd& penalties) const;

  std::vector<double> sinrs(const Eigen::MatrixXcd& beamformers) const;

  /// w_rk = sqrt(P_r / K) h_rk / ||h_rk||.
  Eigen::MatrixXcd matched_initialization() const;

private:
  void transmit_update(Eigen::MatrixXcd& w, const std::vector<double>& weights,
                       const Eigen::MatrixXd& penalties) const;

  const Eigen::MatrixXcd& h_;
  AntennaLayout layout_;
  double noise_;
  std::vector<double> max_power_;
};

/// Smallest multiplier nu >= 0 (up to bisection resolution, rounded toward
/// lower power) such that sum_{i,j} |q_ij|^2 / (lambda_i + mu_j + nu)^2 <= budget.
double power_multiplier(const Eigen::VectorXd& eigenvalues, const Eigen::MatrixXd& projected_sq,
                        const Eigen::VectorXd& column_shift, double budget);

}  // namespace fogran::detail
