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
#include "fogran/metrics.hpp"
#include "fogran/prescheduler.hpp"
#include "fogran/slnr.hpp"
#include "fogran/topology.hpp"
#include "fogran/wsr_solver.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace fogran {

/// One Monte-Carlo experiment: schemes x error variances x drops, each drop
/// simulated over `frames_per_drop` frames.
struct Scenario {
  std::string name = "desk-scale";
  TopologyConfig topology;
  ChannelConfig channel;
  SolverParams solver;
  PreschedulerParams prescheduler;
  std::vector<double> sweep{0.0, 0.01, 0.1, 0.5, 1.0};
  int drops = 50;
  int frames_per_drop = 10;
  int preschedule_period = 10;
  std::vector<double> packet_bits{12000.0, 1000.0};
  std::vector<Scheme> schemes{Scheme::CranRef, Scheme::FogranProp};
  std::uint64_t master_seed = 1;
  LeakageScope leakage = LeakageScope::AllUsers;
  /// Fixed per-architecture latency added to every packet delay, seconds.
  double cran_latency_s = 0.0;
  double fogran_latency_s = 0.0;

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

/// Thrown by validate(Scenario); `field()` names the offending entry.
class ScenarioError : public std::invalid_argument {
public:
  ScenarioError(std::string field, const std::string& message)
      : std::invalid_argument(field + ": " + message), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

private:
  std::string field_;
};

void validate(const Scenario& scenario);

/// R=4 (1 macro + 3 pico), K=8, two antennas everywhere, 50 drops of 20
/// frames.
Scenario desk_scale_scenario();
/// R=12 (3 macro + 9 pico), K=60, T=10.
Scenario paper_scale_scenario();

struct RawRow {
  Scheme scheme = Scheme::CranRef;
  int sweep_index = 0;
  double error_variance = 0.0;
  int drop = 0;
  double packet_bits = 0.0;
  /// Mean over frames of the network sum-rate, bits/s.
  double sum_rate_bps = 0.0;
  /// Mean of packet_bits / R_k (+ latency) over all (user, frame) samples
  /// with R_k > 0, seconds.
  double mean_delay_s = 0.0;
  int zero_rate_samples = 0;
  int frames = 0;
  bool converged = true;
  std::string error;
};

struct AggregateRow {
  Scheme scheme = Scheme::CranRef;
  int sweep_index = 0;
  double error_variance = 0.0;
  double packet_bits = 0.0;
  int drops = 0;
  int failed = 0;
  double mean_sum_rate_bps = 0.0;
  double ci95_sum_rate_bps = 0.0;
  double mean_delay_s = 0.0;
  double ci95_delay_s = 0.0;
};

struct ResultTable {
  std::vector<RawRow> raw;
  std::vector<AggregateRow> aggregate;
};

/// Seeds used for one (scheme, sweep point, drop). Topology, shadowing and
/// fading depend on the drop only, so every scheme and sweep point sees
/// the same network; the CSI error stream depends on all coordinates.
struct CellSeeds {
  std::uint64_t topology;
  std::uint64_t shadowing;
  std::uint64_t fading(int frame) const;
  std::uint64_t csi_error(int frame) const;

  std::uint64_t master;
  Scheme scheme;
  int sweep_index;
  int drop;
};

CellSeeds cell_seeds(std::uint64_t master_seed, Scheme scheme, int sweep_index, int drop);

using ProgressCallback = std::function<void(std::size_t done, std::size_t total)>;

/// Runs every (scheme, sweep point, drop) cell, optionally on `threads`
/// workers. Output is independent of thread count and execution order.
/// Raw rows are ordered scheme-major, then sweep point, drop, packet size.
ResultTable run_scenario(const Scenario& scenario, int threads = 1, const ProgressCallback& progress = {});

/// Means and 95% Student-t confidence half-widths over drops.
std::vector<AggregateRow> aggregate(const std::vector<RawRow>& raw, const Scenario& scenario);

/// Two-sided 95% Student-t quantile for `dof` degrees of freedom.
double t95(int dof);

}  // namespace fogran
