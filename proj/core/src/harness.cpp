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

#include "fogran/harness.hpp"

#include "fogran/rng.hpp"

#include <boost/math/distributions/students_t.hpp>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <type_traits>

namespace fogran {

// Pre-scheduling may only see outdated CSI and local beamforming may only see
// the true channel; the two types must never convert into each other.
static_assert(!std::is_convertible_v<ChannelMatrix, NoisyChannelMatrix>);
static_assert(!std::is_convertible_v<NoisyChannelMatrix, ChannelMatrix>);
static_assert(!std::is_convertible_v<const NoisyChannelMatrix&, const ChannelMatrix&>);

void validate(const Scenario& s) {
  if (s.topology.macro_count < 0) throw ScenarioError("topology.macro_count", "must be >= 0");
  if (s.topology.pico_count < 0) throw ScenarioError("topology.pico_count", "must be >= 0");
  if (s.topology.macro_count + s.topology.pico_count < 1)
    throw ScenarioError("topology", "at least one access point required");
  if (s.topology.user_count < 1) throw ScenarioError("topology.users", "must be >= 1");
  if (!(s.topology.extent_m > 0.0)) throw ScenarioError("topology.extent_m", "must be > 0");
  if (s.topology.macro_antennas < 1) throw ScenarioError("topology.macro_antennas", "must be >= 1");
  if (s.topology.pico_antennas < 1) throw ScenarioError("topology.pico_antennas", "must be >= 1");
  if (!(s.topology.macro_power_w > 0.0)) throw ScenarioError("topology.macro_power_dbm", "must be finite");
  if (!(s.topology.pico_power_w > 0.0)) throw ScenarioError("topology.pico_power_dbm", "must be finite");
  if (!(s.topology.macro_fronthaul_bps > 0.0)) throw ScenarioError("topology.macro_fronthaul_mbps", "must be > 0");
  if (!(s.topology.pico_fronthaul_bps > 0.0)) throw ScenarioError("topology.pico_fronthaul_mbps", "must be > 0");
  if (!(s.topology.min_distance_m >= 0.0)) throw ScenarioError("topology.min_distance_m", "must be >= 0");
  if (!(s.topology.user_weight >= 0.0)) throw ScenarioError("topology.user_weight", "must be >= 0");
  if (!(s.channel.bandwidth_hz > 0.0)) throw ScenarioError("channel.bandwidth_mhz", "must be > 0");
  if (!(s.channel.noise_psd_w_per_hz > 0.0)) throw ScenarioError("channel.noise_psd_dbm_hz", "must be finite");
  if (!(s.channel.shadowing_std_db >= 0.0)) throw ScenarioError("channel.shadowing_std_db", "must be >= 0");
  try {
    validate(s.solver);
  } catch (const std::invalid_argument& e) {
    throw ScenarioError("solver", e.what());
  }
  try {
    PreschedulerParams p = s.prescheduler;
    p.solver = s.solver;
    p.period_frames = std::max(1, s.preschedule_period);
    validate(p);
  } catch (const std::invalid_argument& e) {
    throw ScenarioError("prescheduler", e.what());
  }
  if (s.sweep.empty()) throw ScenarioError("sweep", "at least one error variance required");
  for (double v : s.sweep) {
    if (!(v >= 0.0) || !std::isfinite(v)) throw ScenarioError("sweep", "error variances must be finite and >= 0");
  }
  if (s.drops < 1) throw ScenarioError("drops", "must be >= 1");
  if (s.preschedule_period < 1) throw ScenarioError("preschedule_period", "must be >= 1");
  if (s.frames_per_drop < s.preschedule_period)
    throw ScenarioError("frames_per_drop", "must be >= preschedule_period");
  if (s.packet_bits.empty()) throw ScenarioError("packet_bits", "at least one packet size required");
  for (double p : s.packet_bits) {
    if (!(p > 0.0) || !std::isfinite(p)) throw ScenarioError("packet_bits", "packet sizes must be > 0");
  }
  if (s.schemes.empty()) throw ScenarioError("schemes", "at least one scheme required");
  if (!(s.cran_latency_s >= 0.0)) throw ScenarioError("cran_latency_ms", "must be >= 0");
  if (!(s.fogran_latency_s >= 0.0)) throw ScenarioError("fogran_latency_ms", "must be >= 0");
}

Scenario desk_scale_scenario() {
  Scenario s;
  s.name = "desk-scale";
  s.topology.macro_count = 1;
  s.topology.pico_count = 3;
  s.topology.user_count = 8;
  s.topology.macro_antennas = 2;
  s.topology.pico_antennas = 2;
  // Two pre-scheduling periods per drop.
  s.frames_per_drop = 20;
  return s;
}

Scenario paper_scale_scenario() {
  Scenario s;
  s.name = "paper-scale";
  s.topology = TopologyConfig{};
  s.drops = 10;
  return s;
}

std::uint64_t CellSeeds::fading(int frame) const {
  return derive_seed(master, {tag(StreamTag::Fading), static_cast<std::uint64_t>(drop), static_cast<std::uint64_t>(frame)});
}

std::uint64_t CellSeeds::csi_error(int frame) const {
  return derive_seed(master, {tag(StreamTag::CsiError), static_cast<std::uint64_t>(scheme),
                              static_cast<std::uint64_t>(sweep_index), static_cast<std::uint64_t>(drop),
                              static_cast<std::uint64_t>(frame)});
}

CellSeeds cell_seeds(std::uint64_t master_seed, Scheme scheme, int sweep_index, int drop) {
  CellSeeds s{};
  s.master = master_seed;
  s.scheme = scheme;
  s.sweep_index = sweep_index;
  s.drop = drop;
  s.topology = derive_seed(master_seed, {tag(StreamTag::Topology), static_cast<std::uint64_t>(drop)});
  s.shadowing = derive_seed(master_seed, {tag(StreamTag::Shadowing), static_cast<std::uint64_t>(drop)});
  return s;
}

double t95(int dof) {
  if (dof < 1) return std::numeric_limits<double>::quiet_NaN();
  boost::math::students_t dist(static_cast<double>(dof));
  return boost::math::quantile(boost::math::complement(dist, 0.025));
}

namespace {

struct CellTask {
  Scheme scheme;
  int sweep_index;
  int drop;
};

struct FrameOutcome {
  RateVector rates;
  bool converged = true;
};

std::vector<RawRow> run_cell(const Scenario& sc, const CellTask& task) {
  const double variance = sc.sweep[static_cast<std::size_t>(task.sweep_index)];
  const CellSeeds seeds = cell_seeds(sc.master_seed, task.scheme, task.sweep_index, task.drop);
  const double latency = task.scheme == Scheme::CranRef ? sc.cran_latency_s : sc.fogran_latency_s;

  std::vector<RawRow> rows;
  for (double p : sc.packet_bits) {
    RawRow row;
    row.scheme = task.scheme;
    row.sweep_index = task.sweep_index;
    row.error_variance = variance;
    row.drop = task.drop;
    row.packet_bits = p;
    rows.push_back(row);
  }

  try {
    TopologyConfig tc = sc.topology;
    tc.seed = seeds.topology;
    const NetworkTopology topology = build_topology(tc);
    const LargeScaleGains gains = draw_large_scale(topology, sc.channel, seeds.shadowing);

    PreschedulerParams pp = sc.prescheduler;
    pp.solver = sc.solver;
    pp.period_frames = sc.preschedule_period;

    std::vector<FrameOutcome> frames;
    frames.reserve(static_cast<std::size_t>(sc.frames_per_drop));
    std::optional<PreSchedule> schedule;
    for (int f = 0; f < sc.frames_per_drop; ++f) {
      const ChannelMatrix truth = draw_fading(topology, gains, sc.channel, seeds.fading(f));
      FrameOutcome outcome;
      if (task.scheme == Scheme::CranRef) {
        const NoisyChannelMatrix noisy = corrupt_csi(truth, variance, seeds.csi_error(f));
        const WsrResult solved = solve_wsr(noisy, topology, sc.solver);
        outcome.converged = solved.report.converged;
        outcome.rates = evaluate_true_rates(truth, solved.solution, topology, sc.solver.active_threshold_factor);
      } else {
        if (f % sc.preschedule_period == 0) {
          const NoisyChannelMatrix noisy = corrupt_csi(truth, variance, seeds.csi_error(f));
          schedule = preschedule(noisy, topology, pp);
        }
        outcome.converged = schedule->converged;
        const BeamformingSolution beams = fogran_beamforming(truth, topology, schedule->clustering, sc.leakage);
        outcome.rates = realized_rates(truth, beams, topology, schedule->clustering);
      }
      frames.push_back(std::move(outcome));
    }

    for (RawRow& row : rows) {
      double rate_total = 0.0;
      double delay_total = 0.0;
      int delay_samples = 0;
      for (const FrameOutcome& fo : frames) {
        rate_total += fo.rates.sum();
        row.converged = row.converged && fo.converged;
        const DelayStats d = packet_delay(fo.rates, row.packet_bits, latency);
        for (double v : d.per_user_delay) {
          if (std::isfinite(v)) {
            delay_total += v;
            ++delay_samples;
          }
        }
        row.zero_rate_samples += d.zero_rate_users;
      }
      row.frames = static_cast<int>(frames.size());
      row.sum_rate_bps = rate_total / static_cast<double>(frames.size());
      row.mean_delay_s = delay_samples > 0 ? delay_total / delay_samples : std::numeric_limits<double>::quiet_NaN();
    }
  } catch (const std::exception& e) {
    for (RawRow& row : rows) {
      row.error = e.what();
      row.converged = false;
      row.sum_rate_bps = std::numeric_limits<double>::quiet_NaN();
      row.mean_delay_s = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return rows;
}

void mean_and_ci(const std::vector<double>& xs, double& mean, double& ci) {
  const std::size_t n = xs.size();
  if (n == 0) {
    mean = std::numeric_limits<double>::quiet_NaN();
    ci = std::numeric_limits<double>::quiet_NaN();
    return;
  }
  double sum = 0.0;
  for (double x : xs) sum += x;
  mean = sum / static_cast<double>(n);
  if (n < 2) {
    ci = 0.0;
    return;
  }
  double ss = 0.0;
  for (double x : xs) ss += (x - mean) * (x - mean);
  const double sd = std::sqrt(ss / static_cast<double>(n - 1));
  ci = t95(static_cast<int>(n) - 1) * sd / std::sqrt(static_cast<double>(n));
}

}  // namespace

std::vector<AggregateRow> aggregate(const std::vector<RawRow>& raw, const Scenario& scenario) {
  std::vector<AggregateRow> out;
  for (Scheme scheme : scenario.schemes) {
    for (std::size_t i = 0; i < scenario.sweep.size(); ++i) {
      for (double p : scenario.packet_bits) {
        AggregateRow agg;
        agg.scheme = scheme;
        agg.sweep_index = static_cast<int>(i);
        agg.error_variance = scenario.sweep[i];
        agg.packet_bits = p;
        std::vector<double> rates;
        std::vector<double> delays;
        for (const RawRow& row : raw) {
          if (row.scheme != scheme || row.sweep_index != static_cast<int>(i) || row.packet_bits != p) continue;
          if (!row.error.empty()) {
            ++agg.failed;
            continue;
          }
          rates.push_back(row.sum_rate_bps);
          if (std::isfinite(row.mean_delay_s)) delays.push_back(row.mean_delay_s);
        }
        agg.drops = static_cast<int>(rates.size());
        mean_and_ci(rates, agg.mean_sum_rate_bps, agg.ci95_sum_rate_bps);
        mean_and_ci(delays, agg.mean_delay_s, agg.ci95_delay_s);
        out.push_back(agg);
      }
    }
  }
  return out;
}

ResultTable run_scenario(const Scenario& scenario, int threads, const ProgressCallback& progress) {
  validate(scenario);
  std::vector<CellTask> tasks;
  for (Scheme scheme : scenario.schemes) {
    for (int i = 0; i < static_cast<int>(scenario.sweep.size()); ++i) {
      for (int d = 0; d < scenario.drops; ++d) tasks.push_back({scheme, i, d});
    }
  }

  std::vector<std::vector<RawRow>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> done{0};
  std::mutex progress_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      results[i] = run_cell(scenario, tasks[i]);
      const std::size_t finished = ++done;
      if (progress) {
        std::lock_guard lock(progress_mutex);
        progress(finished, tasks.size());
      }
    }
  };

  const int workers = std::clamp(threads, 1, static_cast<int>(std::max<std::size_t>(tasks.size(), 1)));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
  }

  ResultTable table;
  for (auto& rows : results) {
    for (auto& row : rows) table.raw.push_back(std::move(row));
  }
  table.aggregate = aggregate(table.raw, scenario);
  return table;
}

}  // namespace fogran
