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
#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>

#include "fogran/harness.hpp"
#include "fogran/wsr_solver.hpp"
#include "helpers.hpp"

using namespace fogran;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

struct Instance {
  NetworkTopology topology;
  ChannelMatrix truth;
};

Instance desk_instance(std::uint64_t seed) {
  const Scenario s = desk_scale_scenario();
  TopologyConfig tc = s.topology;
  tc.seed = seed;
  NetworkTopology t = build_topology(tc);
  ChannelMatrix h = draw_channel(t, s.channel, seed + 1000);
  return {std::move(t), std::move(h)};
}

void check_feasible(const WsrResult& res, const NetworkTopology& t, const SolverParams& params) {
  for (int r = 0; r < t.ap_count(); ++r) {
    CHECK(res.solution.ap_power(r) <= t.ap(r).max_power_w * (1.0 + 1e-8));
  }
  const ServingSets sets = active_serving_sets(res.solution, t, params.active_threshold_factor);
  for (int r = 0; r < t.ap_count(); ++r) {
    double load = 0.0;
    for (int k : sets[static_cast<std::size_t>(r)]) load += res.rates.rates_bps[static_cast<std::size_t>(k)];
    CHECK(load <= t.ap(r).fronthaul_bps * (1.0 + 1e-6));
  }
}

void check_monotone(const SolverReport& report) {
  const auto& trace = report.objective_trace;
  for (std::size_t s = 0; s < report.segment_starts.size(); ++s) {
    const std::size_t begin = report.segment_starts[s];
    const std::size_t end = s + 1 < report.segment_starts.size() ? report.segment_starts[s + 1] : trace.size();
    for (std::size_t i = begin + 1; i < end; ++i) {
      CHECK(trace[i] >= trace[i - 1] - 1e-9 * std::abs(trace[i - 1]));
    }
  }
}

}  // namespace

TEST_CASE("single user, single AP: maximum-ratio transmission") {
  const NetworkTopology t = test::make_topology({2}, 1, {2.0}, {1e12});
  Eigen::MatrixXcd h(2, 1);
  h << std::complex<double>(2e-6, -1e-6), std::complex<double>(0.5e-6, 3e-6);
  const ChannelMatrix ch = test::make_channel(t, h);
  const double sigma2 = noise_power(ch);
  const WsrResult res = solve_wsr(exact_csi(ch), t);

  const Eigen::VectorXcd mrt = std::sqrt(2.0) * h.col(0) / h.col(0).norm();
  CHECK_THAT(test::alignment(res.solution.stacked(0), mrt), WithinAbs(1.0, 1e-9));
  CHECK_THAT(res.solution.stacked(0).squaredNorm(), WithinRel(2.0, 1e-9));
  const double rate = 10e6 * std::log2(1.0 + 2.0 * h.col(0).squaredNorm() / sigma2);
  CHECK_THAT(res.rates.rates_bps[0], WithinRel(rate, 1e-9));
  CHECK_THAT(res.report.weighted_sum_rate, WithinRel(rate, 1e-9));
  CHECK(res.report.active_constraints[0]);

  SECTION("fronthaul below the link rate caps the rate at C") {
    const NetworkTopology tight = test::make_topology({2}, 1, {2.0}, {0.25 * rate});
    const WsrResult capped = solve_wsr(exact_csi(ch), tight);
    CHECK_THAT(capped.rates.rates_bps[0], WithinRel(0.25 * rate, 1e-9));
    CHECK(capped.report.fronthaul_binding[0]);
  }
}

TEST_CASE("inner loops are monotone and solutions feasible on desk instances") {
  const SolverParams params;
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const Instance in = desk_instance(seed);
    const WsrResult res = solve_wsr(corrupt_csi(in.truth, seed % 2 ? 0.1 : 0.0, seed), in.topology, params);
    check_monotone(res.report);
    check_feasible(res, in.topology, params);
    CHECK(res.report.weighted_sum_rate > 0.0);
    CHECK(res.report.iterations > 0);
  }
}

TEST_CASE("feasible without the fronthaul constraint too") {
  SolverParams params;
  params.enforce_fronthaul = false;
  const Instance in = desk_instance(3);
  const WsrResult res = solve_wsr(exact_csi(in.truth), in.topology, params);
  check_monotone(res.report);
  CHECK(res.report.dual_updates == 0);
  for (int r = 0; r < in.topology.ap_count(); ++r)
    CHECK(res.solution.ap_power(r) <= in.topology.ap(r).max_power_w * (1.0 + 1e-8));
}

TEST_CASE("common scaling of the user weights does not change the beamformers") {
  const Instance in = desk_instance(21);
  const NoisyChannelMatrix noisy = corrupt_csi(in.truth, 0.01, 4);
  const WsrResult a = solve_wsr(noisy, in.topology);
  const NetworkTopology scaled = in.topology.with_weights(std::vector<double>(8, 3.5));
  const WsrResult b = solve_wsr(noisy, scaled);
  const double diff = (a.solution.matrix() - b.solution.matrix()).norm();
  CHECK(diff <= 1e-6 * a.solution.matrix().norm());
  CHECK_THAT(b.report.weighted_sum_rate, WithinRel(3.5 * a.report.weighted_sum_rate, 1e-6));
}

TEST_CASE("matched CSI: realized rates equal the solver's rates") {
  const Instance in = desk_instance(5);
  const WsrResult res = solve_wsr(exact_csi(in.truth), in.topology);
  const RateVector real = evaluate_true_rates(in.truth, res.solution, in.topology);
  for (std::size_t k = 0; k < real.rates_bps.size(); ++k) {
    CHECK_THAT(real.rates_bps[k], WithinRel(res.rates.rates_bps[k], 1e-12));
  }
}

TEST_CASE("large CSI error: realized rates fall below the solver's belief") {
  // One-sided paired t-test over 100 drops.
  TopologyConfig tc;
  tc.macro_count = 1;
  tc.pico_count = 1;
  tc.user_count = 3;
  tc.macro_antennas = 2;
  const ChannelConfig cc;
  std::vector<double> diffs;
  for (int drop = 0; drop < 100; ++drop) {
    tc.seed = static_cast<std::uint64_t>(drop);
    const NetworkTopology t = build_topology(tc);
    const ChannelMatrix h = draw_channel(t, cc, static_cast<std::uint64_t>(500 + drop));
    const WsrResult res = solve_wsr(corrupt_csi(h, 10.0, static_cast<std::uint64_t>(900 + drop)), t);
    const RateVector real = evaluate_true_rates(h, res.solution, t);
    diffs.push_back((res.rates.sum() - real.sum()) / 1e6);
  }
  const double n = static_cast<double>(diffs.size());
  const double mean = std::accumulate(diffs.begin(), diffs.end(), 0.0) / n;
  double ss = 0.0;
  for (double d : diffs) ss += (d - mean) * (d - mean);
  const double se = std::sqrt(ss / (n - 1.0) / n);
  // One-sided 95% Student-t quantile for 99 degrees of freedom.
  CHECK(mean / se > 1.6604);
}

TEST_CASE("zero beamformers give zero rates") {
  const Instance in = desk_instance(6);
  const BeamformingSolution zero(in.truth.layout());
  const RateVector real = evaluate_true_rates(in.truth, zero, in.topology);
  for (double r : real.rates_bps) CHECK(r == 0.0);
}

TEST_CASE("paper-scale feasibility with perfect CSI") {
  const Scenario s = paper_scale_scenario();
  TopologyConfig tc = s.topology;
  tc.seed = 17;
  const NetworkTopology t = build_topology(tc);
  const ChannelMatrix h = draw_channel(t, s.channel, 18);
  const WsrResult res = solve_wsr(exact_csi(h), t, s.solver);
  CHECK(res.report.weighted_sum_rate > 0.0);
  check_feasible(res, t, s.solver);
}

TEST_CASE("solver parameter validation") {
  SolverParams p;
  p.tolerance = 0.0;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  p = SolverParams{};
  p.max_inner_iterations = 0;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  p = SolverParams{};
  p.dual_step = -1.0;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  const Instance in = desk_instance(1);
  const NetworkTopology other = test::make_topology({2}, 8, {1.0}, {1e8});
  CHECK_THROWS_AS(solve_wsr(exact_csi(in.truth), other), std::invalid_argument);
}
