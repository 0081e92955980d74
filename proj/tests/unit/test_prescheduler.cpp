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

#include <algorithm>

#include "fogran/harness.hpp"
#include "fogran/metrics.hpp"
#include "fogran/prescheduler.hpp"
#include "fogran/slnr.hpp"
#include "helpers.hpp"

using namespace fogran;

namespace {

BeamformingSolution powers(const std::vector<std::vector<double>>& p) {
  // p[r][k] = ||w_rk||^2 for single-antenna APs.
  const int aps = static_cast<int>(p.size());
  const int users = static_cast<int>(p.front().size());
  Eigen::MatrixXcd w(aps, users);
  for (int r = 0; r < aps; ++r)
    for (int k = 0; k < users; ++k) w(r, k) = std::sqrt(p[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)]);
  return BeamformingSolution(AntennaLayout(std::vector<int>(static_cast<std::size_t>(aps), 1), users), w);
}

NoisyChannelMatrix ones(const NetworkTopology& t) {
  return exact_csi(test::make_channel(t, Eigen::MatrixXcd::Constant(t.total_antennas(), t.user_count(), 1e-6)));
}

}  // namespace

TEST_CASE("clustering bookkeeping") {
  const Clustering c({1, 0, 1, 1}, 3);
  CHECK(c.cluster(0) == std::vector<int>{1});
  CHECK(c.cluster(1) == std::vector<int>{0, 2, 3});
  CHECK(c.cluster(2).empty());
  CHECK(c.ap_of(2) == 1);
  CHECK(is_partition(c.per_ap_sets(), 4));
  CHECK_FALSE(is_partition({{0, 1}, {1, 2, 3}}, 4));
  CHECK_FALSE(is_partition({{0, 1}, {3}}, 4));
  CHECK_THROWS_AS(Clustering({0, 3}, 3), std::invalid_argument);
}

TEST_CASE("extraction: argmax with lowest-index ties") {
  const NetworkTopology t = test::make_topology({1, 1}, 4, {1.0, 1.0}, {1e9, 1e9});
  const NoisyChannelMatrix h = ones(t);
  SECTION("already sparse") {
    CHECK(extract_clustering(powers({{0.3, 0.0, 0.0, 1.0}, {0.0, 0.2, 0.7, 0.0}}), h, t).assignment() ==
          std::vector<int>{0, 1, 1, 0});
  }
  SECTION("0.4 / 0.6 goes to the second AP") {
    CHECK(extract_clustering(powers({{0.4, 0, 0, 0}, {0.6, 0, 0, 0}}), h, t).ap_of(0) == 1);
  }
  SECTION("exact tie goes to the lower index") {
    CHECK(extract_clustering(powers({{0.5, 0, 0, 0}, {0.5, 0, 0, 0}}), h, t).ap_of(0) == 0);
  }
}

TEST_CASE("extraction falls back to the strongest received power") {
  const NetworkTopology t = test::make_topology({1, 1}, 1, {1.0, 4.0}, {1e9, 1e9});
  Eigen::MatrixXcd h(2, 1);
  h << 1.5e-6, 1.0e-6;  // AP 1: 4 * 1e-12 > 1 * 2.25e-12
  const NoisyChannelMatrix n = exact_csi(test::make_channel(t, h));
  CHECK(extract_clustering(powers({{0.0}, {0.0}}), n, t).ap_of(0) == 1);
  CHECK(strongest_channel_clustering(n, t).ap_of(0) == 1);
}

TEST_CASE("one AP takes every user") {
  const NetworkTopology t = test::make_topology({2}, 5, {1.0}, {1e8});
  std::mt19937_64 rng(3);
  const ChannelMatrix h = test::make_channel(t, test::random_complex(2, 5, rng, 1e-12));
  const PreSchedule s = preschedule(corrupt_csi(h, 0.5, 1), t);
  CHECK(s.clustering.assignment() == std::vector<int>(5, 0));
  CHECK(s.converged);
}

TEST_CASE("block-diagonal channel keeps users at their own AP") {
  const NetworkTopology t = test::make_topology({2, 2}, 2, {1.0, 1.0}, {1e9, 1e9});
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(4, 2);
  h(0, 0) = {1e-6, 2e-7};
  h(1, 0) = {-3e-7, 5e-7};
  h(2, 1) = {4e-7, -1e-6};
  h(3, 1) = {2e-7, 2e-7};
  const PreSchedule s = preschedule(exact_csi(test::make_channel(t, h)), t);
  CHECK(s.clustering.assignment() == std::vector<int>{0, 1});
}

TEST_CASE("a lone user picks the AP with the largest P_r ||h_r||^2") {
  // AP 0 has the strongest channel but AP 2 the strongest received power.
  const NetworkTopology t = test::make_topology({1, 2, 1}, 1, {1.0, 1.0, 20.0}, {1e9, 1e9, 1e9});
  Eigen::MatrixXcd h(4, 1);
  h << 3e-6, 1e-6, 1e-6, 1e-6;
  const NoisyChannelMatrix n = exact_csi(test::make_channel(t, h));
  CHECK(preschedule(n, t).clustering.ap_of(0) == 2);
  PreschedulerParams no_search;
  no_search.local_search = false;
  CHECK(preschedule(n, t, no_search).clustering.ap_of(0) == 2);
}

TEST_CASE("pre-scheduling always returns an exact partition") {
  const Scenario s = desk_scale_scenario();
  PreschedulerParams fast = s.prescheduler;
  fast.solver.max_inner_iterations = 40;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    TopologyConfig tc = s.topology;
    tc.seed = seed;
    tc.user_count = 2 + static_cast<int>(seed % 9);
    const NetworkTopology t = build_topology(tc);
    const ChannelMatrix h = draw_channel(t, s.channel, seed);
    const PreSchedule p = preschedule(corrupt_csi(h, 0.05 * static_cast<double>(seed % 5), seed), t, fast);
    CHECK(is_partition(p.clustering.per_ap_sets(), t.user_count()));
    CHECK(p.clustering.user_count() == t.user_count());
    CHECK(p.passes >= 1);
  }
}

TEST_CASE("pre-scheduling is deterministic") {
  const Scenario s = desk_scale_scenario();
  TopologyConfig tc = s.topology;
  tc.seed = 44;
  const NetworkTopology t = build_topology(tc);
  const NoisyChannelMatrix n = corrupt_csi(draw_channel(t, s.channel, 45), 0.1, 46);
  const PreSchedule a = preschedule(n, t);
  const PreSchedule b = preschedule(n, t);
  CHECK(a.clustering == b.clustering);
  CHECK(a.passes == b.passes);
  CHECK(a.based_on_error_variance == 0.1);
  CHECK(a.valid_for_frames == PreschedulerParams{}.period_frames);
}

TEST_CASE("small instances land near the best partition") {
  // Three seeds of the exhaustive check; the acceptance suite runs fifty.
  for (std::uint64_t seed : {0u, 1u, 2u}) {
    TopologyConfig tc;
    tc.macro_count = 1;
    tc.pico_count = 2;
    tc.user_count = 4;
    tc.macro_antennas = 2;
    tc.seed = 1000 + seed;
    const NetworkTopology t = build_topology(tc);
    const ChannelMatrix h = draw_channel(t, ChannelConfig{}, 77 + seed);
    const PreSchedule p = preschedule(exact_csi(h), t);
    std::vector<double> values;
    double mine = 0.0;
    for (int code = 0; code < 81; ++code) {
      std::vector<int> a(4);
      for (int k = 0, c = code; k < 4; ++k, c /= 3) a[static_cast<std::size_t>(k)] = c % 3;
      const Clustering cl(a, 3);
      const double v = realized_rates(h, fogran_beamforming(h, t, cl), t, cl).sum();
      values.push_back(v);
      if (cl == p.clustering) mine = v;
    }
    const auto better = std::count_if(values.begin(), values.end(), [&](double v) { return v > mine * (1 + 1e-12); });
    CHECK(better < 9);
  }
}

TEST_CASE("pre-scheduler parameter validation") {
  PreschedulerParams p;
  p.initial_penalty = 0.0;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  p = PreschedulerParams{};
  p.concentration_target = 1.5;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
  p = PreschedulerParams{};
  p.penalty_growth = 0.5;
  CHECK_THROWS_AS(validate(p), std::invalid_argument);
}
