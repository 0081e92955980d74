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

#include "fogran/beamforming.hpp"
#include "helpers.hpp"

using namespace fogran;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

TEST_CASE("engineered unit SNR") {
  const NetworkTopology t = test::make_topology({2}, 1, {1.0}, {1e9});
  Eigen::MatrixXcd h(2, 1);
  h << std::complex<double>(3e-6, 1e-6), std::complex<double>(-2e-6, 4e-6);
  const ChannelMatrix ch = test::make_channel(t, h);
  const double sigma2 = noise_power(ch);
  // c^2 ||h||^2 = sigma2 with w = c h / ||h||.
  const double c = std::sqrt(sigma2) / h.col(0).norm();
  BeamformingSolution w(ch.layout(), c * h / h.col(0).norm());
  CHECK_THAT(compute_sinr(ch, w, 0), WithinRel(1.0, 1e-12));
  CHECK_THAT(compute_sinrs(h, w.matrix(), sigma2)[0], WithinRel(1.0, 1e-12));
}

TEST_CASE("zero beamformers give zero SINR") {
  const NetworkTopology t = test::make_topology({2, 1}, 3, {1.0, 1.0}, {1e9, 1e9});
  std::mt19937_64 rng(1);
  const ChannelMatrix ch = test::make_channel(t, test::random_complex(3, 3, rng));
  const BeamformingSolution w(ch.layout());
  for (int k = 0; k < 3; ++k) CHECK(compute_sinr(ch, w, k) == 0.0);
  for (double s : compute_sinrs(ch.matrix(), w.matrix(), 1.0)) CHECK(s == 0.0);
}

TEST_CASE("SINR matches a scalar re-computation") {
  const NetworkTopology t = test::make_topology({2}, 2, {1.0}, {1e9});
  std::mt19937_64 rng(2024);
  const Eigen::MatrixXcd h = test::random_complex(2, 2, rng, 1e-12);
  const Eigen::MatrixXcd wm = test::random_complex(2, 2, rng, 0.5);
  const ChannelMatrix ch = test::make_channel(t, h);
  const BeamformingSolution w(ch.layout(), wm);
  const double sigma2 = noise_power(ch);

  // Written out element by element: gain(k, j) = sum_m conj(h_mk) w_mj.
  for (int k = 0; k < 2; ++k) {
    double re[2] = {0, 0}, im[2] = {0, 0};
    for (int j = 0; j < 2; ++j) {
      for (int m = 0; m < 2; ++m) {
        const double a = h(m, k).real(), b = -h(m, k).imag();
        const double c = wm(m, j).real(), d = wm(m, j).imag();
        re[j] += a * c - b * d;
        im[j] += a * d + b * c;
      }
    }
    const int other = 1 - k;
    const double oracle =
        (re[k] * re[k] + im[k] * im[k]) / (re[other] * re[other] + im[other] * im[other] + sigma2);
    CHECK_THAT(compute_sinr(ch, w, k), WithinRel(oracle, 1e-12));
    CHECK_THAT(compute_sinrs(h, wm, sigma2)[static_cast<std::size_t>(k)], WithinRel(oracle, 1e-12));
  }
}

TEST_CASE("Shannon rate") {
  CHECK(shannon_rate(10e6, 1.0) == 10e6);
  CHECK(shannon_rate(10e6, 0.0) == 0.0);
  CHECK_THAT(shannon_rate(1.0, 3.0), WithinRel(2.0, 1e-15));
}

TEST_CASE("activity threshold, serving sets and pruning") {
  const NetworkTopology t = test::make_topology({1, 1}, 2, {2.0, 1.0}, {1e9, 1e9});
  AntennaLayout layout({1, 1}, 2);
  Eigen::MatrixXcd wm(2, 2);
  // eps_0 = 1e-6 * 2 / 2 = 1e-6, eps_1 = 5e-7 (watts).
  wm << std::sqrt(2e-6), std::sqrt(0.5e-6), std::sqrt(1e-6), std::sqrt(0.4e-6);
  BeamformingSolution w(layout, wm);
  CHECK(active_threshold(t, 0, 1e-6) == 1e-6);
  const ServingSets sets = active_serving_sets(w, t, 1e-6);
  CHECK(sets[0] == std::vector<int>{0});
  CHECK(sets[1] == std::vector<int>{0});
  CHECK(prune_inactive_blocks(w, t, 1e-6) == 2);
  CHECK(w.block_power(0, 1) == 0.0);
  CHECK(w.block_power(1, 1) == 0.0);
  CHECK(w.block_power(0, 0) > 0.0);
}

TEST_CASE("fronthaul throttling") {
  SECTION("sum above capacity is scaled to exactly C") {
    const std::vector<double> out = throttle_to_fronthaul({30e6, 70e6, 5e6}, {{0, 1}, {2}}, {50e6, 10e6});
    CHECK_THAT(out[0] + out[1], WithinRel(50e6, 1e-15));
    CHECK_THAT(out[0] / out[1], WithinRel(30.0 / 70.0, 1e-15));
    CHECK(out[2] == 5e6);
  }
  SECTION("a user served by two APs takes the tighter factor") {
    const std::vector<double> out = throttle_to_fronthaul({40e6, 40e6}, {{0, 1}, {1}}, {40e6, 10e6});
    CHECK_THAT(out[1], WithinRel(10e6, 1e-15));
    CHECK_THAT(out[0], WithinRel(20e6, 1e-15));
  }
  SECTION("property: every AP load ends at or below C") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 100e6);
    std::bernoulli_distribution coin(0.5);
    for (int trial = 0; trial < 500; ++trial) {
      std::vector<double> rates(6);
      for (double& r : rates) r = u(rng);
      ServingSets sets(3);
      for (int r = 0; r < 3; ++r)
        for (int k = 0; k < 6; ++k)
          if (coin(rng)) sets[static_cast<std::size_t>(r)].push_back(k);
      const std::vector<double> caps{u(rng), u(rng), u(rng)};
      const std::vector<double> out = throttle_to_fronthaul(rates, sets, caps);
      for (int r = 0; r < 3; ++r) {
        double load = 0.0;
        for (int k : sets[static_cast<std::size_t>(r)]) load += out[static_cast<std::size_t>(k)];
        CHECK(load <= caps[static_cast<std::size_t>(r)] * (1.0 + 1e-12));
      }
      for (std::size_t k = 0; k < rates.size(); ++k) CHECK(out[k] <= rates[k]);
    }
  }
}

TEST_CASE("per-AP power bookkeeping") {
  AntennaLayout layout({2, 1}, 2);
  Eigen::MatrixXcd wm(3, 2);
  wm << 1.0, 2.0, 0.0, 1.0, 3.0, 0.5;
  const BeamformingSolution w(layout, wm);
  CHECK(w.ap_power(0) == 1.0 + 4.0 + 0.0 + 1.0);
  CHECK(w.ap_power(1) == 9.0 + 0.25);
  CHECK(w.block_power(0, 1) == 5.0);
  CHECK_THROWS_AS(BeamformingSolution(layout, Eigen::MatrixXcd::Zero(2, 2)), std::invalid_argument);
}
