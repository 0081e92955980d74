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

#include <Eigen/Eigenvalues>

#include "fogran/prescheduler.hpp"
#include "fogran/slnr.hpp"
#include "fogran/units.hpp"
#include "helpers.hpp"

using namespace fogran;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

LocalCsi random_csi(int antennas, int users, std::mt19937_64& rng, double noise = 0.1, double power = 1.0) {
  LocalCsi csi;
  csi.noise_power = noise;
  csi.max_power = power;
  const Eigen::MatrixXcd h = test::random_complex(antennas, users, rng);
  for (int k = 0; k < users; ++k) {
    csi.channels.emplace_back(h.col(k));
    csi.leakage_users.push_back(k);
  }
  return csi;
}

// Largest generalized eigenvalue of (h h^H, sum h' h'^H + (noise / share) I).
double generalized_eigenvalue(const LocalCsi& csi, int k, double share) {
  const Eigen::Index m = csi.antennas();
  const Eigen::VectorXcd& h = csi.channels[static_cast<std::size_t>(k)];
  Eigen::MatrixXcd b = (csi.noise_power / share) * Eigen::MatrixXcd::Identity(m, m);
  for (int j : csi.leakage_users)
    if (j != k) b += csi.channels[static_cast<std::size_t>(j)] * csi.channels[static_cast<std::size_t>(j)].adjoint();
  Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXcd> ges(h * h.adjoint(), b);
  return ges.eigenvalues().maxCoeff();
}

Eigen::VectorXcd random_unit(int m, std::mt19937_64& rng) {
  Eigen::VectorXcd v = test::random_complex(m, 1, rng).col(0);
  return v / v.norm();
}

}  // namespace

TEST_CASE("single user cluster: whitened matched filter") {
  std::mt19937_64 rng(1);
  LocalCsi csi = random_csi(3, 1, rng);
  csi.max_power = 2.0;
  const auto beams = beamform_cluster(csi, {0});
  REQUIRE(beams.size() == 1);
  const Eigen::VectorXcd mrt = std::sqrt(2.0) * csi.channels[0] / csi.channels[0].norm();
  CHECK_THAT(test::alignment(beams[0].second, mrt), WithinAbs(1.0, 1e-12));
  CHECK_THAT(beams[0].second.squaredNorm(), WithinRel(2.0, 1e-12));
}

TEST_CASE("two users, two antennas: random search cannot beat the closed form") {
  LocalCsi csi;
  csi.noise_power = 0.05;
  csi.max_power = 1.0;
  Eigen::VectorXcd h1(2), h2(2);
  h1 << std::complex<double>(1.0, 0.2), std::complex<double>(-0.4, 0.7);
  h2 << std::complex<double>(0.3, -0.5), std::complex<double>(0.9, 0.1);
  csi.channels = {h1, h2};
  csi.leakage_users = {0, 1};
  const double share = 0.5;
  const Eigen::VectorXcd w = slnr_beamformer(csi, 0, share).w;
  const double best = compute_slnr(csi, 0, w);

  std::mt19937_64 rng(77);
  double search = 0.0;
  for (int i = 0; i < 1000000; ++i) {
    const Eigen::VectorXcd u = std::sqrt(share) * random_unit(2, rng);
    search = std::max(search, compute_slnr(csi, 0, u));
  }
  CHECK(best >= search * (1.0 - 1e-12));
  CHECK(test::rel_diff(best, search) < 1e-4);
}

TEST_CASE("orthogonal leakage channel: beam follows the own channel") {
  LocalCsi csi;
  csi.noise_power = 0.01;
  csi.max_power = 1.0;
  Eigen::VectorXcd h1(2), h2(2);
  h1 << 1.0, std::complex<double>(0.0, 1.0);
  h2 << 1.0, std::complex<double>(0.0, -1.0);  // h1^H h2 = 0
  csi.channels = {h1, h2};
  csi.leakage_users = {0, 1};
  const Eigen::VectorXcd w = slnr_beamformer(csi, 0, 0.5).w;
  CHECK_THAT(test::alignment(w, h1), WithinAbs(1.0, 1e-12));
  CHECK(std::norm(h2.dot(w)) < 1e-24);
}

TEST_CASE("SLNR evaluation") {
  std::mt19937_64 rng(5);
  LocalCsi csi = random_csi(3, 4, rng);
  SECTION("zero beam") { CHECK(compute_slnr(csi, 1, Eigen::VectorXcd::Zero(3)) == 0.0); }
  SECTION("single user, engineered unit ratio") {
    LocalCsi one = random_csi(2, 1, rng, 0.3);
    const Eigen::VectorXcd& h = one.channels[0];
    const Eigen::VectorXcd w = std::sqrt(0.3) * h / h.squaredNorm();  // |h^H w|^2 = 0.3
    CHECK_THAT(compute_slnr(one, 0, w), WithinRel(1.0, 1e-12));
  }
  SECTION("matches an independent re-computation") {
    const Eigen::VectorXcd w = test::random_complex(3, 1, rng).col(0);
    double signal = 0.0, leak = 0.0;
    for (int j = 0; j < 4; ++j) {
      std::complex<double> g = 0.0;
      for (int m = 0; m < 3; ++m) g += std::conj(csi.channels[static_cast<std::size_t>(j)](m)) * w(m);
      (j == 2 ? signal : leak) += std::norm(g);
    }
    CHECK_THAT(compute_slnr(csi, 2, w), WithinRel(signal / (leak + csi.noise_power), 1e-12));
  }
}

TEST_CASE("equal power split inside a cluster") {
  std::mt19937_64 rng(9);
  SECTION("two users, one watt") {
    const LocalCsi csi = random_csi(2, 2, rng);
    for (const auto& [k, w] : beamform_cluster(csi, {0, 1})) CHECK_THAT(w.squaredNorm(), WithinRel(0.5, 1e-12));
  }
  SECTION("empty cluster") { CHECK(beamform_cluster(random_csi(2, 2, rng), {}).empty()); }
  SECTION("30 dBm pico with four users") {
    const LocalCsi csi = random_csi(2, 4, rng, 0.1, dbm_to_watts(30.0));
    const auto beams = beamform_cluster(csi, {0, 1, 2, 3});
    double total = 0.0;
    for (const auto& [k, w] : beams) {
      CHECK_THAT(w.squaredNorm(), WithinRel(0.25, 1e-12));
      total += w.squaredNorm();
    }
    CHECK_THAT(total, WithinRel(1.0, 1e-12));
  }
}

TEST_CASE("closed form matches the generalized eigenvalue and is locally maximal") {
  std::mt19937_64 rng(2718);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + trial % 4;
    const int users = 1 + trial % 5;
    const LocalCsi csi = random_csi(m, users, rng, 0.02 + 0.1 * (trial % 3));
    const double share = csi.max_power / users;
    for (int k = 0; k < users; ++k) {
      const Eigen::VectorXcd w = slnr_beamformer(csi, k, share).w;
      const double z = compute_slnr(csi, k, w);
      CHECK_THAT(z, WithinRel(generalized_eigenvalue(csi, k, share), 1e-9));
      for (int i = 0; i < 1000; ++i) {
        const Eigen::VectorXcd v = std::sqrt(share) * random_unit(m, rng);
        CHECK(z >= compute_slnr(csi, k, v) - 1e-6);
      }
    }
  }
}

TEST_CASE("eigendecomposition path agrees with the closed form") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    const int m = 2 + trial % 3;
    const LocalCsi csi = random_csi(m, 4, rng);
    const Eigen::VectorXcd a = slnr_beamformer(csi, 1, 0.25).w / std::sqrt(0.25);
    const Eigen::VectorXcd b = detail::slnr_direction_by_eigendecomposition(csi, 1, 0.25);
    CHECK((a - b).norm() < 1e-9);
  }
}

TEST_CASE("direction is invariant to a common channel scaling at fixed SNR") {
  std::mt19937_64 rng(41);
  LocalCsi csi = random_csi(3, 3, rng);
  const Eigen::VectorXcd a = slnr_beamformer(csi, 0, 1.0 / 3).w;
  for (double t : {1e-5, 0.5, 7.0}) {
    LocalCsi scaled = csi;
    for (auto& h : scaled.channels) h *= t;
    scaled.noise_power *= t * t;
    const Eigen::VectorXcd b = slnr_beamformer(scaled, 0, 1.0 / 3).w;
    CHECK((a - b).norm() < 1e-9 * a.norm());
  }
}

TEST_CASE("phase convention: first significant entry real and positive") {
  Eigen::VectorXcd v(3);
  v << std::complex<double>(0.0, 0.0), std::complex<double>(-1.0, 1.0), std::complex<double>(0.5, 0.0);
  fix_phase(v);
  CHECK(v(0) == std::complex<double>(0.0, 0.0));
  CHECK(v(1).imag() == 0.0);
  CHECK(v(1).real() > 0.0);
  CHECK_THAT(v.norm(), WithinRel(std::sqrt(2.25), 1e-15));
}

TEST_CASE("zero channel gives a zero beam") {
  LocalCsi csi;
  csi.noise_power = 1.0;
  csi.max_power = 1.0;
  csi.channels = {Eigen::VectorXcd::Zero(2), Eigen::VectorXcd::Ones(2)};
  csi.leakage_users = {0, 1};
  const SlnrBeam b = slnr_beamformer(csi, 0, 0.5);
  CHECK(b.zero_channel);
  CHECK(b.w.isZero(0.0));
}

TEST_CASE("local CSI and network assembly") {
  const NetworkTopology t = test::make_topology({2, 1}, 3, {1.0, 0.5}, {1e9, 1e9});
  std::mt19937_64 rng(12);
  const ChannelMatrix h = test::make_channel(t, test::random_complex(3, 3, rng, 1e-12));
  const Clustering c({0, 1, 0}, 2);
  const LocalCsi all = make_local_csi(h, t, 0, c, LeakageScope::AllUsers);
  const LocalCsi own = make_local_csi(h, t, 0, c, LeakageScope::OwnCluster);
  CHECK(all.leakage_users == std::vector<int>{0, 1, 2});
  CHECK(own.leakage_users == std::vector<int>{0, 2});
  CHECK(all.max_power == 1.0);
  CHECK(all.channels[1] == h.block(0, 1));

  const BeamformingSolution w = fogran_beamforming(h, t, c);
  CHECK(w.block_power(1, 0) == 0.0);
  CHECK(w.block_power(0, 1) == 0.0);
  CHECK_THAT(w.ap_power(0), WithinRel(1.0, 1e-12));
  CHECK_THAT(w.ap_power(1), WithinRel(0.5, 1e-12));
}
