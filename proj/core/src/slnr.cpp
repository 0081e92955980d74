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

#include "fogran/slnr.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>

namespace fogran {

LocalCsi make_local_csi(const ChannelMatrix& true_channel, const NetworkTopology& topology, int r,
                        const Clustering& clustering, LeakageScope scope) {
  if (r < 0 || r >= true_channel.ap_count()) throw std::invalid_argument("make_local_csi: AP index out of range");
  if (clustering.user_count() != true_channel.user_count())
    throw std::invalid_argument("make_local_csi: clustering does not match channel");
  LocalCsi csi;
  csi.ap_id = r;
  csi.noise_power = noise_power(true_channel);
  csi.max_power = topology.ap(r).max_power_w;
  csi.channels.reserve(static_cast<std::size_t>(true_channel.user_count()));
  for (int k = 0; k < true_channel.user_count(); ++k) csi.channels.emplace_back(true_channel.block(r, k));
  if (scope == LeakageScope::AllUsers) {
    for (int k = 0; k < true_channel.user_count(); ++k) csi.leakage_users.push_back(k);
  } else {
    csi.leakage_users = clustering.cluster(r);
  }
  return csi;
}

void fix_phase(Eigen::VectorXcd& v) {
  const double threshold = 1e-12 * v.norm();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double mag = std::abs(v(i));
    if (mag > threshold && mag > 0.0) {
      v *= std::conj(v(i)) / mag;
      v(i) = cd(std::abs(v(i)), 0.0);
      return;
    }
  }
}

namespace {

void check_user(const LocalCsi& csi, int k) {
  if (k < 0 || static_cast<std::size_t>(k) >= csi.channels.size())
    throw std::invalid_argument("slnr: user index out of range");
}

Eigen::MatrixXcd regularized_leakage(const LocalCsi& csi, int k, double power_share) {
  const Eigen::Index m = csi.antennas();
  Eigen::MatrixXcd b = (csi.noise_power / power_share) * Eigen::MatrixXcd::Identity(m, m);
  for (int j : csi.leakage_users) {
    if (j == k) continue;
    const Eigen::VectorXcd& h = csi.channels[static_cast<std::size_t>(j)];
    b.noalias() += h * h.adjoint();
  }
  return b;
}

}  // namespace

SlnrBeam slnr_beamformer(const LocalCsi& csi, int k, double power_share) {
  check_user(csi, k);
  if (!(power_share > 0.0)) throw std::invalid_argument("slnr_beamformer: power share must be > 0");
  if (!(csi.noise_power > 0.0)) throw std::invalid_argument("slnr_beamformer: noise power must be > 0");
  const Eigen::VectorXcd& h = csi.channels[static_cast<std::size_t>(k)];
  SlnrBeam beam;
  if (h.isZero(0.0)) {
    beam.w = Eigen::VectorXcd::Zero(h.size());
    beam.zero_channel = true;
    return beam;
  }
  // B^{-1} h h^H has rank one, so its principal eigenvector is B^{-1} h.
  Eigen::VectorXcd v = regularized_leakage(csi, k, power_share).llt().solve(h);
  v.normalize();
  fix_phase(v);
  beam.w = std::sqrt(power_share) * v;
  return beam;
}

double compute_slnr(const LocalCsi& csi, int k, const Eigen::VectorXcd& w) {
  check_user(csi, k);
  const Eigen::VectorXcd& h = csi.channels[static_cast<std::size_t>(k)];
  if (w.size() != h.size()) throw std::invalid_argument("compute_slnr: beamformer length mismatch");
  double leakage = 0.0;
  for (int j : csi.leakage_users) {
    if (j != k) leakage += std::norm(csi.channels[static_cast<std::size_t>(j)].dot(w));
  }
  return std::norm(h.dot(w)) / (leakage + csi.noise_power);
}

std::vector<std::pair<int, Eigen::VectorXcd>> beamform_cluster(const LocalCsi& csi, const std::vector<int>& cluster) {
  std::vector<std::pair<int, Eigen::VectorXcd>> beams;
  if (cluster.empty()) return beams;
  const double share = csi.max_power / static_cast<double>(cluster.size());
  beams.reserve(cluster.size());
  for (int k : cluster) beams.emplace_back(k, slnr_beamformer(csi, k, share).w);
  return beams;
}

BeamformingSolution fogran_beamforming(const ChannelMatrix& true_channel, const NetworkTopology& topology,
                                       const Clustering& clustering, LeakageScope scope) {
  if (clustering.ap_count() != true_channel.ap_count())
    throw std::invalid_argument("fogran_beamforming: clustering does not match channel");
  BeamformingSolution solution(true_channel.layout());
  for (int r = 0; r < true_channel.ap_count(); ++r) {
    if (clustering.cluster(r).empty()) continue;
    const LocalCsi csi = make_local_csi(true_channel, topology, r, clustering, scope);
    for (auto& [k, w] : beamform_cluster(csi, clustering.cluster(r))) solution.block(r, k) = w;
  }
  return solution;
}

namespace detail {

Eigen::VectorXcd slnr_direction_by_eigendecomposition(const LocalCsi& csi, int k, double power_share) {
  check_user(csi, k);
  const Eigen::VectorXcd& h = csi.channels[static_cast<std::size_t>(k)];
  const Eigen::MatrixXcd target = regularized_leakage(csi, k, power_share).inverse() * (h * h.adjoint());
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> eig(target);
  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i < eig.eigenvalues().size(); ++i) {
    if (eig.eigenvalues()(i).real() > eig.eigenvalues()(best).real()) best = i;
  }
  Eigen::VectorXcd v = eig.eigenvectors().col(best);
  v.normalize();
  fix_phase(v);
  return v;
}

}  // namespace detail

}  // namespace fogran
