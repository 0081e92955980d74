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

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "fogran/channel.hpp"
#include "fogran/topology.hpp"

namespace fogran::test {

/// APs on a line, users at the origin; geometry is irrelevant when the
/// channel is supplied directly.
inline NetworkTopology make_topology(const std::vector<int>& antennas, int users, const std::vector<double>& power_w,
                                     const std::vector<double>& fronthaul_bps, double extent = 1000.0) {
  std::vector<AccessPoint> aps;
  for (std::size_t r = 0; r < antennas.size(); ++r) {
    AccessPoint ap;
    ap.id = static_cast<int>(r);
    ap.kind = r == 0 ? ApKind::Macro : ApKind::Pico;
    ap.position = {10.0 + 50.0 * static_cast<double>(r), 500.0};
    ap.antennas = antennas[r];
    ap.max_power_w = power_w[r];
    ap.fronthaul_bps = fronthaul_bps[r];
    aps.push_back(ap);
  }
  std::vector<User> us;
  for (int k = 0; k < users; ++k) us.push_back(User{k, {1.0 + k, 1.0}, 1.0});
  return NetworkTopology(std::move(aps), std::move(us), extent);
}

inline ChannelMatrix make_channel(const NetworkTopology& topology, const Eigen::MatrixXcd& h,
                                  double bandwidth_hz = 10e6, double psd = 1.2589254117941662e-20) {
  AntennaLayout layout(topology.antenna_counts(), topology.user_count());
  std::vector<double> gains;
  for (int r = 0; r < layout.ap_count(); ++r) {
    for (int k = 0; k < layout.user_count(); ++k) {
      const double g = h.col(k).segment(layout.offset(r), layout.antennas(r)).squaredNorm() / layout.antennas(r);
      gains.push_back(g > 0.0 ? g : 1e-30);
    }
  }
  std::vector<int> ids;
  for (const auto& u : topology.users()) ids.push_back(u.id);
  return ChannelMatrix(layout, h, gains, ids, bandwidth_hz, psd);
}

/// i.i.d. CN(0, variance) entries.
inline Eigen::MatrixXcd random_complex(int rows, int cols, std::mt19937_64& rng, double variance = 1.0) {
  std::normal_distribution<double> n(0.0, std::sqrt(variance / 2.0));
  Eigen::MatrixXcd m(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i) m(i, j) = {n(rng), n(rng)};
  return m;
}

inline double rel_diff(double a, double b) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return scale == 0.0 ? 0.0 : std::abs(a - b) / scale;
}

/// |<a, b>| / (|a||b|): 1 when a and b differ by a complex scalar.
inline double alignment(const Eigen::VectorXcd& a, const Eigen::VectorXcd& b) {
  return std::abs(a.dot(b)) / (a.norm() * b.norm());
}

}  // namespace fogran::test
