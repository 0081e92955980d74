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

#include "fogran/layout.hpp"
#include "fogran/topology.hpp"
#include "fogran/units.hpp"

#include <cstdint>
#include <vector>

namespace fogran {

struct PathLossModel {
  double intercept_db = 128.1;
  double slope_db = 37.6;  // per decade of distance in km

  double loss_db(double distance_m) const;

  friend bool operator==(const PathLossModel&, const PathLossModel&) = default;
};

enum class FadingMode {
  Rayleigh,
  /// Small-scale coefficients fixed to 1. Debug aid: ||h_rk||^2 = M_r g_rk.
  Unit,
};

struct ChannelConfig {
  double bandwidth_hz = 10.0e6;
  double noise_psd_w_per_hz = dbm_per_hz_to_watts_per_hz(-169.0);
  PathLossModel macro_path_loss{128.1, 37.6};
  PathLossModel pico_path_loss{140.7, 36.7};
  double shadowing_std_db = 8.0;
  bool shadowing = true;
  FadingMode fading = FadingMode::Rayleigh;

  friend bool operator==(const ChannelConfig&, const ChannelConfig&) = default;
};

/// Linear large-scale gain g_rk (path loss and shadowing) per (AP, user).
/// Fixed for a drop; small-scale fading is redrawn per frame on top.
class LargeScaleGains {
public:
  LargeScaleGains(int aps, int users, std::vector<double> gains);

  double operator()(int r, int k) const { return gains_[static_cast<std::size_t>(r * users_ + k)]; }
  int ap_count() const { return aps_; }
  int user_count() const { return users_; }
  const std::vector<double>& values() const { return gains_; }

private:
  int aps_;
  int users_;
  std::vector<double> gains_;
};

LargeScaleGains draw_large_scale(const NetworkTopology& topology, const ChannelConfig& config, std::uint64_t seed);

/// True channel vectors h_rk for every (AP, user) pair. Column k of
/// `matrix()` is the stacked h_k.
class ChannelMatrix {
public:
  ChannelMatrix(AntennaLayout layout, Eigen::MatrixXcd stacked, std::vector<double> large_scale,
                std::vector<int> user_ids, double bandwidth_hz, double noise_psd_w_per_hz);

  const AntennaLayout& layout() const { return layout_; }
  int ap_count() const { return layout_.ap_count(); }
  int user_count() const { return layout_.user_count(); }
  int total_antennas() const { return layout_.total_antennas(); }

  const Eigen::MatrixXcd& matrix() const { return h_; }
  auto block(int r, int k) const { return h_.col(k).segment(layout_.offset(r), layout_.antennas(r)); }
  auto stacked(int k) const { return h_.col(k); }

  double large_scale_gain(int r, int k) const {
    return large_scale_[static_cast<std::size_t>(r * layout_.user_count() + k)];
  }
  const std::vector<double>& large_scale_gains() const { return large_scale_; }
  int user_id(int k) const { return user_ids_[static_cast<std::size_t>(k)]; }
  const std::vector<int>& user_ids() const { return user_ids_; }

  double bandwidth_hz() const { return bandwidth_hz_; }
  double noise_psd() const { return noise_psd_; }

private:
  AntennaLayout layout_;
  Eigen::MatrixXcd h_;
  std::vector<double> large_scale_;
  std::vector<int> user_ids_;
  double bandwidth_hz_;
  double noise_psd_;
};

/// CSI as seen by the cloud: h~_rk = h_rk + e_rk. Kept as a distinct type so
/// that code paths entitled only to outdated CSI cannot receive the true
/// channel by accident, and vice versa.
class NoisyChannelMatrix {
public:
  NoisyChannelMatrix(ChannelMatrix estimate, double error_variance);

  const ChannelMatrix& estimate() const { return estimate_; }
  double error_variance() const { return error_variance_; }

  const AntennaLayout& layout() const { return estimate_.layout(); }
  int ap_count() const { return estimate_.ap_count(); }
  int user_count() const { return estimate_.user_count(); }
  const Eigen::MatrixXcd& matrix() const { return estimate_.matrix(); }
  auto block(int r, int k) const { return estimate_.block(r, k); }

private:
  ChannelMatrix estimate_;
  double error_variance_;
};

/// h_rk = sqrt(g_rk) f_rk with f_rk ~ CN(0, I). Each (AP, user id) block
/// draws from its own stream, so permuting users permutes the output.
ChannelMatrix draw_fading(const NetworkTopology& topology, const LargeScaleGains& gains, const ChannelConfig& config,
                          std::uint64_t seed);

/// Large-scale gains and fading drawn from one seed.
ChannelMatrix draw_channel(const NetworkTopology& topology, const ChannelConfig& config, std::uint64_t seed);

/// Adds e_rk with i.i.d. CN(0, error_variance) entries in the normalized
/// small-scale domain: h~_rk = sqrt(g_rk) (f_rk + e_rk). error_variance = 0
/// returns the blocks bit-exactly.
NoisyChannelMatrix corrupt_csi(const ChannelMatrix& channel, double error_variance, std::uint64_t seed);

/// Wraps a channel as perfectly known noisy CSI (error variance 0) without
/// drawing any randomness.
NoisyChannelMatrix exact_csi(const ChannelMatrix& channel);

/// sigma_n^2 = noise_psd * bandwidth, watts.
double noise_power(const ChannelMatrix& channel);
double noise_power(const NoisyChannelMatrix& channel);

}  // namespace fogran
