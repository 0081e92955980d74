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

#include "fogran/channel.hpp"

#include "fogran/rng.hpp"
#include "fogran/units.hpp"

#include <cmath>
#include <stdexcept>

namespace fogran {

AntennaLayout::AntennaLayout(std::vector<int> antennas, int users) : antennas_(std::move(antennas)), users_(users) {
  if (users_ < 0) throw std::invalid_argument("layout: negative user count");
  offsets_.reserve(antennas_.size());
  for (int m : antennas_) {
    if (m < 1) throw std::invalid_argument("layout: every AP needs at least one antenna");
    offsets_.push_back(total_);
    total_ += m;
  }
}

double PathLossModel::loss_db(double distance_m) const {
  return intercept_db + slope_db * std::log10(km_from_m(distance_m));
}

LargeScaleGains::LargeScaleGains(int aps, int users, std::vector<double> gains)
    : aps_(aps), users_(users), gains_(std::move(gains)) {
  if (gains_.size() != static_cast<std::size_t>(aps_) * static_cast<std::size_t>(users_))
    throw std::invalid_argument("large-scale gains: size mismatch");
}

LargeScaleGains draw_large_scale(const NetworkTopology& topology, const ChannelConfig& config, std::uint64_t seed) {
  const int aps = topology.ap_count();
  const int users = topology.user_count();
  std::vector<double> gains(static_cast<std::size_t>(aps) * static_cast<std::size_t>(users));
  for (int r = 0; r < aps; ++r) {
    const PathLossModel& model =
        topology.ap(r).kind == ApKind::Macro ? config.macro_path_loss : config.pico_path_loss;
    for (int k = 0; k < users; ++k) {
      double loss = model.loss_db(topology.distance(r, k));
      if (config.shadowing && config.shadowing_std_db > 0.0) {
        Rng rng(derive_seed(seed, {tag(StreamTag::Shadowing), static_cast<std::uint64_t>(r),
                                   static_cast<std::uint64_t>(topology.user(k).id)}));
        // A fresh distribution per stream: libstdc++ caches the second value
        // of each generated pair, which would leak into the next stream.
        std::normal_distribution<double> normal(0.0, 1.0);
        loss += config.shadowing_std_db * normal(rng);
      }
      gains[static_cast<std::size_t>(r * users + k)] = db_to_linear(-loss);
    }
  }
  return LargeScaleGains(aps, users, std::move(gains));
}

ChannelMatrix::ChannelMatrix(AntennaLayout layout, Eigen::MatrixXcd stacked, std::vector<double> large_scale,
                             std::vector<int> user_ids, double bandwidth_hz, double noise_psd_w_per_hz)
    : layout_(std::move(layout)),
      h_(std::move(stacked)),
      large_scale_(std::move(large_scale)),
      user_ids_(std::move(user_ids)),
      bandwidth_hz_(bandwidth_hz),
      noise_psd_(noise_psd_w_per_hz) {
  if (h_.rows() != layout_.total_antennas() || h_.cols() != layout_.user_count())
    throw std::invalid_argument("channel: matrix shape does not match antenna layout");
  if (large_scale_.size() != static_cast<std::size_t>(layout_.ap_count() * layout_.user_count()))
    throw std::invalid_argument("channel: large-scale gain count mismatch");
  if (user_ids_.size() != static_cast<std::size_t>(layout_.user_count()))
    throw std::invalid_argument("channel: user id count mismatch");
  if (!(bandwidth_hz_ > 0.0)) throw std::invalid_argument("channel: bandwidth must be positive");
  if (!(noise_psd_ > 0.0)) throw std::invalid_argument("channel: noise PSD must be positive");
  if (!h_.allFinite()) throw std::invalid_argument("channel: non-finite entries");
}

NoisyChannelMatrix::NoisyChannelMatrix(ChannelMatrix estimate, double error_variance)
    : estimate_(std::move(estimate)), error_variance_(error_variance) {
  if (!(error_variance_ >= 0.0)) throw std::invalid_argument("noisy channel: error variance must be >= 0");
}

namespace {

// CN(0, variance): independent real and imaginary parts of variance / 2.
cd complex_gaussian(Rng& rng, std::normal_distribution<double>& normal, double variance) {
  const double s = std::sqrt(0.5 * variance);
  const double re = normal(rng);
  const double im = normal(rng);
  return {s * re, s * im};
}

}  // namespace

ChannelMatrix draw_fading(const NetworkTopology& topology, const LargeScaleGains& gains, const ChannelConfig& config,
                          std::uint64_t seed) {
  if (gains.ap_count() != topology.ap_count() || gains.user_count() != topology.user_count())
    throw std::invalid_argument("draw_fading: gains do not match topology");
  AntennaLayout layout(topology.antenna_counts(), topology.user_count());
  Eigen::MatrixXcd h(layout.total_antennas(), layout.user_count());
  std::vector<int> ids;
  ids.reserve(static_cast<std::size_t>(topology.user_count()));
  for (const auto& u : topology.users()) ids.push_back(u.id);

  for (int r = 0; r < layout.ap_count(); ++r) {
    for (int k = 0; k < layout.user_count(); ++k) {
      const double amplitude = std::sqrt(gains(r, k));
      auto block = h.col(k).segment(layout.offset(r), layout.antennas(r));
      if (config.fading == FadingMode::Unit) {
        block.setConstant(cd(amplitude, 0.0));
        continue;
      }
      Rng rng(derive_seed(seed, {tag(StreamTag::Fading), static_cast<std::uint64_t>(r),
                                 static_cast<std::uint64_t>(ids[static_cast<std::size_t>(k)])}));
      std::normal_distribution<double> normal(0.0, 1.0);
      for (Eigen::Index m = 0; m < block.size(); ++m) block(m) = amplitude * complex_gaussian(rng, normal, 1.0);
    }
  }
  return ChannelMatrix(std::move(layout), std::move(h), gains.values(), std::move(ids), config.bandwidth_hz,
                       config.noise_psd_w_per_hz);
}

ChannelMatrix draw_channel(const NetworkTopology& topology, const ChannelConfig& config, std::uint64_t seed) {
  const LargeScaleGains gains = draw_large_scale(topology, config, derive_seed(seed, {tag(StreamTag::Shadowing)}));
  return draw_fading(topology, gains, config, derive_seed(seed, {tag(StreamTag::Fading)}));
}

NoisyChannelMatrix corrupt_csi(const ChannelMatrix& channel, double error_variance, std::uint64_t seed) {
  if (!(error_variance >= 0.0)) throw std::invalid_argument("corrupt_csi: error variance must be >= 0");
  if (error_variance == 0.0) return NoisyChannelMatrix(channel, 0.0);

  const AntennaLayout& layout = channel.layout();
  Eigen::MatrixXcd noisy = channel.matrix();
  for (int r = 0; r < layout.ap_count(); ++r) {
    for (int k = 0; k < layout.user_count(); ++k) {
      Rng rng(derive_seed(seed, {tag(StreamTag::CsiError), static_cast<std::uint64_t>(r),
                                 static_cast<std::uint64_t>(channel.user_id(k))}));
      std::normal_distribution<double> normal(0.0, 1.0);
      const double amplitude = std::sqrt(channel.large_scale_gain(r, k));
      auto block = noisy.col(k).segment(layout.offset(r), layout.antennas(r));
      for (Eigen::Index m = 0; m < block.size(); ++m)
        block(m) += amplitude * complex_gaussian(rng, normal, error_variance);
    }
  }
  return NoisyChannelMatrix(ChannelMatrix(layout, std::move(noisy), channel.large_scale_gains(), channel.user_ids(),
                                          channel.bandwidth_hz(), channel.noise_psd()),
                            error_variance);
}

NoisyChannelMatrix exact_csi(const ChannelMatrix& channel) { return NoisyChannelMatrix(channel, 0.0); }

double noise_power(const ChannelMatrix& channel) { return channel.noise_psd() * channel.bandwidth_hz(); }

double noise_power(const NoisyChannelMatrix& channel) { return noise_power(channel.estimate()); }

}  // namespace fogran
