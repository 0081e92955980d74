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

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace fogran {

using cd = std::complex<double>;

/// Block structure shared by channels and beamformers: per-user vectors are
/// stacked over APs, AP r owning rows [offset(r), offset(r) + antennas(r)).
/// Data lives in an M x K matrix whose column k is the stacked vector of
/// user k.
class AntennaLayout {
public:
  AntennaLayout() = default;
  AntennaLayout(std::vector<int> antennas, int users);

  int ap_count() const { return static_cast<int>(antennas_.size()); }
  int user_count() const { return users_; }
  int total_antennas() const { return total_; }
  int antennas(int r) const { return antennas_[static_cast<std::size_t>(r)]; }
  int offset(int r) const { return offsets_[static_cast<std::size_t>(r)]; }
  const std::vector<int>& antenna_counts() const { return antennas_; }

  bool same_shape(const AntennaLayout& other) const {
    return users_ == other.users_ && antennas_ == other.antennas_;
  }

  friend bool operator==(const AntennaLayout&, const AntennaLayout&) = default;

private:
  std::vector<int> antennas_;
  std::vector<int> offsets_;
  int total_ = 0;
  int users_ = 0;
};

}  // namespace fogran
