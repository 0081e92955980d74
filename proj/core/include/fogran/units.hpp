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

// Unit conversions between the dB-scaled quantities used in scenario files
// and the SI values used everywhere else in the library.

namespace fogran {

double db_to_linear(double db);
double linear_to_db(double linear);

/// dBm -> watts.
double dbm_to_watts(double dbm);
double watts_to_dbm(double watts);

/// Power spectral density in dBm/Hz -> W/Hz.
double dbm_per_hz_to_watts_per_hz(double dbm_per_hz);

constexpr double mbps_to_bps(double mbps) { return mbps * 1.0e6; }
constexpr double mhz_to_hz(double mhz) { return mhz * 1.0e6; }
constexpr double km_from_m(double meters) { return meters * 1.0e-3; }

}  // namespace fogran
