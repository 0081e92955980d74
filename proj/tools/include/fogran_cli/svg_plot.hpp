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

#include <string>
#include <vector>

#include "fogran/harness.hpp"

namespace fogran::cli {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  /// Optional symmetric error bars, same length as y.
  std::vector<double> err;
};

struct Chart {
  std::string title;
  std::string x_label;
  std::string y_label;
  bool log_y = false;
  std::vector<Series> series;
};

/// Self-contained SVG line chart. Non-finite points are skipped; a log
/// axis also skips non-positive ones.
std::string render_svg(const Chart& chart);

/// Mean sum-rate (Mbit/s) against error variance, one line per scheme.
Chart rate_chart(const std::vector<AggregateRow>& rows);
/// Mean packet delay (ms, log axis) against error variance, one line per
/// (scheme, packet size).
Chart delay_chart(const std::vector<AggregateRow>& rows);

/// Sweep, schemes and packet sizes recovered from raw rows, so a raw CSV
/// can be re-aggregated without its scenario.
Scenario shape_from_raw(const std::vector<RawRow>& rows);

}  // namespace fogran::cli
