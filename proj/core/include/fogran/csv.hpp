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

// CSV import/export. Every file starts with a "# fogran <kind> v<N>" line
// naming its schema, followed by a header row.

#include "fogran/channel.hpp"
#include "fogran/harness.hpp"
#include "fogran/prescheduler.hpp"
#include "fogran/wsr_solver.hpp"

#include <iosfwd>
#include <tuple>
#include <string>
#include <vector>

namespace fogran::csv {

inline constexpr int kRawSchemaVersion = 1;
inline constexpr int kAggregateSchemaVersion = 1;

/// Shortest round-trip representation ("%.17g"); "nan"/"inf" for
/// non-finite values.
std::string format_number(double value);

void write_raw(std::ostream& out, const std::vector<RawRow>& rows);
void write_aggregate(std::ostream& out, const std::vector<AggregateRow>& rows);
std::vector<RawRow> read_raw(std::istream& in);

/// One row per (r, k): r, k, then re/im interleaved entries of h_rk.
void write_channel(std::ostream& out, const ChannelMatrix& channel);
/// iteration, objective (bits/s), segment.
void write_solver_report(std::ostream& out, const SolverReport& report);
/// user_id, ap_id.
void write_clustering(std::ostream& out, const Clustering& clustering);
Clustering read_clustering(std::istream& in, int ap_count);
/// ap_id, user_id, slnr.
void write_slnr_values(std::ostream& out, const std::vector<std::tuple<int, int, double>>& values);

/// Splits one CSV line on commas (no quoting; the writers never emit any).
std::vector<std::string> split_line(const std::string& line);

}  // namespace fogran::csv
