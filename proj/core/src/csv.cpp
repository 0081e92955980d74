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

#include "fogran/csv.hpp"

#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace fogran::csv {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

namespace {

constexpr const char* kRawHeader =
    "scheme,sweep_index,error_variance,drop,packet_bits,sum_rate_bps,mean_delay_s,zero_rate_samples,frames,"
    "converged,error";

double parse_double(const std::string& s, std::size_t line_no) {
  if (s == "nan") return std::nan("");
  if (s == "inf") return INFINITY;
  if (s == "-inf") return -INFINITY;
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("csv line " + std::to_string(line_no) + ": not a number: '" + s + "'");
  }
}

int parse_int(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw std::runtime_error("csv line " + std::to_string(line_no) + ": not an integer: '" + s + "'");
  }
}

// Errors may contain commas; keep the column parseable.
std::string sanitize(std::string s) {
  for (char& c : s) {
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  }
  return s;
}

}  // namespace

void write_raw(std::ostream& out, const std::vector<RawRow>& rows) {
  out << "# fogran raw v" << kRawSchemaVersion << '\n' << kRawHeader << '\n';
  for (const RawRow& r : rows) {
    out << to_string(r.scheme) << ',' << r.sweep_index << ',' << format_number(r.error_variance) << ',' << r.drop
        << ',' << format_number(r.packet_bits) << ',' << format_number(r.sum_rate_bps) << ','
        << format_number(r.mean_delay_s) << ',' << r.zero_rate_samples << ',' << r.frames << ','
        << (r.converged ? 1 : 0) << ',' << sanitize(r.error) << '\n';
  }
}

void write_aggregate(std::ostream& out, const std::vector<AggregateRow>& rows) {
  out << "# fogran aggregate v" << kAggregateSchemaVersion << '\n'
      << "scheme,sweep_index,error_variance,packet_bits,drops,failed,mean_sum_rate_bps,ci95_sum_rate_bps,"
         "mean_delay_s,ci95_delay_s\n";
  for (const AggregateRow& a : rows) {
    out << to_string(a.scheme) << ',' << a.sweep_index << ',' << format_number(a.error_variance) << ','
        << format_number(a.packet_bits) << ',' << a.drops << ',' << a.failed << ','
        << format_number(a.mean_sum_rate_bps) << ',' << format_number(a.ci95_sum_rate_bps) << ','
        << format_number(a.mean_delay_s) << ',' << format_number(a.ci95_delay_s) << '\n';
  }
}

std::vector<RawRow> read_raw(std::istream& in) {
  std::vector<RawRow> rows;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    if (line.front() == '#') {
      if (line.rfind("# fogran raw v", 0) != 0)
        throw std::runtime_error("csv line " + std::to_string(line_no) + ": not a raw results file");
      const int version = parse_int(line.substr(14), line_no);
      if (version != kRawSchemaVersion)
        throw std::runtime_error("unsupported raw schema version " + std::to_string(version));
      continue;
    }
    if (!header_seen) {
      if (line != kRawHeader) throw std::runtime_error("csv line " + std::to_string(line_no) + ": unexpected header");
      header_seen = true;
      continue;
    }
    const auto f = split_line(line);
    if (f.size() != 11) throw std::runtime_error("csv line " + std::to_string(line_no) + ": expected 11 fields");
    RawRow r;
    r.scheme = scheme_from_string(f[0]);
    r.sweep_index = parse_int(f[1], line_no);
    r.error_variance = parse_double(f[2], line_no);
    r.drop = parse_int(f[3], line_no);
    r.packet_bits = parse_double(f[4], line_no);
    r.sum_rate_bps = parse_double(f[5], line_no);
    r.mean_delay_s = parse_double(f[6], line_no);
    r.zero_rate_samples = parse_int(f[7], line_no);
    r.frames = parse_int(f[8], line_no);
    r.converged = f[9] == "1";
    r.error = f[10];
    rows.push_back(std::move(r));
  }
  if (!header_seen) throw std::runtime_error("raw results file has no header");
  return rows;
}

void write_channel(std::ostream& out, const ChannelMatrix& channel) {
  out << "# fogran channel v1\nap_id,user_id,entries...\n";
  for (int r = 0; r < channel.ap_count(); ++r) {
    for (int k = 0; k < channel.user_count(); ++k) {
      out << r << ',' << channel.user_id(k);
      const auto b = channel.block(r, k);
      for (Eigen::Index m = 0; m < b.size(); ++m)
        out << ',' << format_number(b(m).real()) << ',' << format_number(b(m).imag());
      out << '\n';
    }
  }
}

void write_solver_report(std::ostream& out, const SolverReport& report) {
  out << "# fogran solver-trace v1\niteration,objective_bps,segment\n";
  std::size_t segment = 0;
  for (std::size_t i = 0; i < report.objective_trace.size(); ++i) {
    while (segment + 1 < report.segment_starts.size() && report.segment_starts[segment + 1] <= i) ++segment;
    out << i << ',' << format_number(report.objective_trace[i]) << ',' << segment << '\n';
  }
}

void write_clustering(std::ostream& out, const Clustering& clustering) {
  out << "# fogran clustering v1\nuser_id,ap_id\n";
  for (int k = 0; k < clustering.user_count(); ++k) out << k << ',' << clustering.ap_of(k) << '\n';
}

Clustering read_clustering(std::istream& in, int ap_count) {
  std::vector<int> assignment;
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (!header_seen) {
      if (line != "user_id,ap_id") throw std::runtime_error("clustering csv: unexpected header");
      header_seen = true;
      continue;
    }
    const auto f = split_line(line);
    if (f.size() != 2) throw std::runtime_error("clustering csv line " + std::to_string(line_no) + ": expected 2 fields");
    const int k = parse_int(f[0], line_no);
    if (k != static_cast<int>(assignment.size()))
      throw std::runtime_error("clustering csv line " + std::to_string(line_no) + ": users must be listed in order");
    assignment.push_back(parse_int(f[1], line_no));
  }
  return Clustering(std::move(assignment), ap_count);
}

void write_slnr_values(std::ostream& out, const std::vector<std::tuple<int, int, double>>& values) {
  out << "# fogran slnr v1\nap_id,user_id,slnr\n";
  for (const auto& [r, k, v] : values) out << r << ',' << k << ',' << format_number(v) << '\n';
}

}  // namespace fogran::csv
