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
#include "fogran_cli/svg_plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <sstream>

namespace fogran::cli {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 460.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 200.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 60.0;

const char* const kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#17becf", "#7f7f7f"};

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

// Roughly five "nice" ticks covering [lo, hi].
std::vector<double> linear_ticks(double lo, double hi) {
  const double span = hi - lo;
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (span / step <= 6.0) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + 1e-9 * span; t += step) ticks.push_back(t);
  return ticks;
}

bool usable(double y, bool log_y) { return std::isfinite(y) && (!log_y || y > 0.0); }

}  // namespace

std::string render_svg(const Chart& chart) {
  double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const Series& s : chart.series) {
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !usable(s.y[i], chart.log_y)) continue;
      xmin = std::min(xmin, s.x[i]);
      xmax = std::max(xmax, s.x[i]);
      const double e = i < s.err.size() && std::isfinite(s.err[i]) ? s.err[i] : 0.0;
      const double lo = chart.log_y && s.y[i] - e <= 0.0 ? s.y[i] : s.y[i] - e;
      ymin = std::min(ymin, lo);
      ymax = std::max(ymax, s.y[i] + e);
    }
  }
  if (!std::isfinite(xmin)) {
    xmin = 0.0;
    xmax = 1.0;
    ymin = chart.log_y ? 1.0 : 0.0;
    ymax = chart.log_y ? 10.0 : 1.0;
  }
  if (xmax == xmin) xmax = xmin + 1.0;
  if (chart.log_y) {
    ymin = std::pow(10.0, std::floor(std::log10(ymin)));
    ymax = std::pow(10.0, std::ceil(std::log10(ymax)));
    if (ymax <= ymin) ymax = ymin * 10.0;
  } else {
    if (ymin > 0.0) ymin = 0.0;
    if (ymax <= ymin) ymax = ymin + 1.0;
    ymax *= 1.05;
  }

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * pw; };
  auto py = [&](double y) {
    const double t = chart.log_y ? (std::log10(y) - std::log10(ymin)) / (std::log10(ymax) - std::log10(ymin))
                                 : (y - ymin) / (ymax - ymin);
    return kTop + (1.0 - t) * ph;
  };

  std::ostringstream o;
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
    << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">"
    << escape(chart.title) << "</text>\n";

  // Grid and ticks.
  for (double t : linear_ticks(xmin, xmax)) {
    o << "<line x1=\"" << num(px(t)) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(px(t)) << "\" y2=\""
      << num(kTop + ph) << "\" stroke=\"#e0e0e0\"/>\n";
    o << "<text x=\"" << num(px(t)) << "\" y=\"" << num(kTop + ph + 18) << "\" text-anchor=\"middle\">"
      << tick_label(t) << "</text>\n";
  }
  std::vector<double> yt;
  if (chart.log_y) {
    for (double t = ymin; t <= ymax * (1 + 1e-9); t *= 10.0) yt.push_back(t);
  } else {
    yt = linear_ticks(ymin, ymax);
  }
  for (double t : yt) {
    o << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(py(t)) << "\" x2=\"" << num(kLeft + pw) << "\" y2=\""
      << num(py(t)) << "\" stroke=\"#e0e0e0\"/>\n";
    o << "<text x=\"" << num(kLeft - 6) << "\" y=\"" << num(py(t) + 4) << "\" text-anchor=\"end\">" << tick_label(t)
      << "</text>\n";
  }
  o << "<rect x=\"" << num(kLeft) << "\" y=\"" << num(kTop) << "\" width=\"" << num(pw) << "\" height=\"" << num(ph)
    << "\" fill=\"none\" stroke=\"black\"/>\n";
  o << "<text x=\"" << num(kLeft + pw / 2) << "\" y=\"" << num(kHeight - 16) << "\" text-anchor=\"middle\">"
    << escape(chart.x_label) << "</text>\n";
  o << "<text transform=\"translate(20," << num(kTop + ph / 2) << ") rotate(-90)\" text-anchor=\"middle\">"
    << escape(chart.y_label) << "</text>\n";

  for (std::size_t si = 0; si < chart.series.size(); ++si) {
    const Series& s = chart.series[si];
    const char* color = kPalette[si % std::size(kPalette)];
    std::string path;
    for (std::size_t i = 0; i < s.x.size() && i < s.y.size(); ++i) {
      if (!std::isfinite(s.x[i]) || !usable(s.y[i], chart.log_y)) continue;
      path += (path.empty() ? "M" : " L") + num(px(s.x[i])) + "," + num(py(s.y[i]));
      const double e = i < s.err.size() && std::isfinite(s.err[i]) ? s.err[i] : 0.0;
      if (e > 0.0) {
        const double lo = chart.log_y && s.y[i] - e <= 0.0 ? s.y[i] : s.y[i] - e;
        o << "<line x1=\"" << num(px(s.x[i])) << "\" y1=\"" << num(py(lo)) << "\" x2=\"" << num(px(s.x[i]))
          << "\" y2=\"" << num(py(s.y[i] + e)) << "\" stroke=\"" << color << "\" stroke-width=\"1\"/>\n";
      }
      o << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\"" << num(py(s.y[i])) << "\" r=\"3\" fill=\"" << color
        << "\"/>\n";
    }
    if (!path.empty())
      o << "<path d=\"" << path << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    const double ly = kTop + 14.0 + 20.0 * static_cast<double>(si);
    o << "<line x1=\"" << num(kLeft + pw + 12) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(kLeft + pw + 36)
      << "\" y2=\"" << num(ly) << "\" stroke=\"" << color << "\" stroke-width=\"2\"/>\n";
    o << "<text x=\"" << num(kLeft + pw + 42) << "\" y=\"" << num(ly + 4) << "\">" << escape(s.label) << "</text>\n";
  }
  o << "</svg>\n";
  return o.str();
}

Chart rate_chart(const std::vector<AggregateRow>& rows) {
  Chart c{"Sum-rate vs CSI error variance", "CSI error variance", "mean sum-rate (Mbit/s)", false, {}};
  std::map<Scheme, Series> by_scheme;
  std::map<Scheme, double> first_packet;
  for (const AggregateRow& r : rows) {
    // Sum-rate does not depend on packet size; plot it once per scheme.
    auto [it, fresh] = first_packet.emplace(r.scheme, r.packet_bits);
    if (!fresh && it->second != r.packet_bits) continue;
    Series& s = by_scheme[r.scheme];
    s.label = std::string(to_string(r.scheme));
    s.x.push_back(r.error_variance);
    s.y.push_back(r.mean_sum_rate_bps / 1e6);
    s.err.push_back(r.ci95_sum_rate_bps / 1e6);
  }
  for (auto& [scheme, s] : by_scheme) c.series.push_back(std::move(s));
  return c;
}

Chart delay_chart(const std::vector<AggregateRow>& rows) {
  Chart c{"Packet delay vs CSI error variance", "CSI error variance", "mean packet delay (ms)", true, {}};
  std::map<std::pair<Scheme, double>, Series> lines;
  for (const AggregateRow& r : rows) {
    Series& s = lines[{r.scheme, r.packet_bits}];
    s.label = std::string(to_string(r.scheme)) + ", " + tick_label(r.packet_bits / 1000.0) + " kbit";
    s.x.push_back(r.error_variance);
    s.y.push_back(r.mean_delay_s * 1e3);
    s.err.push_back(r.ci95_delay_s * 1e3);
  }
  for (auto& [key, s] : lines) c.series.push_back(std::move(s));
  return c;
}

Scenario shape_from_raw(const std::vector<RawRow>& rows) {
  Scenario s;
  s.schemes.clear();
  s.packet_bits.clear();
  std::map<int, double> sweep;
  for (const RawRow& r : rows) {
    if (std::find(s.schemes.begin(), s.schemes.end(), r.scheme) == s.schemes.end()) s.schemes.push_back(r.scheme);
    if (std::find(s.packet_bits.begin(), s.packet_bits.end(), r.packet_bits) == s.packet_bits.end())
      s.packet_bits.push_back(r.packet_bits);
    sweep[r.sweep_index] = r.error_variance;
  }
  s.sweep.clear();
  for (const auto& [index, value] : sweep) {
    while (static_cast<int>(s.sweep.size()) < index) s.sweep.push_back(std::numeric_limits<double>::quiet_NaN());
    s.sweep.push_back(value);
  }
  return s;
}

}  // namespace fogran::cli
