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
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "fogran/csv.hpp"
#include "fogran/harness.hpp"
#include "fogran_cli/manifest.hpp"
#include "fogran_cli/scenario_file.hpp"
#include "fogran_cli/svg_plot.hpp"

#ifndef FOGRAN_VERSION
#define FOGRAN_VERSION "unknown"
#endif

namespace fs = std::filesystem;
using namespace fogran;

namespace {

enum Exit : int { kOk = 0, kUsage = 1, kScenario = 2, kRun = 3, kPlot = 4 };

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << content;
  if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
}

struct Source {
  std::string path;
  std::string text;
};

// A scenario argument is a file, a preset name, or empty (preset only).
Source load_source(const std::string& arg, std::string& preset) {
  if (arg.empty()) return {};
  std::error_code ec;
  if (fs::exists(arg, ec)) return {arg, read_file(arg)};
  if (cli::preset(arg)) {
    if (!preset.empty() && preset != arg)
      throw cli::ParseError(arg, 0, "preset", "conflicts with --preset " + preset);
    preset = arg;
    return {};
  }
  throw cli::ParseError(arg, 0, "", "no such file or preset");
}

std::string summary(const Scenario& s) {
  std::ostringstream o;
  o << s.name << ": R=" << s.topology.macro_count + s.topology.pico_count << " (" << s.topology.macro_count
    << " macro + " << s.topology.pico_count << " pico), K=" << s.topology.user_count << ", sweep=" << s.sweep.size()
    << " points, drops=" << s.drops << ", frames/drop=" << s.frames_per_drop << ", T=" << s.preschedule_period
    << ", seed=" << s.master_seed;
  return o.str();
}

void write_plots(const std::vector<AggregateRow>& agg, const fs::path& dir, std::vector<std::string>* written) {
  write_file(dir / "rate.svg", cli::render_svg(cli::rate_chart(agg)));
  write_file(dir / "delay.svg", cli::render_svg(cli::delay_chart(agg)));
  if (written) {
    written->push_back("rate.svg");
    written->push_back("delay.svg");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fogran: pre-scheduling and beamforming simulator for cloud/fog radio access networks"};
  app.set_version_flag("--version", std::string(FOGRAN_VERSION));
  app.require_subcommand(1);

  std::string scenario_arg;
  std::string preset;
  std::string out_dir;
  std::optional<std::uint64_t> seed;
  int threads = 1;
  bool svg = false;
  bool quiet = false;

  CLI::App* run = app.add_subcommand("run", "Run a scenario file, preset, or previous manifest.json");
  run->add_option("scenario", scenario_arg, "Scenario file, preset name, or manifest.json");
  run->add_option("--preset", preset, "Base preset the scenario file extends");
  run->add_option("--out", out_dir, "Output directory (default: out/<scenario name>)");
  run->add_option("--seed", seed, "Override the master seed");
  run->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  run->add_flag("--svg", svg, "Also write rate.svg and delay.svg");
  run->add_flag("--quiet", quiet, "No progress output");

  CLI::App* presets = app.add_subcommand("presets", "List built-in presets");
  std::string show;
  presets->add_option("--show", show, "Print the resolved configuration of one preset as JSON");

  CLI::App* validate_cmd = app.add_subcommand("validate", "Check a scenario without running it");
  std::string validate_arg;
  validate_cmd->add_option("scenario", validate_arg, "Scenario file or preset name")->required();
  validate_cmd->add_option("--preset", preset, "Base preset the scenario file extends");
  validate_cmd->add_option("--seed", seed, "Override the master seed");

  CLI::App* plot = app.add_subcommand("plot", "Plot a raw.csv from a previous run");
  std::string raw_path;
  plot->add_option("raw", raw_path, "raw.csv")->required();
  plot->add_option("--out", out_dir, "Output directory (default: next to raw.csv)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  }

  if (*presets) {
    if (!show.empty()) {
      const auto p = cli::preset(show);
      if (!p) {
        std::cerr << "fogran presets: unknown preset '" << show << "'\n";
        return kUsage;
      }
      std::cout << cli::to_json(*p).dump(2) << '\n';
      return kOk;
    }
    for (const std::string& name : cli::preset_names()) std::cout << summary(*cli::preset(name)) << '\n';
    return kOk;
  }

  if (*validate_cmd) {
    try {
      const Source src = load_source(validate_arg, preset);
      const Scenario s = cli::build_scenario(src.text, src.path.empty() ? "<preset>" : src.path, preset, seed);
      std::cout << "ok " << summary(s) << '\n';
      return kOk;
    } catch (const std::exception& e) {
      std::cerr << "fogran validate: " << e.what() << '\n';
      return kScenario;
    }
  }

  if (*plot) {
    try {
      std::ifstream in(raw_path, std::ios::binary);
      if (!in) throw std::runtime_error("cannot open " + raw_path);
      const std::vector<RawRow> raw = csv::read_raw(in);
      if (raw.empty()) throw std::runtime_error(raw_path + ": no rows");
      const fs::path dir = out_dir.empty() ? fs::path(raw_path).parent_path() : fs::path(out_dir);
      if (!dir.empty()) fs::create_directories(dir);
      write_plots(aggregate(raw, cli::shape_from_raw(raw)), dir.empty() ? fs::path(".") : dir, nullptr);
      if (!quiet) std::cout << "wrote " << (dir / "rate.svg").string() << " and " << (dir / "delay.svg").string() << '\n';
      return kOk;
    } catch (const std::exception& e) {
      std::cerr << "fogran plot: " << e.what() << '\n';
      return kPlot;
    }
  }

  // run
  cli::RunManifest manifest;
  Scenario scenario;
  try {
    const bool replay = fs::path(scenario_arg).extension() == ".json";
    if (replay) {
      manifest = cli::manifest_from_json(nlohmann::json::parse(read_file(scenario_arg)));
      if (!preset.empty() && preset != manifest.preset)
        throw std::runtime_error("--preset cannot change a recorded manifest");
      if (seed && seed != manifest.seed_override && *seed != manifest.master_seed)
        throw std::runtime_error("--seed cannot change a recorded manifest");
      scenario = cli::resolve(manifest);
    } else {
      const Source src = load_source(scenario_arg, preset);
      manifest.scenario_path = src.path;
      manifest.scenario_source = src.text;
      manifest.preset = preset;
      manifest.seed_override = seed;
      scenario = cli::build_scenario(src.text, src.path.empty() ? "<preset>" : src.path, preset, seed);
      manifest.resolved = cli::to_json(scenario);
    }
  } catch (const std::exception& e) {
    std::cerr << "fogran run: " << e.what() << '\n';
    return kScenario;
  }

  try {
    const fs::path dir = out_dir.empty() ? fs::path("out") / scenario.name : fs::path(out_dir);
    fs::create_directories(dir);
    manifest.tool_version = FOGRAN_VERSION;
    manifest.master_seed = scenario.master_seed;
    manifest.output_dir = dir.string();
    manifest.threads = threads;
    manifest.started_utc = cli::utc_now();
    manifest.finished_utc.clear();
    manifest.outputs.clear();
    if (!quiet) std::cerr << "running " << summary(scenario) << '\n';

    ResultTable table = run_scenario(scenario, threads, [&](std::size_t done, std::size_t total) {
      if (!quiet) std::cerr << "\r  " << done << '/' << total << " cells" << std::flush;
    });
    if (!quiet) std::cerr << '\n';

    std::ostringstream raw, agg;
    csv::write_raw(raw, table.raw);
    csv::write_aggregate(agg, table.aggregate);
    write_file(dir / "raw.csv", raw.str());
    write_file(dir / "agg.csv", agg.str());
    manifest.outputs = {"raw.csv", "agg.csv"};
    if (svg) write_plots(table.aggregate, dir, &manifest.outputs);
    manifest.finished_utc = cli::utc_now();
    write_file(dir / "manifest.json", cli::to_json(manifest).dump(2) + "\n");

    int failed = 0;
    for (const RawRow& r : table.raw) failed += r.error.empty() ? 0 : 1;
    if (!quiet) {
      std::cerr << "wrote " << dir.string() << " (" << table.raw.size() << " raw rows";
      if (failed > 0) std::cerr << ", " << failed << " failed";
      std::cerr << ")\n";
    }
    return kOk;
  } catch (const std::exception& e) {
    std::cerr << "fogran run: " << e.what() << '\n';
    return kRun;
  }
}
