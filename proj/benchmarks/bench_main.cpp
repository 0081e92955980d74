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
#include <benchmark/benchmark.h>

#include "fogran/channel.hpp"
#include "fogran/harness.hpp"
#include "fogran/prescheduler.hpp"
#include "fogran/slnr.hpp"
#include "fogran/wsr_solver.hpp"

using namespace fogran;

namespace {

struct Instance {
  NetworkTopology topology;
  ChannelMatrix channel;
};

Instance make(const Scenario& s, std::uint64_t seed) {
  TopologyConfig tc = s.topology;
  tc.seed = seed;
  NetworkTopology t = build_topology(tc);
  ChannelMatrix h = draw_channel(t, s.channel, seed + 1);
  return {std::move(t), std::move(h)};
}

Scenario by_index(int i) { return i == 0 ? desk_scale_scenario() : paper_scale_scenario(); }

void BM_SlnrBeamforming(benchmark::State& state) {
  const Scenario s = by_index(static_cast<int>(state.range(0)));
  const Instance in = make(s, 3);
  const Clustering c = strongest_channel_clustering(exact_csi(in.channel), in.topology);
  for (auto _ : state) benchmark::DoNotOptimize(fogran_beamforming(in.channel, in.topology, c));
}
BENCHMARK(BM_SlnrBeamforming)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

void BM_SolveWsr(benchmark::State& state) {
  const Scenario s = by_index(static_cast<int>(state.range(0)));
  const Instance in = make(s, 5);
  const NoisyChannelMatrix n = corrupt_csi(in.channel, 0.1, 6);
  for (auto _ : state) benchmark::DoNotOptimize(solve_wsr(n, in.topology, s.solver));
}
BENCHMARK(BM_SolveWsr)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(3);

void BM_Preschedule(benchmark::State& state) {
  const Scenario s = by_index(static_cast<int>(state.range(0)));
  const Instance in = make(s, 7);
  const NoisyChannelMatrix n = corrupt_csi(in.channel, 0.1, 8);
  for (auto _ : state) benchmark::DoNotOptimize(preschedule(n, in.topology, s.prescheduler));
}
BENCHMARK(BM_Preschedule)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->Iterations(2);

void BM_CorruptCsi(benchmark::State& state) {
  const Instance in = make(paper_scale_scenario(), 9);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(corrupt_csi(in.channel, 0.1, ++seed));
}
BENCHMARK(BM_CorruptCsi)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
