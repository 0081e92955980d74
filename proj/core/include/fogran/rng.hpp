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

#include <cstdint>
#include <initializer_list>
#include <random>

namespace fogran {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer. Used to derive independent stream seeds from a
/// master seed and a tuple of task coordinates.
std::uint64_t mix64(std::uint64_t x);

/// Order-sensitive hash of a seed and task coordinates. Stable across
/// platforms and independent of execution order.
std::uint64_t derive_seed(std::uint64_t master, std::initializer_list<std::uint64_t> coordinates);

/// Domain tags keep streams for different purposes apart even when the
/// numeric coordinates coincide.
enum class StreamTag : std::uint64_t {
  Topology = 0x746f706fULL,
  Shadowing = 0x73686164ULL,
  Fading = 0x66616465ULL,
  CsiError = 0x63736965ULL,
  Drop = 0x64726f70ULL,
};

inline std::uint64_t tag(StreamTag t) { return static_cast<std::uint64_t>(t); }

}  // namespace fogran
