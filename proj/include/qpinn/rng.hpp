// Copyright 2026 The qpinn Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>

namespace qpinn {

/// One step of the SplitMix64 sequence. Advances `state` and returns the
/// mixed output.
std::uint64_t splitmix64(std::uint64_t &state);

/// Seed for independent stream `index` under a global `seed`.
///
/// Defined as the first SplitMix64 output of the state
/// `seed ^ (0x9E3779B97F4A7C15 * (index + 1))`, so stream 0 differs from the
/// raw global seed and neighbouring indices are decorrelated.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// xoshiro256** 1.0 (Blackman & Vigna), state filled from SplitMix64.
///
/// Only fixed-width integer arithmetic is used, so a given seed yields the
/// same stream on every platform.
class Xoshiro256 {
   public:
    explicit Xoshiro256(std::uint64_t seed);

    std::uint64_t next();

    /// Uniform double in [0, 1) built from the top 53 bits of next().
    double uniform();

   private:
    std::array<std::uint64_t, 4> s_{};
};

}  // namespace qpinn
