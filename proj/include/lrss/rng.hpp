// Copyright 2026 The lrss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace lrss {

/// SplitMix64 finalizer; used to derive independent seeds.
[[nodiscard]] constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

/// Deterministic random stream. All randomness in the library flows from
/// a master seed through named sub-streams, so the order in which
/// components draw cannot perturb each other.
///
/// Sampling is done by hand on top of mt19937_64 (whose output sequence is
/// fixed by the standard) so results are identical across standard
/// library implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : engine_(mix64(seed)) {}

  /// Sub-stream keyed by a label and an optional index.
  static RandomStream derive(std::uint64_t master_seed, std::string_view label, std::uint64_t index = 0);

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform integer in [0, bound); bound must be nonzero.
  std::uint64_t uniform_below(std::uint64_t bound);

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform_unit() { return static_cast<double>(engine_() >> 11U) * 0x1.0p-53; }

  bool bernoulli(double p) { return uniform_unit() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lrss
