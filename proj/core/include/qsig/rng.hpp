// Copyright 2026 The qsig authors
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

#include <cstdint>

namespace qsig {

/// 64-bit finalizer (splitmix64). Good avalanche behavior; used both to fold
/// key words together and to turn a counter into an output word.
constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// Counter-based generator keyed by (seed, k1, k2, k3).
///
/// Every draw is a pure function of the key and a local counter, so two
/// generators with the same key emit the same sequence no matter which thread
/// evaluates them or in what order. Protocol code keys one generator per
/// (seed, bit index, pair index, purpose) and gets schedule-independent
/// transcripts for free.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t k1 = 0,
                      std::uint64_t k2 = 0, std::uint64_t k3 = 0) noexcept {
    state_ = mix64(mix64(mix64(mix64(seed) ^ k1) ^ k2) ^ k3);
  }

  std::uint64_t next_u64() noexcept {
    return mix64(state_ + (++counter_) * 0x9e3779b97f4a7c15ULL);
  }

  /// Uniform double in [0, 1), 53 significant bits.
  double next_double() noexcept {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  /// Uniform index in [0, n). n must be positive.
  std::size_t next_index(std::size_t n) noexcept {
    auto i = static_cast<std::size_t>(next_double() * static_cast<double>(n));
    return i < n ? i : n - 1;
  }

 private:
  std::uint64_t state_;
  std::uint64_t counter_ = 0;
};

// Purpose tags for keyed substreams. Kept small so they can be packed next to
// a pair index in one key word.
namespace rng_stream {
inline constexpr std::uint64_t kEncode = 1;  // Alice's measurement
inline constexpr std::uint64_t kDecode = 2;  // Bob's meters
inline constexpr std::uint64_t kBranch = 3;  // claims-faithful branch draw
inline constexpr std::uint64_t kClaim = 4;   // claims-faithful outcome draw
}  // namespace rng_stream

}  // namespace qsig
