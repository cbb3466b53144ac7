// Copyright 2026 The ri1d Authors.
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
#include <limits>

namespace ri1d {

/// Identifies one reproducible random substream.
struct RngState {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
};

/// xoshiro256** generator keyed by (seed, stream).
///
/// The four state words are filled from a SplitMix64 sequence whose start
/// is a mix of both the seed and the stream index, so that any two distinct
/// (seed, stream) pairs give unrelated sequences. Satisfies the standard
/// UniformRandomBitGenerator requirements.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(RngState state);
  Rng(std::uint64_t seed, std::uint64_t stream) : Rng(RngState{seed, stream}) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() {
    return std::numeric_limits<result_type>::max();
  }

  result_type operator()() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Uniform double in (0, 1].
  double uniform_positive() {
    return static_cast<double>(((*this)() >> 11) + 1) * 0x1.0p-53;
  }

  bool bernoulli(double p) { return uniform() < p; }

  /// Poisson draw. Inversion below mean 30, PTRS rejection above.
  std::int64_t poisson(double mean);

  /// Geometric draw on {1, 2, ...} with success probability p.
  std::int64_t geometric(double p);

  RngState state() const { return origin_; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::int64_t poisson_inversion(double mean);
  std::int64_t poisson_ptrs(double mean);

  std::uint64_t s_[4];
  RngState origin_;
};

}  // namespace ri1d
