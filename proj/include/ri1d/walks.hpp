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

// The simple random walk on the positive integers conditioned never to hit
// the origin: transition law, samplers, hitting and escape probabilities,
// path weights and reflection-principle path counts.

#include <cstdint>
#include <vector>

#include "ri1d/rng.hpp"

namespace ri1d {

/// A finite nearest-neighbour trajectory. `positions` includes the start, so
/// a path of m steps has m + 1 entries.
struct WalkPath {
  std::vector<std::int64_t> positions;

  std::int64_t start() const { return positions.front(); }
  std::int64_t end() const { return positions.back(); }
  std::int64_t steps() const {
    return static_cast<std::int64_t>(positions.size()) - 1;
  }
};

/// True when the path is nonempty, moves by +-1 at every step and stays
/// at sites >= 1.
bool is_valid_path(const WalkPath& path);

/// P[x -> x+1] = (x+1)/(2x).
double step_up_prob(std::int64_t x);

/// 1 - step_up_prob(x); the pair sums to exactly 1 in floating point.
double step_down_prob(std::int64_t x);

WalkPath sample_path(std::int64_t x0, std::int64_t steps, Rng& rng);

/// Probability of `path` under the conditioned walk: end / (2^m * start).
double path_prob(const WalkPath& path);
double log_path_prob(const WalkPath& path);

/// P_y[tau_x < tau_N] = x(N-y) / (y(N-x)), for 1 < x < y < N.
double hit_before_prob(std::int64_t y, std::int64_t x, std::int64_t big_n);

/// P_y[tau_x < infinity] = x / y for 1 <= x <= y (1 at x == y).
double hit_prob(std::int64_t y, std::int64_t x);

/// P_x[no return to x] = 1 / (2x).
double escape_prob(std::int64_t x);

/// |E[1/X_1 | X_0 = x] - 1/x| for x >= 2. Zero in exact arithmetic since
/// 1/X is a martingale up to the first visit to 1.
double martingale_defect(std::int64_t x);

/// Largest length for which count_paths is evaluated in exact integers.
inline constexpr std::int64_t kExactPathCountMaxLength = 60;

/// Number of length-`delta` nearest-neighbour paths from x to k that never
/// visit 0, by the reflection principle. Exact for delta <=
/// kExactPathCountMaxLength; throws BudgetError beyond (use
/// log_count_paths there).
unsigned __int128 count_paths(std::int64_t x, std::int64_t delta, std::int64_t k);

/// log of count_paths for any length; -inf when no such path exists.
double log_count_paths(std::int64_t x, std::int64_t delta, std::int64_t k);

/// Brute-force count over all 2^delta step sequences; delta <= 24.
std::uint64_t enumerate_paths(std::int64_t x, std::int64_t delta, std::int64_t k);

inline constexpr std::int64_t kEnumerationMaxLength = 24;

struct EndpointProb {
  double exact;
  double asymptotic;
};

/// P_x[X_delta <= y] for the conditioned walk, summed exactly over
/// endpoints from path counts, together with sqrt(2/pi) y^3 / (3 delta^1.5).
EndpointProb endpoint_leq_prob(std::int64_t x, std::int64_t delta, std::int64_t y);

/// Runs the conditioned walk from y until it reaches x or big_n. Returns
/// true when x is reached first. Aborts with BudgetError after
/// kAbsorptionStepCap steps.
bool sample_hits_lower_first(std::int64_t y, std::int64_t x, std::int64_t big_n,
                             Rng& rng);

/// Runs the conditioned walk from x until it returns to x or reaches
/// big_n > x. Returns true when big_n is reached first.
bool sample_escapes_to(std::int64_t x, std::int64_t big_n, Rng& rng);

inline constexpr std::int64_t kAbsorptionStepCap = 1'000'000'000;

}  // namespace ri1d
