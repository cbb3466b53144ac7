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

// One-dimensional random interlacements at level alpha: vacant-set law,
// Poisson trajectory counts, a window sampler built from conditioned-walk
// trajectories, and the compound Poisson law of the local time.

#include <complex>
#include <cstdint>
#include <optional>
#include <vector>

#include "ri1d/capacity.hpp"
#include "ri1d/rng.hpp"

namespace ri1d {

/// Interlacement intensity; alpha > 0.
class Level {
 public:
  explicit Level(double alpha);
  double alpha() const { return alpha_; }

 private:
  double alpha_;
};

/// One draw of the interlacement seen through the window [-L, L].
struct WindowSample {
  std::int64_t half_width = 0;
  std::int64_t trajectory_count = 0;
  /// Visit counts indexed by site + half_width; the entry for site 0 is
  /// always zero.
  std::vector<std::int64_t> visits;
  /// Largest visited negative site, or -L-1 when none.
  std::int64_t neg_edge = 0;
  /// Smallest visited positive site, or L+1 when none.
  std::int64_t pos_edge = 0;

  std::int64_t visits_at(std::int64_t site) const;
  /// True when every site of [lo, hi] is unvisited; requires the interval
  /// to lie in the window.
  bool vacant(std::int64_t lo, std::int64_t hi) const;
};

struct LocalTimeLaw {
  std::int64_t x = 0;
  double alpha = 0.0;
  std::vector<double> pmf;
  /// 1 - sum(pmf), the probability mass beyond the truncation point.
  double tail_mass = 0.0;
  /// Set when tail_mass exceeds kLocalTimeTailWarning.
  bool truncation_warning = false;

  double mean() const;
  double variance() const;
};

inline constexpr double kLocalTimeTailWarning = 1e-9;
inline constexpr double kLocalTimeDefaultTail = 1e-12;

/// P[A in vacant set] = exp(-alpha cap(A u {0})).
double vacant_prob_exact(const IntervalSet& a, const Level& level);

/// N_A ~ Poisson(alpha cap(A u {0})).
std::int64_t sample_trajectory_count(const IntervalSet& a, const Level& level,
                                     Rng& rng);

/// Draws the interlacement restricted to [-L, L]. N ~ Poisson(alpha L)
/// trajectories enter at -L or L with probability 1/2 each and evolve as
/// the conditioned walk on their half-line. Leaving to |y| = L + 1, a
/// trajectory comes back to the window edge with probability L / (L + 1);
/// otherwise it is finished.
WindowSample sample_window(const Level& level, std::int64_t half_width, Rng& rng);

/// Number of visits to x >= 1: a Poisson(alpha x / 2) number of
/// independent Geometric(1/(2x)) visit counts.
std::int64_t sample_local_time(std::int64_t x, const Level& level, Rng& rng);

/// Exact pmf of the local time at x on 0..s_max. When s_max is not given
/// the smallest s whose Chernoff tail bound drops below
/// kLocalTimeDefaultTail is used.
LocalTimeLaw local_time_pmf(std::int64_t x, const Level& level,
                            std::optional<std::int64_t> s_max = std::nullopt);

/// Truncation point from the Chernoff bound P[l >= s] <= exp(K(th) - th s).
std::int64_t local_time_chernoff_cutoff(std::int64_t x, const Level& level,
                                        double tail);

/// exp{alpha x^2 (e^{it} - 1) / (2x - (2x-1) e^{it})}.
std::complex<double> local_time_cf(std::int64_t x, const Level& level, double t);

/// alpha x^2.
double local_time_mean(std::int64_t x, const Level& level);
/// alpha (4x - 1) x^2.
double local_time_variance(std::int64_t x, const Level& level);

/// (sample - alpha x^2) / (x sqrt(alpha (4x - 1))).
double standardize_local_time(double sample, std::int64_t x, const Level& level);

}  // namespace ri1d
