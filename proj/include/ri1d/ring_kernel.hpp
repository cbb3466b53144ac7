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

// Survival kernels h_n(x, t) = P_x[simple walk avoids {0, n} for t steps],
// the time-inhomogeneous walk on the ring conditioned to avoid the origin up
// to a horizon, and exact evaluations of the vacant-set, local-time and
// hitting functionals of that walk.
//
// Ring coordinates: the ring with n sites and a forbidden origin is the
// segment {1, ..., n-1} with killing at 0 and n; ring site -a is line site
// n - a.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "ri1d/rng.hpp"
#include "ri1d/walks.hpp"

namespace ri1d {

enum class KernelBackend { kDpTable, kSpectral, kAsymptotic };

/// ceil((4/pi^2) n^2 ln n): the smallest horizon treated as in regime.
std::int64_t regime_horizon(std::int64_t n);
bool in_regime(std::int64_t n, std::int64_t t);

/// h_n(x, t) by the recursion h(x,t) = (h(x-1,t-1) + h(x+1,t-1)) / 2.
double h_dp(std::int64_t n, std::int64_t x, std::int64_t t);
/// log h_n(x, t) by the same recursion, renormalised at every step so that
/// very long horizons cannot underflow. -inf at x = 0 or x = n.
double log_h_dp(std::int64_t n, std::int64_t x, std::int64_t t);

/// h_n(., t) for one horizon, stored as values * exp(log_scale).
struct SurvivalProfile {
  std::vector<double> values;
  double log_scale = 0.0;

  double log_at(std::int64_t x) const;
};

/// Survival profiles at every requested horizon from a single recursion
/// pass. Horizons may be given in any order; the result follows the input
/// order.
std::vector<SurvivalProfile> survival_profiles(std::int64_t n,
                                               std::span<const std::int64_t> horizons);

struct SpectralValue {
  double value;  // clamped to [0, 1]
  double raw;    // the sum before clamping
};

/// h_n(x, t) as the odd-mode cosine sum
///   (2/n) sum_{j <= n/2} cos^t(th_j) cot(th_j/2) sin(x th_j),  th_j = pi(2j-1)/n,
/// with every term formed in signed log scale.
SpectralValue h_spectral(std::int64_t n, std::int64_t x, std::int64_t t);
/// log of the raw spectral sum; NaN when the sum is not positive.
double log_h_spectral(std::int64_t n, std::int64_t x, std::int64_t t);

struct AsymptoticValue {
  double value;
  bool in_regime;
};

/// (4/pi) cos^t(pi/n) sin(pi x/n), the first-mode approximation.
AsymptoticValue h_asymptotic(std::int64_t n, std::int64_t x, std::int64_t t);

/// log h_n(x, t) by the cheaper exact backend for the given size.
double log_h(std::int64_t n, std::int64_t x, std::int64_t t);

/// P_x[tau_0 < tau_n, tau_0 = k] as a sum over all n-1 modes.
double ruin_time_pmf(std::int64_t n, std::int64_t x, std::int64_t k);
/// P_x[tau_{0,n} = k] as a sum over odd modes.
double absorption_time_pmf(std::int64_t n, std::int64_t x, std::int64_t k);

/// Table entries (sites x horizons) above which a dp_table kernel is refused.
inline constexpr std::int64_t kMaxKernelTableEntries = 20'000'000;

/// Evaluator of h_n(x, t). The dp_table backend keeps every normalised
/// survival vector up to its horizon, which is what the conditioned
/// sampler needs; the other backends evaluate per query.
class SurvivalKernel {
 public:
  static SurvivalKernel dp_table(std::int64_t n, std::int64_t horizon);
  static SurvivalKernel spectral(std::int64_t n);
  static SurvivalKernel asymptotic(std::int64_t n);

  KernelBackend backend() const { return backend_; }
  std::int64_t n() const { return n_; }
  /// Largest t the kernel can answer (unbounded for per-query backends).
  std::int64_t horizon() const { return horizon_; }

  double h(std::int64_t x, std::int64_t t) const;
  double log_h(std::int64_t x, std::int64_t t) const;

  /// Probability of stepping to x+1 with s steps to go:
  /// h(x+1, s-1) / (2 h(x, s)).
  double step_up_prob(std::int64_t x, std::int64_t s) const;
  double step_down_prob(std::int64_t x, std::int64_t s) const;

 private:
  SurvivalKernel(KernelBackend backend, std::int64_t n, std::int64_t horizon)
      : backend_(backend), n_(n), horizon_(horizon) {}

  void check(std::int64_t x, std::int64_t t) const;
  const double* row(std::int64_t t) const {
    return table_.data() + static_cast<std::size_t>(t) * static_cast<std::size_t>(n_ + 1);
  }

  KernelBackend backend_;
  std::int64_t n_;
  std::int64_t horizon_;
  std::vector<double> table_;      // (horizon + 1) x (n + 1), row t holds h(., t) / scale_t
  std::vector<double> log_scale_;  // log scale_t
  std::vector<double> growth_;     // exp(log_scale_[t-1] - log_scale_[t])

  friend class RingWalker;
};

double ring_step_up_prob(const SurvivalKernel& kernel, std::int64_t x, std::int64_t s);
double ring_step_down_prob(const SurvivalKernel& kernel, std::int64_t x, std::int64_t s);

struct RingConfig {
  std::int64_t n = 0;        // ring size
  std::int64_t t_total = 0;  // conditioning horizon
  std::int64_t x0 = 0;       // start site, 0 < x0 < n
  std::optional<double> alpha;

  void validate() const;
};

/// Summary of one conditioned ring walk: extremes over times 0..t and the
/// number of visits to a chosen site at times 1..t.
struct RingTrace {
  std::int64_t min_site = 0;
  std::int64_t max_site = 0;
  std::int64_t visits = 0;
};

/// Draws a t_total-step path from x0 under the ring law. The kernel must be
/// a dp_table of the same size with horizon >= t_total.
WalkPath sample_ring_path(const RingConfig& cfg, const SurvivalKernel& kernel, Rng& rng);

/// Same walk without storing the path; `count_site` selects the site whose
/// visits are counted.
RingTrace sample_ring_trace(const RingConfig& cfg, const SurvivalKernel& kernel,
                            std::int64_t count_site, Rng& rng);

/// log probability of a path started with t steps to go:
/// log h(end, t - m) - m log 2 - log h(start, t). -inf for paths that touch
/// 0 or n.
double log_ring_path_prob(const WalkPath& path, std::int64_t n, std::int64_t t,
                          const SurvivalKernel& kernel);

/// Probability that ring sites [-a, b] stay unvisited up to time t:
/// h_{n-a-b}(x0 - b, t) / h_n(x0, t).
double vacant_prob_ring_exact(std::int64_t n, std::int64_t t, std::int64_t x0,
                              std::int64_t a, std::int64_t b);

/// floor(alpha n^3 / (2 pi^2)).
std::int64_t ring_time_scale(std::int64_t n, double alpha);

/// floor(4 alpha n^3 / pi^2): ring_time_scale for a ring of 2n sites.
std::int64_t ring_local_time_horizon(std::int64_t n_half, double alpha);

/// Visits to x of the walk on the ring of 2 n_half sites, started at
/// n_half and conditioned up to ring_local_time_horizon. Visits are counted
/// at times 1..t. Holds its kernel so that repeated draws are cheap.
class RingLocalTimeSampler {
 public:
  RingLocalTimeSampler(std::int64_t n_half, double alpha, std::int64_t x);

  std::int64_t sample(Rng& rng) const;
  const RingConfig& config() const { return cfg_; }

 private:
  RingConfig cfg_;
  std::int64_t site_;
  SurvivalKernel kernel_;
};

std::int64_t ring_local_time_sample(std::int64_t n_half, double alpha, std::int64_t x,
                                    Rng& rng);

struct Pi4Result {
  double value;
  bool in_regime;
};

/// E_a[sin(pi X_delta / n) | tau_{0,n} > delta] for the simple walk,
/// computed by propagating the killed distribution.
Pi4Result verify_pi4(std::int64_t n, std::int64_t delta, std::int64_t a);

struct NoHitResult {
  double exact;
  double asymptotic;  // exp(-delta x pi^2 / (8 n^3))
  bool in_regime;
};

/// Ring of 2 n_half sites started at n_half and conditioned up to t:
/// probability that x is not visited during the first delta steps.
NoHitResult no_hit_prob_exact(std::int64_t n_half, std::int64_t t, std::int64_t delta,
                              std::int64_t x);

struct MidTailResult {
  double exact;
  double bound;  // (8/pi) cos(pi x / 2n) exp(-3 pi^2 delta / (8 n^2))
  bool in_regime;
};

/// Ring of 2 n_half sites started at x and conditioned up to t: probability
/// that n_half is not reached during the first delta steps.
MidTailResult mid_tail_check(std::int64_t n_half, std::int64_t t, std::int64_t delta,
                             std::int64_t x);

struct EndpointRingResult {
  double exact;
  double asymptotic;  // sqrt(2/pi) y^3 / (3 delta^1.5)
  double tolerance;   // relative; kEndpointScale * (delta/n^2 + y^2/delta)
  bool in_regime;
};

/// Ring of n sites started at x and conditioned up to t: P[X_delta <= y].
EndpointRingResult endpoint_small_prob_ring(std::int64_t n, std::int64_t t,
                                            std::int64_t x, std::int64_t delta,
                                            std::int64_t y);

}  // namespace ri1d
