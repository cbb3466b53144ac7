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

// Acceptance criteria. Each check function takes its experiment parameters
// so the CLI can run it at other sizes; run_acceptance() pins the sizes and
// tolerances of the acceptance suite.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ri1d/mc_harness.hpp"

namespace ri1d {

struct RunOptions {
  std::uint64_t seed = 20261016;
  int workers = 0;

  ReplicateOptions replicate(bool keep_values = false) const {
    return ReplicateOptions{seed, workers, keep_values};
  }
};

/// Window sampler frequency of [lo, hi] being vacant against
/// exp(-alpha cap_hat), within k_sigma binomial standard deviations.
Verdict check_vacant_window(double alpha, std::int64_t half_width, std::int64_t lo,
                            std::int64_t hi, std::int64_t samples, const RunOptions& run);

/// TV between sampled local times at x and the exact pmf.
Verdict check_local_time_tv(double alpha, std::int64_t x, std::int64_t samples,
                            double threshold, const RunOptions& run);
/// Same comparison for the local time read off window samples.
Verdict check_window_local_time_tv(double alpha, std::int64_t x, std::int64_t half_width,
                                   std::int64_t samples, double threshold,
                                   const RunOptions& run);

/// Relative errors of the sample mean and variance of the local time.
std::vector<Verdict> check_local_time_moments(double alpha, std::int64_t x,
                                              std::int64_t samples, double mean_tol,
                                              double var_tol, const RunOptions& run);

/// KS distance of standardized local times to N(0, 1).
Verdict check_clt(double alpha, std::int64_t x, std::int64_t samples, double threshold,
                  const RunOptions& run);

/// Max relative gap between spectral and recursion kernels on
/// n in [n_lo, n_hi], 0 < x < n, t in [0, t_max].
Verdict check_kernel_oracle(std::int64_t n_lo, std::int64_t n_hi, std::int64_t t_max,
                            double threshold);

/// |h / first mode - 1| at the regime horizon and x = n/2 for each n,
/// against scale / n^2, plus strict decrease along the list.
std::vector<Verdict> check_asymptotic_h(const std::vector<std::int64_t>& ns);

/// Ring vacancy of sites [-a, b] at t = ring_time_scale(n, alpha): exact
/// ratio against exp(-alpha (a + b) / 2), and sampled paths against the
/// exact ratio.
std::vector<Verdict> check_ring_vacancy(std::int64_t n, double alpha, std::int64_t x0,
                                        std::int64_t a, std::int64_t b,
                                        std::int64_t samples, double rel_tol,
                                        const RunOptions& run);

/// TV between ring local times at x (ring of 2 n_half sites) and the
/// interlacement local-time pmf.
Verdict check_ring_local_time(std::int64_t n_half, double alpha, std::int64_t x,
                              std::int64_t samples, double threshold, const RunOptions& run);

/// |E[sin(pi X / n) | survival] / (pi/4) - 1| at the regime horizon.
std::vector<Verdict> check_pi4(std::int64_t n, const std::vector<std::int64_t>& starts);

/// No-hit probability against exp(-delta x pi^2 / (8 n^3)) with
/// delta = regime_horizon(2 n_half) and t = 2 delta.
Verdict check_no_hit(std::int64_t n_half, std::int64_t x);

/// Mid-interval tail against its bound on x in {2, n/2, n-1},
/// delta in {H, 2H}, t = delta + H, H = regime_horizon(2 n_half).
std::vector<Verdict> check_mid_tail(std::int64_t n_half);

/// Reflection counts against enumeration for delta <= delta_max,
/// x in [1, x_max], all endpoints.
Verdict check_path_counts(std::int64_t delta_max, std::int64_t x_max);
/// Exact endpoint probability against its asymptotic form.
Verdict check_endpoint(std::int64_t x, std::int64_t delta, std::int64_t y, double rel_tol);

/// Martingale defect scan and first-step consistency of the closed forms.
std::vector<Verdict> check_exact_identities(std::int64_t x_max_martingale,
                                            std::int64_t x_max_first_step);
/// Monte Carlo hitting and escape frequencies against the closed forms.
std::vector<Verdict> check_hitting_mc(std::int64_t samples, const RunOptions& run);

struct CriterionResult {
  int id = 0;
  std::string title;
  std::vector<Verdict> checks;
  double seconds = 0.0;
  double time_limit = 0.0;

  bool pass() const;
};

inline constexpr int kCriterionCount = 13;

/// Runs the listed criteria (all when empty), calling `report` as each
/// finishes.
std::vector<CriterionResult> run_acceptance(
    const RunOptions& run, const std::vector<int>& only = {},
    const std::function<void(const CriterionResult&)>& report = {});

/// One line: status, id, title, every check and the runtime.
std::string format_criterion(const CriterionResult& result);

}  // namespace ri1d
