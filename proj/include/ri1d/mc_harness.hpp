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

// Replicated experiments with per-replicate RNG streams, and the distances
// used to compare empirical laws with exact ones.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <map>
#include <mutex>
#include <span>
#include <string>
#include <thread>
#include <type_traits>
#include <vector>

#include "ri1d/errors.hpp"
#include "ri1d/rng.hpp"

namespace ri1d {

/// Moments, integer pmf and optionally the raw values of a replicate farm.
struct EmpiricalSummary {
  std::int64_t count = 0;
  double mean = 0.0;
  double m2 = 0.0;  // sum of squared deviations from the mean
  /// Value -> number of replicates; filled for integer-valued data only.
  std::map<std::int64_t, std::int64_t> counts;
  /// Raw values, sorted by finalize(); kept only when requested.
  std::vector<double> values;

  void add(double value, bool keep_value = false);
  void add_integer(std::int64_t value, bool keep_value = false);
  /// Chan's pairwise update. Exact in the counts; the floating moments
  /// depend on merge order, so farms merge in a fixed order.
  void merge(const EmpiricalSummary& other);
  void finalize();

  /// Unbiased; 0 for fewer than two replicates.
  double variance() const;
  /// Relative frequency of each observed value.
  std::map<std::int64_t, double> pmf() const;
  double frequency(std::int64_t value) const;
};

struct Verdict {
  std::string label;
  double statistic = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string context;
};

/// pass = statistic <= threshold; a NaN statistic fails.
Verdict make_verdict(std::string label, double statistic, double threshold,
                     std::string context = {});

struct ReplicateOptions {
  std::uint64_t seed = 0;
  /// 0 picks default_workers().
  int workers = 0;
  bool keep_values = false;
};

/// RI1D_WORKERS when set to a positive integer, else the hardware thread count.
int default_workers();

inline constexpr std::int64_t kReplicateBlock = 4096;

/// Runs M replicates of `sampler(Rng&)`; replicate i draws from stream i
/// of `seed`. Replicates are grouped in fixed blocks that are merged in
/// block order, so the summary does not depend on the worker count.
/// Integral (and bool) results also populate the pmf.
template <typename Sampler>
EmpiricalSummary run_replicates(Sampler&& sampler, std::int64_t M,
                                const ReplicateOptions& opts = {}) {
  if (M < 1) throw DomainError("run_replicates: M must be >= 1");
  using Result = std::invoke_result_t<Sampler&, Rng&>;
  const std::int64_t blocks = (M + kReplicateBlock - 1) / kReplicateBlock;
  std::vector<EmpiricalSummary> partial(static_cast<std::size_t>(blocks));
  std::atomic<std::int64_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr error;
  std::string error_context;

  auto work = [&] {
    for (;;) {
      const std::int64_t b = next.fetch_add(1);
      if (b >= blocks) return;
      {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (error) return;
      }
      EmpiricalSummary& s = partial[static_cast<std::size_t>(b)];
      const std::int64_t end = std::min(M, (b + 1) * kReplicateBlock);
      for (std::int64_t i = b * kReplicateBlock; i < end; ++i) {
        try {
          Rng rng(opts.seed, static_cast<std::uint64_t>(i));
          const Result r = sampler(rng);
          if constexpr (std::is_integral_v<Result>) {
            s.add_integer(static_cast<std::int64_t>(r), opts.keep_values);
          } else {
            s.add(static_cast<double>(r), opts.keep_values);
          }
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) {
            error = std::current_exception();
            error_context = "replicate " + std::to_string(i) + " (seed " +
                            std::to_string(opts.seed) + ")";
          }
          return;
        }
      }
    }
  };

  const int workers = static_cast<int>(
      std::min<std::int64_t>(opts.workers > 0 ? opts.workers : default_workers(), blocks));
  if (workers <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (auto& th : pool) th.join();
  }
  if (error) {
    try {
      std::rethrow_exception(error);
    } catch (const std::exception& e) {
      throw std::runtime_error(error_context + ": " + e.what());
    }
  }
  EmpiricalSummary total;
  for (const auto& s : partial) total.merge(s);
  total.finalize();
  return total;
}

/// Half the L1 distance between the empirical pmf and `ref` (ref[s] is the
/// mass at s). Reference mass missing from `ref` (1 - sum) counts as
/// disagreement.
double tv_distance(const EmpiricalSummary& emp, std::span<const double> ref);
double tv_distance(const std::map<std::int64_t, double>& p,
                   const std::map<std::int64_t, double>& q);

/// Kolmogorov-Smirnov distance of a sorted sample to N(0, 1), taking both
/// one-sided gaps at every distinct value. Requires at least 100 values.
double ks_distance_to_normal(std::span<const double> sorted);

struct Band {
  double lo;
  double hi;
  bool contains(double p) const { return lo <= p && p <= hi; }
};

/// p_hat +- k sqrt(p_hat (1 - p_hat) / M) clipped to [0, 1]. At p_hat = 0
/// (or 1) the band is [0, 3/M] (or [1 - 3/M, 1]).
Band binomial_band(double p_hat, std::int64_t M, double k_sigma);

}  // namespace ri1d
