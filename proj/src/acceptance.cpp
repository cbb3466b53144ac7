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

#include "ri1d/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>

#include "ri1d/capacity.hpp"
#include "ri1d/interlacements.hpp"
#include "ri1d/numeric.hpp"
#include "ri1d/ring_kernel.hpp"
#include "ri1d/tolerances.hpp"
#include "ri1d/walks.hpp"

namespace ri1d {
namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string kv(const char* key, double v) { return std::string(key) + "=" + fmt(v); }

std::string join(std::initializer_list<std::string> parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += ' ';
    out += p;
  }
  return out;
}

// |p_hat - p| against k binomial standard deviations of the exact p.
Verdict frequency_verdict(std::string label, const EmpiricalSummary& s, double p,
                          std::string context) {
  const double p_hat = s.frequency(1);
  const double sigma = std::sqrt(p * (1.0 - p) / static_cast<double>(s.count));
  return make_verdict(std::move(label), std::fabs(p_hat - p), tol::kSigmaBand * sigma,
                      join({std::move(context), kv("p_hat", p_hat), kv("p", p)}));
}

}  // namespace

Verdict check_vacant_window(double alpha, std::int64_t half_width, std::int64_t lo,
                            std::int64_t hi, std::int64_t samples, const RunOptions& run) {
  const Level level(alpha);
  const IntervalSet set(lo, hi);
  if (lo < -half_width || hi > half_width) {
    throw DomainError("check_vacant_window: interval must lie in the window");
  }
  const auto s = run_replicates(
      [&](Rng& rng) { return sample_window(level, half_width, rng).vacant(lo, hi); }, samples,
      run.replicate());
  return frequency_verdict("vacant frequency", s, vacant_prob_exact(set, level),
                           join({kv("alpha", alpha), kv("L", static_cast<double>(half_width)),
                                 kv("M", static_cast<double>(samples))}));
}

Verdict check_local_time_tv(double alpha, std::int64_t x, std::int64_t samples,
                            double threshold, const RunOptions& run) {
  const Level level(alpha);
  const LocalTimeLaw law = local_time_pmf(x, level);
  const auto s = run_replicates([&](Rng& rng) { return sample_local_time(x, level, rng); },
                                samples, run.replicate());
  return make_verdict("tv sampler", tv_distance(s, law.pmf), threshold,
                      join({kv("alpha", alpha), kv("x", static_cast<double>(x)),
                            kv("M", static_cast<double>(samples))}));
}

Verdict check_window_local_time_tv(double alpha, std::int64_t x, std::int64_t half_width,
                                   std::int64_t samples, double threshold,
                                   const RunOptions& run) {
  const Level level(alpha);
  const LocalTimeLaw law = local_time_pmf(x, level);
  const auto s = run_replicates(
      [&](Rng& rng) { return sample_window(level, half_width, rng).visits_at(x); }, samples,
      run.replicate());
  return make_verdict("tv window", tv_distance(s, law.pmf), threshold,
                      join({kv("alpha", alpha), kv("x", static_cast<double>(x)),
                            kv("L", static_cast<double>(half_width)),
                            kv("M", static_cast<double>(samples))}));
}

std::vector<Verdict> check_local_time_moments(double alpha, std::int64_t x,
                                              std::int64_t samples, double mean_tol,
                                              double var_tol, const RunOptions& run) {
  const Level level(alpha);
  const auto s = run_replicates([&](Rng& rng) { return sample_local_time(x, level, rng); },
                                samples, run.replicate());
  const double mean = local_time_mean(x, level);
  const double var = local_time_variance(x, level);
  const std::string ctx = join({kv("alpha", alpha), kv("x", static_cast<double>(x)),
                                kv("M", static_cast<double>(samples))});
  return {make_verdict("mean rel", std::fabs(s.mean / mean - 1.0), mean_tol,
                       join({ctx, kv("mean", s.mean), kv("expected", mean)})),
          make_verdict("var rel", std::fabs(s.variance() / var - 1.0), var_tol,
                       join({ctx, kv("var", s.variance()), kv("expected", var)}))};
}

Verdict check_clt(double alpha, std::int64_t x, std::int64_t samples, double threshold,
                  const RunOptions& run) {
  const Level level(alpha);
  const auto s = run_replicates(
      [&](Rng& rng) {
        return standardize_local_time(static_cast<double>(sample_local_time(x, level, rng)), x,
                                      level);
      },
      samples, run.replicate(true));
  return make_verdict("ks", ks_distance_to_normal(s.values), threshold,
                      join({kv("alpha", alpha), kv("x", static_cast<double>(x)),
                            kv("M", static_cast<double>(samples))}));
}

Verdict check_kernel_oracle(std::int64_t n_lo, std::int64_t n_hi, std::int64_t t_max,
                            double threshold) {
  double worst = 0.0;
  std::string where;
  for (std::int64_t n = n_lo; n <= n_hi; ++n) {
    const SurvivalKernel dp = SurvivalKernel::dp_table(n, t_max);
    for (std::int64_t x = 1; x < n; ++x) {
      for (std::int64_t t = 0; t <= t_max; ++t) {
        const double exact = dp.log_h(x, t);
        const double spectral = log_h_spectral(n, x, t);
        const double dev = std::isnan(spectral) ? std::numeric_limits<double>::infinity()
                                                : std::fabs(std::expm1(spectral - exact));
        if (!(dev <= worst)) {
          worst = dev;
          where = join({kv("n", static_cast<double>(n)), kv("x", static_cast<double>(x)),
                        kv("t", static_cast<double>(t))});
        }
      }
    }
  }
  return make_verdict("max rel dev", worst, threshold, "worst at " + where);
}

std::vector<Verdict> check_asymptotic_h(const std::vector<std::int64_t>& ns) {
  std::vector<Verdict> out;
  std::vector<double> devs;
  for (std::int64_t n : ns) {
    const std::int64_t t = regime_horizon(n);
    const std::int64_t x = n / 2;
    const double log_ratio = log_h(n, x, t) - std::log(h_asymptotic(n, x, t).value);
    const double dev = std::fabs(std::expm1(log_ratio));
    devs.push_back(dev);
    const double nd = static_cast<double>(n);
    out.push_back(make_verdict("n=" + std::to_string(n) + " |h/T1-1|", dev,
                               tol::kFirstModeScale / (nd * nd),
                               join({kv("t", static_cast<double>(t)),
                                     kv("x", static_cast<double>(x))})));
  }
  if (devs.size() >= 2) {
    double worst = 0.0;
    for (std::size_t i = 1; i < devs.size(); ++i) worst = std::max(worst, devs[i] / devs[i - 1]);
    out.push_back(make_verdict("decrease ratio", worst, std::nextafter(1.0, 0.0),
                               "max successive ratio of deviations"));
  }
  return out;
}

std::vector<Verdict> check_ring_vacancy(std::int64_t n, double alpha, std::int64_t x0,
                                        std::int64_t a, std::int64_t b,
                                        std::int64_t samples, double rel_tol,
                                        const RunOptions& run) {
  const std::int64_t t = ring_time_scale(n, alpha);
  const double exact = vacant_prob_ring_exact(n, t, x0, a, b);
  const double limit = std::exp(-alpha * static_cast<double>(a + b) / 2.0);
  const std::string ctx =
      join({kv("n", static_cast<double>(n)), kv("t", static_cast<double>(t)),
            kv("x0", static_cast<double>(x0)), kv("a", static_cast<double>(a)),
            kv("b", static_cast<double>(b))});
  std::vector<Verdict> out;
  out.push_back(make_verdict("exact vs limit rel", std::fabs(exact / limit - 1.0), rel_tol,
                             join({ctx, kv("exact", exact), kv("limit", limit)})));
  if (samples > 0) {
    const RingConfig cfg{n, t, x0, alpha};
    const SurvivalKernel kernel = SurvivalKernel::dp_table(n, t);
    const auto s = run_replicates(
        [&](Rng& rng) {
          const RingTrace tr = sample_ring_trace(cfg, kernel, 0, rng);
          return tr.min_site > b && tr.max_site < n - a;
        },
        samples, run.replicate());
    out.push_back(frequency_verdict("mc vs exact", s, exact,
                                    join({ctx, kv("M", static_cast<double>(samples))})));
  }
  return out;
}

Verdict check_ring_local_time(std::int64_t n_half, double alpha, std::int64_t x,
                              std::int64_t samples, double threshold, const RunOptions& run) {
  const RingLocalTimeSampler sampler(n_half, alpha, x);
  const LocalTimeLaw law = local_time_pmf(x, Level(alpha));
  const auto s = run_replicates([&](Rng& rng) { return sampler.sample(rng); }, samples,
                                run.replicate());
  return make_verdict("tv ring", tv_distance(s, law.pmf), threshold,
                      join({kv("n", static_cast<double>(n_half)),
                            kv("t", static_cast<double>(sampler.config().t_total)),
                            kv("x", static_cast<double>(x)),
                            kv("M", static_cast<double>(samples))}));
}

std::vector<Verdict> check_pi4(std::int64_t n, const std::vector<std::int64_t>& starts) {
  const std::int64_t delta = regime_horizon(n);
  const double nd = static_cast<double>(n);
  std::vector<Verdict> out;
  for (std::int64_t a : starts) {
    const Pi4Result r = verify_pi4(n, delta, a);
    out.push_back(make_verdict("a=" + std::to_string(a), std::fabs(r.value / (kPi / 4.0) - 1.0),
                               tol::kPi4Scale / (nd * nd),
                               join({kv("n", nd), kv("delta", static_cast<double>(delta)),
                                     kv("E", r.value)})));
  }
  return out;
}

Verdict check_no_hit(std::int64_t n_half, std::int64_t x) {
  const std::int64_t delta = regime_horizon(2 * n_half);
  const std::int64_t t = 2 * delta;
  const NoHitResult r = no_hit_prob_exact(n_half, t, delta, x);
  return make_verdict("x=" + std::to_string(x) + " ratio dev",
                      std::fabs(r.exact / r.asymptotic - 1.0),
                      tol::kNoHitScale / static_cast<double>(n_half),
                      join({kv("n", static_cast<double>(n_half)),
                            kv("t", static_cast<double>(t)),
                            kv("delta", static_cast<double>(delta)), kv("exact", r.exact),
                            kv("asymptotic", r.asymptotic)}));
}

std::vector<Verdict> check_mid_tail(std::int64_t n_half) {
  const std::int64_t horizon = regime_horizon(2 * n_half);
  const double slack = 1.0 + tol::kMidTailScale / static_cast<double>(n_half);
  std::vector<Verdict> out;
  for (std::int64_t x : {std::int64_t{2}, n_half / 2, n_half - 1}) {
    for (std::int64_t delta : {horizon, 2 * horizon}) {
      const MidTailResult r = mid_tail_check(n_half, delta + horizon, delta, x);
      out.push_back(make_verdict(
          "x=" + std::to_string(x) + ",d=" + std::to_string(delta) + " exact/bound",
          r.exact / r.bound, slack, join({kv("exact", r.exact), kv("bound", r.bound)})));
    }
  }
  return out;
}

Verdict check_path_counts(std::int64_t delta_max, std::int64_t x_max) {
  std::int64_t mismatches = 0;
  std::int64_t compared = 0;
  for (std::int64_t delta = 0; delta <= delta_max; ++delta) {
    for (std::int64_t x = 1; x <= x_max; ++x) {
      for (std::int64_t k = 1; k <= x + delta + 1; ++k) {
        ++compared;
        if (count_paths(x, delta, k) != enumerate_paths(x, delta, k)) ++mismatches;
      }
    }
  }
  return make_verdict("count mismatches", static_cast<double>(mismatches), 0.0,
                      kv("compared", static_cast<double>(compared)));
}

Verdict check_endpoint(std::int64_t x, std::int64_t delta, std::int64_t y, double rel_tol) {
  const EndpointProb p = endpoint_leq_prob(x, delta, y);
  return make_verdict("endpoint rel", std::fabs(p.exact / p.asymptotic - 1.0), rel_tol,
                      join({kv("x", static_cast<double>(x)),
                            kv("delta", static_cast<double>(delta)),
                            kv("y", static_cast<double>(y)), kv("exact", p.exact),
                            kv("asymptotic", p.asymptotic)}));
}

std::vector<Verdict> check_exact_identities(std::int64_t x_max_martingale,
                                            std::int64_t x_max_first_step) {
  double worst_mart = 0.0;
  for (std::int64_t x = 2; x <= x_max_martingale; ++x) {
    worst_mart = std::max(worst_mart, martingale_defect(x) * static_cast<double>(x));
  }
  // The complement of hit_prob(y, x) is taken as (y - x) / y; forming
  // 1 - x/y in floating point would lose digits for large y.
  double worst_escape = 0.0;
  for (std::int64_t x = 1; x <= x_max_first_step; ++x) {
    const double miss = 1.0 / static_cast<double>(x + 1);
    const double e = escape_prob(x);
    worst_escape = std::max(worst_escape, std::fabs(step_up_prob(x) * miss - e) / e);
  }
  double worst_hit = 0.0;
  double worst_before = 0.0;
  for (std::int64_t x = 1; x <= 100; ++x) {
    for (std::int64_t y = x + 1; y <= x + 100; ++y) {
      const double h = hit_prob(y, x);
      const double step = step_up_prob(y) * hit_prob(y + 1, x) +
                          step_down_prob(y) * hit_prob(y - 1, x);
      worst_hit = std::max(worst_hit, std::fabs(step - h) / h);
    }
  }
  for (std::int64_t x = 2; x <= 20; ++x) {
    for (std::int64_t big_n = x + 2; big_n <= x + 40; ++big_n) {
      auto hb = [&](std::int64_t y) {
        if (y == x) return 1.0;
        if (y == big_n) return 0.0;
        return hit_before_prob(y, x, big_n);
      };
      for (std::int64_t y = x + 1; y < big_n; ++y) {
        const double step = step_up_prob(y) * hb(y + 1) + step_down_prob(y) * hb(y - 1);
        worst_before = std::max(worst_before, std::fabs(step - hb(y)) / hb(y));
      }
    }
  }
  constexpr double kIdentityTol = 1e-14;
  return {
      make_verdict("martingale defect*x", worst_mart, kIdentityTol,
                   kv("x_max", static_cast<double>(x_max_martingale))),
      make_verdict("escape first step", worst_escape, kIdentityTol,
                   kv("x_max", static_cast<double>(x_max_first_step))),
      make_verdict("hit first step", worst_hit, kIdentityTol, "x<=100, y<=x+100"),
      make_verdict("hit-before first step", worst_before, kIdentityTol, "x<=20, N<=x+40"),
  };
}

std::vector<Verdict> check_hitting_mc(std::int64_t samples, const RunOptions& run) {
  std::vector<Verdict> out;
  const auto ms = kv("M", static_cast<double>(samples));
  {
    const auto s = run_replicates(
        [](Rng& rng) { return sample_hits_lower_first(5, 2, 12, rng); }, samples,
        run.replicate());
    out.push_back(frequency_verdict("hit before (y=5,x=2,N=12)", s, hit_before_prob(5, 2, 12), ms));
  }
  constexpr std::int64_t kFiniteN = 100;
  constexpr std::int64_t kFarN = 1'000'000'000;
  constexpr double kLimitTol = 1e-8;
  {
    const auto s = run_replicates(
        [](Rng& rng) { return sample_hits_lower_first(4, 2, kFiniteN, rng); }, samples,
        run.replicate());
    out.push_back(frequency_verdict("hit (y=4,x=2,N=100)", s, hit_before_prob(4, 2, kFiniteN), ms));
    out.push_back(make_verdict("hit limit", std::fabs(hit_before_prob(4, 2, kFarN) - hit_prob(4, 2)),
                               kLimitTol, "N=1e9"));
  }
  {
    auto escape_within = [](std::int64_t x, std::int64_t big_n) {
      return step_up_prob(x) * (1.0 - hit_before_prob(x + 1, x, big_n));
    };
    const auto s = run_replicates(
        [](Rng& rng) { return sample_escapes_to(5, kFiniteN, rng); }, samples, run.replicate());
    out.push_back(frequency_verdict("escape (x=5,N=100)", s, escape_within(5, kFiniteN), ms));
    out.push_back(make_verdict("escape limit", std::fabs(escape_within(5, kFarN) - escape_prob(5)),
                               kLimitTol, "N=1e9"));
  }
  return out;
}

bool CriterionResult::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Verdict& v) { return v.pass; });
}

std::vector<CriterionResult> run_acceptance(
    const RunOptions& run, const std::vector<int>& only,
    const std::function<void(const CriterionResult&)>& report) {
  struct Criterion {
    int id;
    const char* title;
    double time_limit;
    std::function<std::vector<Verdict>()> body;
  };
  const std::vector<Criterion> criteria = {
      {1, "vacant-set law", 10,
       [&] { return std::vector<Verdict>{check_vacant_window(1.0, 8, 0, 2, 100'000, run)}; }},
      {2, "local-time law", 60,
       [&] {
         return std::vector<Verdict>{check_local_time_tv(1.0, 3, 1'000'000, 0.005, run),
                                     check_window_local_time_tv(1.0, 3, 8, 100'000, 0.01, run)};
       }},
      {3, "local-time moments", 30,
       [&] { return check_local_time_moments(1.0, 5, 1'000'000, 0.005, 0.02, run); }},
      {4, "local-time CLT", 60,
       [&] { return std::vector<Verdict>{check_clt(1.0, 400, 100'000, 0.02, run)}; }},
      {5, "kernel oracle equivalence", 10,
       [&] {
         return std::vector<Verdict>{check_kernel_oracle(3, 24, 200, tol::kKernelRelative)};
       }},
      {6, "first-mode regime", 10, [&] { return check_asymptotic_h({32, 64, 128}); }},
      {7, "ring vacancy", 120,
       [&] { return check_ring_vacancy(40, 1.0, 20, 1, 2, 20'000, 0.03, run); }},
      {8, "ring local time", 300,
       [&] { return std::vector<Verdict>{check_ring_local_time(24, 1.0, 2, 20'000, 0.05, run)}; }},
      {9, "sine average", 30, [&] { return check_pi4(200, {1, 50, 100}); }},
      {10, "no-hit probability", 60, [&] { return std::vector<Verdict>{check_no_hit(60, 1)}; }},
      {11, "mid-interval tail", 30, [&] { return check_mid_tail(40); }},
      {12, "path counting and endpoint law", 30,
       [&] {
         return std::vector<Verdict>{check_path_counts(14, 6), check_endpoint(2, 10'000, 10, 0.02)};
       }},
      {13, "exact identities", 30,
       [&] {
         auto v = check_exact_identities(1'000'000, 10'000);
         auto mc = check_hitting_mc(100'000, run);
         v.insert(v.end(), mc.begin(), mc.end());
         return v;
       }},
  };
  std::vector<CriterionResult> results;
  for (const auto& c : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
    CriterionResult r;
    r.id = c.id;
    r.title = c.title;
    r.time_limit = c.time_limit;
    const auto start = std::chrono::steady_clock::now();
    try {
      r.checks = c.body();
    } catch (const std::exception& e) {
      r.checks.push_back(Verdict{"error", std::numeric_limits<double>::quiet_NaN(), 0.0, false,
                                 e.what()});
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    r.checks.push_back(make_verdict("runtime s", r.seconds, r.time_limit));
    if (report) report(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_criterion(const CriterionResult& result) {
  char head[96];
  std::snprintf(head, sizeof head, "%s %2d %-32s", result.pass() ? "PASS" : "FAIL", result.id,
                result.title.c_str());
  std::string line = head;
  for (const auto& v : result.checks) {
    line += " | " + v.label + " " + fmt(v.statistic) + (v.pass ? " <= " : " > ") +
            fmt(v.threshold);
  }
  return line;
}

}  // namespace ri1d
