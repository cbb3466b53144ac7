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

#include "ri1d/ring_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "ri1d/errors.hpp"
#include "ri1d/numeric.hpp"
#include "ri1d/tolerances.hpp"

namespace ri1d {
namespace {

void require_ring(std::int64_t n, const char* op) {
  if (n < 2) throw DomainError(std::string(op) + ": ring size must be >= 2");
}

void require_site_time(std::int64_t n, std::int64_t x, std::int64_t t, const char* op) {
  require_ring(n, op);
  if (x < 0 || x > n) throw DomainError(std::string(op) + ": requires 0 <= x <= n");
  if (t < 0) throw DomainError(std::string(op) + ": requires t >= 0");
}

// One step of the walk killed at both ends of {0..n}; used both forwards
// (distributions) and backwards (survival functions) since the kernel is
// symmetric. Returns the maximum of the new vector.
void killed_step(std::vector<double>& v, std::vector<double>& scratch) {
  const std::size_t last = v.size() - 1;
  scratch[0] = 0.0;
  scratch[last] = 0.0;
  for (std::size_t y = 1; y < last; ++y) scratch[y] = 0.5 * (v[y - 1] + v[y + 1]);
  v.swap(scratch);
}

double max_of(const std::vector<double>& v) { return *std::max_element(v.begin(), v.end()); }
double sum_of(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

// Normalises v by its maximum and returns the log of the factor removed.
double renormalise_max(std::vector<double>& v) {
  const double m = max_of(v);
  if (m <= 0.0) throw DomainError("survival vector vanished");
  for (double& e : v) e /= m;
  return std::log(m);
}

double renormalise_sum(std::vector<double>& v) {
  const double s = sum_of(v);
  if (s <= 0.0) throw DomainError("distribution vanished");
  for (double& e : v) e /= s;
  return std::log(s);
}

std::vector<double> survival_start(std::int64_t n) {
  std::vector<double> v(static_cast<std::size_t>(n + 1), 1.0);
  v.front() = 0.0;
  v.back() = 0.0;
  return v;
}

// Killed forward propagation from a point mass, `steps` steps, with the
// given sites absorbing in addition to the ends. Returns the conditional
// distribution and the log survival probability.
struct KilledDistribution {
  std::vector<double> dist;
  double log_mass = 0.0;
};

KilledDistribution propagate_killed(std::int64_t n, std::int64_t start, std::int64_t steps,
                                    std::int64_t lower_wall, std::int64_t upper_wall) {
  // Sites <= lower_wall and >= upper_wall absorb.
  KilledDistribution out;
  out.dist.assign(static_cast<std::size_t>(n + 1), 0.0);
  std::vector<double> scratch(out.dist.size(), 0.0);
  out.dist[static_cast<std::size_t>(start)] = 1.0;
  for (std::int64_t i = 0; i < steps; ++i) {
    killed_step(out.dist, scratch);
    for (std::int64_t y = 0; y <= lower_wall; ++y) out.dist[static_cast<std::size_t>(y)] = 0.0;
    for (std::int64_t y = upper_wall; y <= n; ++y) out.dist[static_cast<std::size_t>(y)] = 0.0;
    out.log_mass += renormalise_sum(out.dist);
  }
  return out;
}

// Reduced angle pi * (m mod 2n) / n for m = x (2j - 1).
double mode_angle(std::int64_t n, std::int64_t x, std::int64_t odd) {
  const std::int64_t m = (x * odd) % (2 * n);
  return kPi * static_cast<double>(m) / static_cast<double>(n);
}

struct SignedLog {
  double log_abs;
  int sign;
};

SignedLog signed_log_sum(const std::vector<SignedLog>& terms) {
  double top = kNegInf;
  for (const auto& t : terms) top = std::max(top, t.log_abs);
  if (top == kNegInf) return {kNegInf, 0};
  double sum = 0.0;
  for (const auto& t : terms) {
    if (t.sign != 0) sum += t.sign * std::exp(t.log_abs - top);
  }
  if (sum == 0.0) return {kNegInf, 0};
  return {top + std::log(std::fabs(sum)), sum > 0.0 ? 1 : -1};
}

SignedLog spectral_sum(std::int64_t n, std::int64_t x, std::int64_t t) {
  std::vector<SignedLog> terms;
  terms.reserve(static_cast<std::size_t>(n / 2));
  const double nd = static_cast<double>(n);
  for (std::int64_t j = 1; j <= n / 2; ++j) {
    const std::int64_t odd = 2 * j - 1;
    const double theta = kPi * static_cast<double>(odd) / nd;
    const double c = std::cos(theta);
    const double s = std::sin(mode_angle(n, x, odd));
    if (s == 0.0 || (c == 0.0 && t > 0)) continue;
    int sign = s > 0.0 ? 1 : -1;
    if (c < 0.0 && (t % 2) == 1) sign = -sign;
    const double log_cos = t == 0 ? 0.0 : static_cast<double>(t) * std::log(std::fabs(c));
    const double log_cot = -std::log(std::tan(theta / 2.0));
    terms.push_back({log_cos + log_cot + std::log(std::fabs(s)), sign});
  }
  SignedLog total = signed_log_sum(terms);
  if (total.sign != 0) total.log_abs += std::log(2.0 / nd);
  return total;
}

}  // namespace

std::int64_t regime_horizon(std::int64_t n) {
  require_ring(n, "regime_horizon");
  const double nd = static_cast<double>(n);
  return static_cast<std::int64_t>(std::ceil(4.0 / (kPi * kPi) * nd * nd * std::log(nd)));
}

bool in_regime(std::int64_t n, std::int64_t t) { return t >= regime_horizon(n); }

double log_h_dp(std::int64_t n, std::int64_t x, std::int64_t t) {
  require_site_time(n, x, t, "h_dp");
  if (x == 0 || x == n) return kNegInf;
  std::vector<double> v = survival_start(n);
  std::vector<double> scratch(v.size());
  double log_scale = 0.0;
  for (std::int64_t i = 0; i < t; ++i) {
    killed_step(v, scratch);
    log_scale += renormalise_max(v);
  }
  return std::log(v[static_cast<std::size_t>(x)]) + log_scale;
}

double h_dp(std::int64_t n, std::int64_t x, std::int64_t t) {
  return std::exp(log_h_dp(n, x, t));
}

double SurvivalProfile::log_at(std::int64_t x) const {
  const double v = values.at(static_cast<std::size_t>(x));
  return v > 0.0 ? std::log(v) + log_scale : kNegInf;
}

std::vector<SurvivalProfile> survival_profiles(std::int64_t n,
                                               std::span<const std::int64_t> horizons) {
  require_ring(n, "survival_profiles");
  std::vector<std::size_t> order(horizons.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return horizons[a] < horizons[b]; });
  std::vector<SurvivalProfile> out(horizons.size());
  std::vector<double> v = survival_start(n);
  std::vector<double> scratch(v.size());
  double log_scale = 0.0;
  std::int64_t t = 0;
  for (std::size_t idx : order) {
    if (horizons[idx] < 0) throw DomainError("survival_profiles: negative horizon");
    for (; t < horizons[idx]; ++t) {
      killed_step(v, scratch);
      log_scale += renormalise_max(v);
    }
    out[idx] = SurvivalProfile{v, log_scale};
  }
  return out;
}

SpectralValue h_spectral(std::int64_t n, std::int64_t x, std::int64_t t) {
  require_site_time(n, x, t, "h_spectral");
  const SignedLog s = spectral_sum(n, x, t);
  const double raw = s.sign == 0 ? 0.0 : s.sign * std::exp(s.log_abs);
  return {std::clamp(raw, 0.0, 1.0), raw};
}

double log_h_spectral(std::int64_t n, std::int64_t x, std::int64_t t) {
  require_site_time(n, x, t, "h_spectral");
  const SignedLog s = spectral_sum(n, x, t);
  if (s.sign <= 0) return std::nan("");
  return s.log_abs;
}

AsymptoticValue h_asymptotic(std::int64_t n, std::int64_t x, std::int64_t t) {
  require_site_time(n, x, t, "h_asymptotic");
  const double nd = static_cast<double>(n);
  const double log_value = std::log(4.0 / kPi) +
                           static_cast<double>(t) * std::log(std::cos(kPi / nd)) +
                           std::log(std::sin(kPi * static_cast<double>(x) / nd));
  return {x == 0 || x == n ? 0.0 : std::exp(log_value), in_regime(n, t)};
}

double log_h(std::int64_t n, std::int64_t x, std::int64_t t) {
  require_site_time(n, x, t, "log_h");
  if (x == 0 || x == n) return kNegInf;
  // The recursion costs n t; the spectral sum n/2 per point and is
  // accurate once h is not tiny relative to the individual modes.
  if (static_cast<double>(n) * static_cast<double>(t) <= 2e8) return log_h_dp(n, x, t);
  return log_h_spectral(n, x, t);
}

double ruin_time_pmf(std::int64_t n, std::int64_t x, std::int64_t k) {
  require_site_time(n, x, k, "ruin_time_pmf");
  if (k < 1 || x == 0 || x == n) return 0.0;
  const double nd = static_cast<double>(n);
  double sum = 0.0;
  for (std::int64_t j = 1; j < n; ++j) {
    const double theta = kPi * static_cast<double>(j) / nd;
    sum += std::pow(std::cos(theta), static_cast<double>(k - 1)) * std::sin(theta) *
           std::sin(kPi * static_cast<double>((x * j) % (2 * n)) / nd);
  }
  return sum / nd;
}

double absorption_time_pmf(std::int64_t n, std::int64_t x, std::int64_t k) {
  require_site_time(n, x, k, "absorption_time_pmf");
  if (k < 1 || x == 0 || x == n) return 0.0;
  const double nd = static_cast<double>(n);
  double sum = 0.0;
  for (std::int64_t j = 1; j <= n / 2; ++j) {
    const std::int64_t odd = 2 * j - 1;
    const double theta = kPi * static_cast<double>(odd) / nd;
    sum += std::pow(std::cos(theta), static_cast<double>(k - 1)) * std::sin(theta) *
           std::sin(mode_angle(n, x, odd));
  }
  return 2.0 * sum / nd;
}

// ---------------------------------------------------------------------------
// SurvivalKernel

SurvivalKernel SurvivalKernel::dp_table(std::int64_t n, std::int64_t horizon) {
  require_ring(n, "SurvivalKernel");
  if (horizon < 0) throw DomainError("SurvivalKernel: horizon must be >= 0");
  if ((n + 1) * (horizon + 1) > kMaxKernelTableEntries) {
    throw ConfigError("SurvivalKernel: table of " + std::to_string((n + 1) * (horizon + 1)) +
                      " entries exceeds the limit; use the spectral backend");
  }
  SurvivalKernel k(KernelBackend::kDpTable, n, horizon);
  const auto width = static_cast<std::size_t>(n + 1);
  k.table_.resize(width * static_cast<std::size_t>(horizon + 1));
  k.log_scale_.assign(static_cast<std::size_t>(horizon + 1), 0.0);
  k.growth_.assign(static_cast<std::size_t>(horizon + 1), 1.0);
  std::vector<double> v = survival_start(n);
  std::vector<double> scratch(v.size());
  std::copy(v.begin(), v.end(), k.table_.begin());
  for (std::int64_t t = 1; t <= horizon; ++t) {
    killed_step(v, scratch);
    const double log_m = renormalise_max(v);
    k.log_scale_[static_cast<std::size_t>(t)] = k.log_scale_[static_cast<std::size_t>(t - 1)] + log_m;
    k.growth_[static_cast<std::size_t>(t)] = std::exp(-log_m);
    std::copy(v.begin(), v.end(), k.table_.begin() + static_cast<std::ptrdiff_t>(width * static_cast<std::size_t>(t)));
  }
  return k;
}

SurvivalKernel SurvivalKernel::spectral(std::int64_t n) {
  require_ring(n, "SurvivalKernel");
  return SurvivalKernel(KernelBackend::kSpectral, n, std::numeric_limits<std::int64_t>::max());
}

SurvivalKernel SurvivalKernel::asymptotic(std::int64_t n) {
  require_ring(n, "SurvivalKernel");
  return SurvivalKernel(KernelBackend::kAsymptotic, n, std::numeric_limits<std::int64_t>::max());
}

void SurvivalKernel::check(std::int64_t x, std::int64_t t) const {
  require_site_time(n_, x, t, "SurvivalKernel");
  if (t > horizon_) {
    throw ConfigError("SurvivalKernel: t = " + std::to_string(t) + " beyond horizon " +
                      std::to_string(horizon_));
  }
}

double SurvivalKernel::log_h(std::int64_t x, std::int64_t t) const {
  check(x, t);
  if (x == 0 || x == n_) return kNegInf;
  switch (backend_) {
    case KernelBackend::kDpTable:
      return std::log(row(t)[x]) + log_scale_[static_cast<std::size_t>(t)];
    case KernelBackend::kSpectral:
      return log_h_spectral(n_, x, t);
    case KernelBackend::kAsymptotic:
      return std::log(h_asymptotic(n_, x, t).value);
  }
  return kNegInf;
}

double SurvivalKernel::h(std::int64_t x, std::int64_t t) const {
  if (backend_ == KernelBackend::kSpectral) {
    check(x, t);
    return h_spectral(n_, x, t).value;
  }
  return std::exp(log_h(x, t));
}

double SurvivalKernel::step_up_prob(std::int64_t x, std::int64_t s) const {
  if (x <= 0 || x >= n_) throw DomainError("ring_step_up_prob: requires 0 < x < n");
  if (s < 1) throw DomainError("ring_step_up_prob: requires s >= 1");
  check(x, s);
  if (backend_ == KernelBackend::kDpTable) {
    const double here = row(s)[x];
    if (here <= 0.0) throw DomainError("ring_step_up_prob: h(x, s) = 0");
    return row(s - 1)[x + 1] * growth_[static_cast<std::size_t>(s)] / (2.0 * here);
  }
  const double log_here = log_h(x, s);
  if (!(log_here > kNegInf)) throw DomainError("ring_step_up_prob: h(x, s) = 0");
  return 0.5 * std::exp(log_h(x + 1, s - 1) - log_here);
}

double SurvivalKernel::step_down_prob(std::int64_t x, std::int64_t s) const {
  if (x <= 0 || x >= n_) throw DomainError("ring_step_down_prob: requires 0 < x < n");
  if (s < 1) throw DomainError("ring_step_down_prob: requires s >= 1");
  check(x, s);
  if (backend_ == KernelBackend::kDpTable) {
    const double here = row(s)[x];
    if (here <= 0.0) throw DomainError("ring_step_down_prob: h(x, s) = 0");
    return row(s - 1)[x - 1] * growth_[static_cast<std::size_t>(s)] / (2.0 * here);
  }
  const double log_here = log_h(x, s);
  if (!(log_here > kNegInf)) throw DomainError("ring_step_down_prob: h(x, s) = 0");
  return 0.5 * std::exp(log_h(x - 1, s - 1) - log_here);
}

double ring_step_up_prob(const SurvivalKernel& kernel, std::int64_t x, std::int64_t s) {
  return kernel.step_up_prob(x, s);
}

double ring_step_down_prob(const SurvivalKernel& kernel, std::int64_t x, std::int64_t s) {
  return kernel.step_down_prob(x, s);
}

// ---------------------------------------------------------------------------
// Conditioned ring walk

void RingConfig::validate() const {
  if (n < 2) throw DomainError("RingConfig: ring size must be >= 2");
  if (!(0 < x0 && x0 < n)) throw DomainError("RingConfig: requires 0 < x0 < n");
  if (t_total < 0) throw DomainError("RingConfig: requires t_total >= 0");
  if (alpha && !(*alpha > 0.0)) throw DomainError("RingConfig: alpha must be > 0");
}

class RingWalker {
 public:
  RingWalker(const RingConfig& cfg, const SurvivalKernel& kernel) : kernel_(kernel) {
    cfg.validate();
    if (kernel.backend() != KernelBackend::kDpTable) {
      throw ConfigError("ring sampler: requires a dp_table kernel");
    }
    if (kernel.n() != cfg.n) throw ConfigError("ring sampler: kernel size mismatch");
    if (kernel.horizon() < cfg.t_total) {
      throw ConfigError("ring sampler: kernel horizon " + std::to_string(kernel.horizon()) +
                        " shorter than t_total " + std::to_string(cfg.t_total));
    }
  }

  // Next site from x with s >= 1 steps remaining.
  std::int64_t step(std::int64_t x, std::int64_t s, Rng& rng) const {
    const double* now = kernel_.row(s);
    const double* next = kernel_.row(s - 1);
    // u < h(x+1,s-1) / (2 h(x,s))
    const double threshold = next[x + 1] * kernel_.growth_[static_cast<std::size_t>(s)];
    return rng.uniform() * 2.0 * now[x] < threshold ? x + 1 : x - 1;
  }

 private:
  const SurvivalKernel& kernel_;
};

WalkPath sample_ring_path(const RingConfig& cfg, const SurvivalKernel& kernel, Rng& rng) {
  const RingWalker walker(cfg, kernel);
  WalkPath path;
  path.positions.reserve(static_cast<std::size_t>(cfg.t_total) + 1);
  std::int64_t x = cfg.x0;
  path.positions.push_back(x);
  for (std::int64_t s = cfg.t_total; s >= 1; --s) {
    x = walker.step(x, s, rng);
    path.positions.push_back(x);
  }
  return path;
}

RingTrace sample_ring_trace(const RingConfig& cfg, const SurvivalKernel& kernel,
                            std::int64_t count_site, Rng& rng) {
  const RingWalker walker(cfg, kernel);
  RingTrace trace{cfg.x0, cfg.x0, 0};
  std::int64_t x = cfg.x0;
  for (std::int64_t s = cfg.t_total; s >= 1; --s) {
    x = walker.step(x, s, rng);
    trace.min_site = std::min(trace.min_site, x);
    trace.max_site = std::max(trace.max_site, x);
    if (x == count_site) ++trace.visits;
  }
  return trace;
}

double log_ring_path_prob(const WalkPath& path, std::int64_t n, std::int64_t t,
                          const SurvivalKernel& kernel) {
  if (path.positions.empty()) throw DomainError("log_ring_path_prob: empty path");
  const std::int64_t m = path.steps();
  if (m > t) throw DomainError("log_ring_path_prob: path longer than the horizon");
  for (std::size_t i = 0; i < path.positions.size(); ++i) {
    const std::int64_t p = path.positions[i];
    if (i > 0 && std::llabs(p - path.positions[i - 1]) != 1) {
      throw DomainError("log_ring_path_prob: steps must be +-1");
    }
    if (p <= 0 || p >= n) return kNegInf;
  }
  return kernel.log_h(path.end(), t - m) - static_cast<double>(m) * std::log(2.0) -
         kernel.log_h(path.start(), t);
}

double vacant_prob_ring_exact(std::int64_t n, std::int64_t t, std::int64_t x0,
                              std::int64_t a, std::int64_t b) {
  if (a < 0 || b < 0 || a + b < 1) {
    throw DomainError("vacant_prob_ring_exact: requires a, b >= 0 and a + b >= 1");
  }
  if (!(b < x0 && x0 < n - a)) {
    throw DomainError("vacant_prob_ring_exact: requires b < x0 < n - a");
  }
  if (t < 0) throw DomainError("vacant_prob_ring_exact: requires t >= 0");
  if (t == 0) return 1.0;
  return std::exp(log_h(n - a - b, x0 - b, t) - log_h(n, x0, t));
}

std::int64_t ring_time_scale(std::int64_t n, double alpha) {
  require_ring(n, "ring_time_scale");
  if (!(alpha > 0.0)) throw DomainError("ring_time_scale: alpha must be > 0");
  const double nd = static_cast<double>(n);
  return static_cast<std::int64_t>(std::floor(alpha * nd * nd * nd / (2.0 * kPi * kPi)));
}

std::int64_t ring_local_time_horizon(std::int64_t n_half, double alpha) {
  if (n_half < 1) throw DomainError("ring_local_time_horizon: n must be >= 1");
  if (!(alpha > 0.0)) throw DomainError("ring_local_time_horizon: alpha must be > 0");
  const double nd = static_cast<double>(n_half);
  return static_cast<std::int64_t>(std::floor(4.0 * alpha * nd * nd * nd / (kPi * kPi)));
}

RingLocalTimeSampler::RingLocalTimeSampler(std::int64_t n_half, double alpha, std::int64_t x)
    : cfg_{2 * n_half, ring_local_time_horizon(n_half, alpha), n_half, alpha},
      site_(x),
      kernel_(SurvivalKernel::dp_table(2 * n_half, cfg_.t_total)) {
  cfg_.validate();
  if (!(0 < x && x < 2 * n_half)) {
    throw DomainError("ring_local_time_sample: requires 0 < x < 2n");
  }
}

std::int64_t RingLocalTimeSampler::sample(Rng& rng) const {
  return sample_ring_trace(cfg_, kernel_, site_, rng).visits;
}

std::int64_t ring_local_time_sample(std::int64_t n_half, double alpha, std::int64_t x,
                                    Rng& rng) {
  return RingLocalTimeSampler(n_half, alpha, x).sample(rng);
}

// ---------------------------------------------------------------------------
// Exact path functionals

Pi4Result verify_pi4(std::int64_t n, std::int64_t delta, std::int64_t a) {
  require_ring(n, "verify_pi4");
  if (!(1 <= a && a <= n - 1)) throw DomainError("verify_pi4: requires 1 <= a <= n-1");
  if (delta < 0) throw DomainError("verify_pi4: requires delta >= 0");
  const KilledDistribution kd = propagate_killed(n, a, delta, 0, n);
  double e = 0.0;
  for (std::int64_t y = 1; y < n; ++y) {
    e += kd.dist[static_cast<std::size_t>(y)] *
         std::sin(kPi * static_cast<double>(y) / static_cast<double>(n));
  }
  return {e, in_regime(n, delta)};
}

NoHitResult no_hit_prob_exact(std::int64_t n_half, std::int64_t t, std::int64_t delta,
                              std::int64_t x) {
  if (n_half < 2) throw DomainError("no_hit_prob_exact: requires n >= 2");
  if (!(0 < x && x < n_half)) throw DomainError("no_hit_prob_exact: requires 0 < x < n");
  if (!(0 <= delta && delta <= t)) throw DomainError("no_hit_prob_exact: requires 0 <= delta <= t");
  const std::int64_t ring = 2 * n_half;
  const double nd = static_cast<double>(n_half);
  NoHitResult out{};
  out.asymptotic = std::exp(-static_cast<double>(delta) * static_cast<double>(x) * kPi * kPi /
                            (8.0 * nd * nd * nd));
  out.in_regime = in_regime(ring, delta) && in_regime(ring, t - delta);
  if (delta == 0) {
    out.exact = 1.0;
    return out;
  }
  const KilledDistribution kd = propagate_killed(ring, n_half, delta, x, ring);
  const std::int64_t hz[] = {t - delta, t};
  const auto prof = survival_profiles(ring, hz);
  std::vector<double> log_terms;
  for (std::int64_t y = x + 1; y < ring; ++y) {
    const double p = kd.dist[static_cast<std::size_t>(y)];
    if (p > 0.0) log_terms.push_back(std::log(p) + prof[0].log_at(y));
  }
  out.exact = std::exp(kd.log_mass + log_sum_exp(log_terms) - prof[1].log_at(n_half));
  return out;
}

MidTailResult mid_tail_check(std::int64_t n_half, std::int64_t t, std::int64_t delta,
                             std::int64_t x) {
  if (n_half < 2) throw DomainError("mid_tail_check: requires n >= 2");
  if (!(0 < x && x < n_half)) throw DomainError("mid_tail_check: requires 0 < x < n");
  if (!(0 <= delta && delta <= t)) throw DomainError("mid_tail_check: requires 0 <= delta <= t");
  const std::int64_t ring = 2 * n_half;
  const double nd = static_cast<double>(n_half);
  MidTailResult out{};
  out.bound = 8.0 / kPi * std::cos(kPi * static_cast<double>(x) / (2.0 * nd)) *
              std::exp(-3.0 * kPi * kPi * static_cast<double>(delta) / (8.0 * nd * nd));
  out.in_regime = in_regime(ring, t) && in_regime(ring, delta) && in_regime(ring, t - delta);
  if (delta == 0) {
    out.exact = 1.0;
    return out;
  }
  const KilledDistribution kd = propagate_killed(ring, x, delta, 0, n_half);
  const std::int64_t hz[] = {t - delta, t};
  const auto prof = survival_profiles(ring, hz);
  std::vector<double> log_terms;
  for (std::int64_t y = 1; y < n_half; ++y) {
    const double p = kd.dist[static_cast<std::size_t>(y)];
    if (p > 0.0) log_terms.push_back(std::log(p) + prof[0].log_at(y));
  }
  out.exact = std::exp(kd.log_mass + log_sum_exp(log_terms) - prof[1].log_at(x));
  return out;
}

EndpointRingResult endpoint_small_prob_ring(std::int64_t n, std::int64_t t, std::int64_t x,
                                            std::int64_t delta, std::int64_t y) {
  require_ring(n, "endpoint_small_prob_ring");
  if (!(0 < x && x < n)) throw DomainError("endpoint_small_prob_ring: requires 0 < x < n");
  if (!(1 <= delta && delta <= t)) {
    throw DomainError("endpoint_small_prob_ring: requires 1 <= delta <= t");
  }
  if (y < 0) throw DomainError("endpoint_small_prob_ring: requires y >= 0");
  const double nd = static_cast<double>(n);
  const double dd = static_cast<double>(delta);
  const double yd = static_cast<double>(y);
  EndpointRingResult out{};
  out.asymptotic = std::sqrt(2.0 / kPi) * yd * yd * yd / (3.0 * std::pow(dd, 1.5));
  out.tolerance = tol::kEndpointScale * (dd / (nd * nd) + yd * yd / dd);
  out.in_regime = in_regime(n, t);
  if (y == 0) {
    out.exact = 0.0;
    return out;
  }
  const KilledDistribution kd = propagate_killed(n, x, delta, 0, n);
  std::vector<double> log_terms;
  const std::int64_t top = std::min(y, n - 1);
  if (static_cast<double>(n) * static_cast<double>(t) <= 2e8) {
    const std::int64_t hz[] = {t - delta, t};
    const auto prof = survival_profiles(n, hz);
    for (std::int64_t z = 1; z <= top; ++z) {
      const double p = kd.dist[static_cast<std::size_t>(z)];
      if (p > 0.0) log_terms.push_back(std::log(p) + prof[0].log_at(z));
    }
    out.exact = std::exp(kd.log_mass + log_sum_exp(log_terms) - prof[1].log_at(x));
  } else {
    for (std::int64_t z = 1; z <= top; ++z) {
      const double p = kd.dist[static_cast<std::size_t>(z)];
      if (p > 0.0) log_terms.push_back(std::log(p) + log_h_spectral(n, z, t - delta));
    }
    out.exact = std::exp(kd.log_mass + log_sum_exp(log_terms) - log_h_spectral(n, x, t));
  }
  return out;
}

}  // namespace ri1d
