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

#include "ri1d/interlacements.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ri1d/errors.hpp"
#include "ri1d/numeric.hpp"

namespace ri1d {
namespace {

void require_site(std::int64_t x, const char* op) {
  if (x < 1) throw DomainError(std::string(op) + ": site must be >= 1");
}

// Cumulant generating function of the local time, finite for
// theta < log(2x / (2x - 1)).
double local_time_cgf(double x, double alpha, double theta) {
  const double e = std::exp(theta);
  return alpha * x * x * (e - 1.0) / (2.0 * x - (2.0 * x - 1.0) * e);
}

double local_time_cgf_slope(double x, double alpha, double theta) {
  const double e = std::exp(theta);
  const double d = 2.0 * x - (2.0 * x - 1.0) * e;
  return alpha * x * x * e / (d * d);
}

}  // namespace

Level::Level(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw DomainError("Level: alpha must be a positive finite number");
  }
}

std::int64_t WindowSample::visits_at(std::int64_t site) const {
  if (site < -half_width || site > half_width) {
    throw DomainError("WindowSample: site outside the window");
  }
  return visits[static_cast<std::size_t>(site + half_width)];
}

bool WindowSample::vacant(std::int64_t lo, std::int64_t hi) const {
  if (lo > hi) throw DomainError("WindowSample::vacant: empty interval");
  return neg_edge < lo && hi < pos_edge;
}

double LocalTimeLaw::mean() const {
  double m = 0.0;
  for (std::size_t s = 0; s < pmf.size(); ++s) m += static_cast<double>(s) * pmf[s];
  return m;
}

double LocalTimeLaw::variance() const {
  const double m = mean();
  double v = 0.0;
  for (std::size_t s = 0; s < pmf.size(); ++s) {
    const double d = static_cast<double>(s) - m;
    v += d * d * pmf[s];
  }
  return v;
}

double vacant_prob_exact(const IntervalSet& a, const Level& level) {
  return std::exp(-level.alpha() * capacity_hat(a));
}

std::int64_t sample_trajectory_count(const IntervalSet& a, const Level& level,
                                     Rng& rng) {
  return rng.poisson(level.alpha() * capacity_hat(a));
}

WindowSample sample_window(const Level& level, std::int64_t half_width, Rng& rng) {
  if (half_width < 1) throw DomainError("sample_window: half-width must be >= 1");
  const std::int64_t L = half_width;
  WindowSample w;
  w.half_width = L;
  w.visits.assign(static_cast<std::size_t>(2 * L + 1), 0);
  w.trajectory_count = rng.poisson(level.alpha() * static_cast<double>(L));

  const double return_prob = static_cast<double>(L) / static_cast<double>(L + 1);
  for (std::int64_t i = 0; i < w.trajectory_count; ++i) {
    const std::int64_t sign = rng.bernoulli(0.5) ? 1 : -1;
    std::int64_t z = L;
    for (;;) {
      w.visits[static_cast<std::size_t>(sign * z + L)] += 1;
      const double u = rng.uniform();
      z = u * (2.0 * static_cast<double>(z)) < static_cast<double>(z + 1) ? z + 1 : z - 1;
      if (z == L + 1) {
        if (!rng.bernoulli(return_prob)) break;
        z = L;
      }
    }
  }

  w.pos_edge = L + 1;
  for (std::int64_t s = 1; s <= L; ++s) {
    if (w.visits[static_cast<std::size_t>(s + L)] > 0) {
      w.pos_edge = s;
      break;
    }
  }
  w.neg_edge = -L - 1;
  for (std::int64_t s = -1; s >= -L; --s) {
    if (w.visits[static_cast<std::size_t>(s + L)] > 0) {
      w.neg_edge = s;
      break;
    }
  }
  return w;
}

std::int64_t sample_local_time(std::int64_t x, const Level& level, Rng& rng) {
  require_site(x, "sample_local_time");
  const double xd = static_cast<double>(x);
  const std::int64_t n = rng.poisson(level.alpha() * xd / 2.0);
  const double p = 1.0 / (2.0 * xd);
  std::int64_t total = 0;
  for (std::int64_t k = 0; k < n; ++k) total += rng.geometric(p);
  return total;
}

std::int64_t local_time_chernoff_cutoff(std::int64_t x, const Level& level,
                                        double tail) {
  require_site(x, "local_time_chernoff_cutoff");
  const double xd = static_cast<double>(x);
  const double alpha = level.alpha();
  const double log_tail = std::log(tail);
  const double theta_max = std::log(2.0 * xd / (2.0 * xd - 1.0));

  // Optimised Chernoff exponent at level s: solve K'(theta) = s.
  auto exponent = [&](double s) {
    double lo = 0.0;
    double hi = theta_max;
    for (int it = 0; it < 200; ++it) {
      const double mid = 0.5 * (lo + hi);
      if (local_time_cgf_slope(xd, alpha, mid) < s) lo = mid;
      else hi = mid;
    }
    const double theta = lo;
    return local_time_cgf(xd, alpha, theta) - theta * s;
  };

  const double mean = alpha * xd * xd;
  double s = std::max(1.0, std::ceil(mean));
  if (exponent(s) < log_tail) return static_cast<std::int64_t>(s);
  double lo = s;
  double hi = 2.0 * s;
  while (exponent(hi) >= log_tail) {
    lo = hi;
    hi *= 2.0;
  }
  while (hi - lo > 1.0) {
    const double mid = std::floor(0.5 * (lo + hi));
    if (exponent(mid) < log_tail) hi = mid;
    else lo = mid;
  }
  return static_cast<std::int64_t>(hi);
}

LocalTimeLaw local_time_pmf(std::int64_t x, const Level& level,
                            std::optional<std::int64_t> s_max) {
  require_site(x, "local_time_pmf");
  const std::int64_t cutoff =
      s_max ? *s_max : local_time_chernoff_cutoff(x, level, kLocalTimeDefaultTail);
  if (cutoff < 0) throw DomainError("local_time_pmf: s_max must be >= 0");

  const double xd = static_cast<double>(x);
  const double lambda = level.alpha() * xd / 2.0;
  const double p = 1.0 / (2.0 * xd);
  const double q = 1.0 - p;

  // Compound Poisson recursion f(s) = (lambda/s) sum_j j g(j) f(s-j) with
  // g(j) = p q^(j-1). For geometric severities the convolution obeys
  //   B(s+1) = f(s) + q B(s),   A(s+1) = f(s) + q A(s) + q B(s),
  // where A(s) = sum_j j q^(j-1) f(s-j) and B(s) = sum_j q^(j-1) f(s-j),
  // so the whole pmf costs O(s_max). Values are carried relative to
  // f(0) = 1 and rescaled to avoid overflow.
  const auto size = static_cast<std::size_t>(cutoff) + 1;
  std::vector<double> rel(size, 0.0);
  std::vector<double> log_scale(size, 0.0);
  double scale = 0.0;  // log of the factor already divided out
  rel[0] = 1.0;
  double a = 0.0;
  double b = 0.0;
  for (std::size_t s = 1; s < size; ++s) {
    const double qb = q * b;
    b = rel[s - 1] + qb;
    a = rel[s - 1] + q * a + qb;
    rel[s] = lambda * p / static_cast<double>(s) * a;
    log_scale[s] = scale;
    if (rel[s] > 1e250) {
      const double shrink = 1e-250;
      rel[s] *= shrink;
      a *= shrink;
      b *= shrink;
      scale += std::log(1e250);
      log_scale[s] = scale;
    }
  }

  LocalTimeLaw law;
  law.x = x;
  law.alpha = level.alpha();
  law.pmf.resize(size);
  double total = 0.0;
  for (std::size_t s = 0; s < size; ++s) {
    law.pmf[s] = rel[s] == 0.0 ? 0.0 : std::exp(std::log(rel[s]) + log_scale[s] - lambda);
    total += law.pmf[s];
  }
  law.tail_mass = std::max(0.0, 1.0 - total);
  law.truncation_warning = law.tail_mass > kLocalTimeTailWarning;
  return law;
}

std::complex<double> local_time_cf(std::int64_t x, const Level& level, double t) {
  require_site(x, "local_time_cf");
  const double xd = static_cast<double>(x);
  const std::complex<double> e = std::exp(std::complex<double>(0.0, t));
  const std::complex<double> exponent =
      level.alpha() * xd * xd * (e - 1.0) / (2.0 * xd - (2.0 * xd - 1.0) * e);
  return std::exp(exponent);
}

double local_time_mean(std::int64_t x, const Level& level) {
  require_site(x, "local_time_mean");
  const double xd = static_cast<double>(x);
  return level.alpha() * xd * xd;
}

double local_time_variance(std::int64_t x, const Level& level) {
  require_site(x, "local_time_variance");
  const double xd = static_cast<double>(x);
  return level.alpha() * (4.0 * xd - 1.0) * xd * xd;
}

double standardize_local_time(double sample, std::int64_t x, const Level& level) {
  require_site(x, "standardize_local_time");
  const double xd = static_cast<double>(x);
  return (sample - level.alpha() * xd * xd) /
         (xd * std::sqrt(level.alpha() * (4.0 * xd - 1.0)));
}

}  // namespace ri1d
