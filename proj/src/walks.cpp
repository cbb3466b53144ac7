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

#include "ri1d/walks.hpp"

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

// One conditioned step from x >= 1.
inline std::int64_t conditioned_step(std::int64_t x, Rng& rng) {
  // u < (x+1)/(2x)  <=>  2x u < x + 1
  const double u = rng.uniform();
  return u * (2.0 * static_cast<double>(x)) < static_cast<double>(x + 1) ? x + 1
                                                                         : x - 1;
}

unsigned __int128 binomial_exact(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    c = c * static_cast<unsigned __int128>(n - i) / static_cast<unsigned __int128>(i + 1);
  }
  return c;
}

bool endpoint_reachable(std::int64_t x, std::int64_t delta, std::int64_t k) {
  if (x < 1 || k < 1 || delta < 0) return false;
  const std::int64_t gap = k > x ? k - x : x - k;
  return gap <= delta && (delta + k - x) % 2 == 0;
}

}  // namespace

bool is_valid_path(const WalkPath& path) {
  if (path.positions.empty()) return false;
  for (std::size_t i = 0; i < path.positions.size(); ++i) {
    if (path.positions[i] < 1) return false;
    if (i > 0) {
      const std::int64_t d = path.positions[i] - path.positions[i - 1];
      if (d != 1 && d != -1) return false;
    }
  }
  return true;
}

double step_up_prob(std::int64_t x) {
  require_site(x, "step_up_prob");
  return static_cast<double>(x + 1) / (2.0 * static_cast<double>(x));
}

double step_down_prob(std::int64_t x) { return 1.0 - step_up_prob(x); }

WalkPath sample_path(std::int64_t x0, std::int64_t steps, Rng& rng) {
  require_site(x0, "sample_path");
  if (steps < 0) throw DomainError("sample_path: step count must be >= 0");
  WalkPath path;
  path.positions.reserve(static_cast<std::size_t>(steps) + 1);
  path.positions.push_back(x0);
  std::int64_t x = x0;
  for (std::int64_t i = 0; i < steps; ++i) {
    x = conditioned_step(x, rng);
    path.positions.push_back(x);
  }
  return path;
}

double log_path_prob(const WalkPath& path) {
  if (!is_valid_path(path)) throw DomainError("path_prob: invalid path");
  return std::log(static_cast<double>(path.end())) -
         static_cast<double>(path.steps()) * std::log(2.0) -
         std::log(static_cast<double>(path.start()));
}

double path_prob(const WalkPath& path) {
  if (!is_valid_path(path)) throw DomainError("path_prob: invalid path");
  if (path.steps() > 1000) return std::exp(log_path_prob(path));
  return std::ldexp(static_cast<double>(path.end()) / static_cast<double>(path.start()),
                    -static_cast<int>(path.steps()));
}

double hit_before_prob(std::int64_t y, std::int64_t x, std::int64_t big_n) {
  if (!(1 < x && x < y && y < big_n)) {
    throw DomainError("hit_before_prob: requires 1 < x < y < N");
  }
  const double xd = static_cast<double>(x);
  const double yd = static_cast<double>(y);
  const double nd = static_cast<double>(big_n);
  return xd * (nd - yd) / (yd * (nd - xd));
}

double hit_prob(std::int64_t y, std::int64_t x) {
  if (!(1 <= x && x <= y)) throw DomainError("hit_prob: requires 1 <= x <= y");
  if (x == y) return 1.0;
  return static_cast<double>(x) / static_cast<double>(y);
}

double escape_prob(std::int64_t x) {
  require_site(x, "escape_prob");
  return 1.0 / (2.0 * static_cast<double>(x));
}

double martingale_defect(std::int64_t x) {
  if (x <= 1) throw DomainError("martingale_defect: requires x >= 2");
  const double xd = static_cast<double>(x);
  const double up = (xd + 1.0) / (2.0 * xd);
  const double down = (xd - 1.0) / (2.0 * xd);
  return std::fabs(up / (xd + 1.0) + down / (xd - 1.0) - 1.0 / xd);
}

unsigned __int128 count_paths(std::int64_t x, std::int64_t delta, std::int64_t k) {
  if (delta > kExactPathCountMaxLength) {
    throw BudgetError("count_paths: exact counts limited to delta <= " +
                      std::to_string(kExactPathCountMaxLength));
  }
  if (!endpoint_reachable(x, delta, k)) return 0;
  const std::int64_t upper = (delta + k - x) / 2;
  const std::int64_t lower = (delta - x - k) / 2;
  const unsigned __int128 all = binomial_exact(delta, upper);
  const unsigned __int128 reflected = lower >= 0 ? binomial_exact(delta, lower) : 0;
  return all - reflected;
}

double log_count_paths(std::int64_t x, std::int64_t delta, std::int64_t k) {
  if (!endpoint_reachable(x, delta, k)) return kNegInf;
  if (delta <= kExactPathCountMaxLength) {
    const unsigned __int128 c = count_paths(x, delta, k);
    return c == 0 ? kNegInf : std::log(static_cast<long double>(c));
  }
  const std::int64_t upper = (delta + k - x) / 2;
  const std::int64_t lower = (delta - x - k) / 2;
  const double log_all = log_binomial(delta, upper);
  if (lower < 0) return log_all;
  // C(delta, lower) / C(delta, upper) as a product over upper - lower = k
  // consecutive ratios, so that 1 - ratio keeps full relative accuracy.
  double log_ratio = 0.0;
  for (std::int64_t j = lower; j < upper; ++j) {
    log_ratio += std::log(static_cast<double>(j + 1) / static_cast<double>(delta - j));
  }
  return log_all + std::log(-std::expm1(log_ratio));
}

std::uint64_t enumerate_paths(std::int64_t x, std::int64_t delta, std::int64_t k) {
  if (delta > kEnumerationMaxLength) {
    throw BudgetError("enumerate_paths: delta must be <= " +
                      std::to_string(kEnumerationMaxLength));
  }
  if (x < 1 || k < 1 || delta < 0) return 0;
  std::uint64_t total = 0;
  const std::uint64_t sequences = std::uint64_t{1} << delta;
  for (std::uint64_t bits = 0; bits < sequences; ++bits) {
    std::int64_t pos = x;
    bool alive = true;
    for (std::int64_t i = 0; i < delta && alive; ++i) {
      pos += ((bits >> i) & 1U) ? 1 : -1;
      alive = pos != 0;
    }
    if (alive && pos == k) ++total;
  }
  return total;
}

EndpointProb endpoint_leq_prob(std::int64_t x, std::int64_t delta, std::int64_t y) {
  if (x < 1 || y < 1 || delta < 1) {
    throw DomainError("endpoint_leq_prob: requires x >= 1, y >= 1, delta >= 1");
  }
  const std::int64_t top = std::min(y, x + delta);
  std::vector<double> log_terms;
  log_terms.reserve(static_cast<std::size_t>(top));
  const double log_norm =
      std::log(static_cast<double>(x)) + static_cast<double>(delta) * std::log(2.0);
  for (std::int64_t k = 1; k <= top; ++k) {
    const double lc = log_count_paths(x, delta, k);
    if (lc == kNegInf) continue;
    log_terms.push_back(std::log(static_cast<double>(k)) + lc - log_norm);
  }
  EndpointProb out{};
  out.exact = std::exp(log_sum_exp(log_terms));
  const double yd = static_cast<double>(y);
  out.asymptotic = std::sqrt(2.0 / kPi) * yd * yd * yd /
                   (3.0 * std::pow(static_cast<double>(delta), 1.5));
  return out;
}

bool sample_hits_lower_first(std::int64_t y, std::int64_t x, std::int64_t big_n,
                             Rng& rng) {
  if (!(1 <= x && x < y && y < big_n)) {
    throw DomainError("sample_hits_lower_first: requires 1 <= x < y < N");
  }
  std::int64_t pos = y;
  for (std::int64_t step = 0; step < kAbsorptionStepCap; ++step) {
    pos = conditioned_step(pos, rng);
    if (pos == x) return true;
    if (pos == big_n) return false;
  }
  throw BudgetError("sample_hits_lower_first: step cap exceeded from y=" +
                    std::to_string(y));
}

bool sample_escapes_to(std::int64_t x, std::int64_t big_n, Rng& rng) {
  if (!(1 <= x && x < big_n)) {
    throw DomainError("sample_escapes_to: requires 1 <= x < N");
  }
  std::int64_t pos = conditioned_step(x, rng);
  // Below x the walk must cross x again before it can reach big_n.
  if (pos == x - 1) return false;
  for (std::int64_t step = 0; step < kAbsorptionStepCap; ++step) {
    if (pos == big_n) return true;
    if (pos == x) return false;
    pos = conditioned_step(pos, rng);
  }
  throw BudgetError("sample_escapes_to: step cap exceeded");
}

}  // namespace ri1d
