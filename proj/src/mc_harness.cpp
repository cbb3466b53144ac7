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

#include "ri1d/mc_harness.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>

#include "ri1d/numeric.hpp"

namespace ri1d {

void EmpiricalSummary::add(double value, bool keep_value) {
  ++count;
  const double d = value - mean;
  mean += d / static_cast<double>(count);
  m2 += d * (value - mean);
  if (keep_value) values.push_back(value);
}

void EmpiricalSummary::add_integer(std::int64_t value, bool keep_value) {
  add(static_cast<double>(value), keep_value);
  ++counts[value];
}

void EmpiricalSummary::merge(const EmpiricalSummary& other) {
  if (other.count == 0) return;
  if (count == 0) {
    *this = other;
    return;
  }
  const double na = static_cast<double>(count);
  const double nb = static_cast<double>(other.count);
  const double n = na + nb;
  const double d = other.mean - mean;
  mean += d * nb / n;
  m2 += other.m2 + d * d * na * nb / n;
  count += other.count;
  for (const auto& [v, c] : other.counts) counts[v] += c;
  values.insert(values.end(), other.values.begin(), other.values.end());
}

void EmpiricalSummary::finalize() { std::sort(values.begin(), values.end()); }

double EmpiricalSummary::variance() const {
  return count < 2 ? 0.0 : std::max(0.0, m2 / static_cast<double>(count - 1));
}

std::map<std::int64_t, double> EmpiricalSummary::pmf() const {
  std::map<std::int64_t, double> out;
  for (const auto& [v, c] : counts) out[v] = static_cast<double>(c) / static_cast<double>(count);
  return out;
}

double EmpiricalSummary::frequency(std::int64_t value) const {
  const auto it = counts.find(value);
  if (it == counts.end() || count == 0) return 0.0;
  return static_cast<double>(it->second) / static_cast<double>(count);
}

Verdict make_verdict(std::string label, double statistic, double threshold,
                     std::string context) {
  return Verdict{std::move(label), statistic, threshold, statistic <= threshold,
                 std::move(context)};
}

int default_workers() {
  if (const char* env = std::getenv("RI1D_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

double tv_distance(const EmpiricalSummary& emp, std::span<const double> ref) {
  if (emp.count == 0) throw DomainError("tv_distance: empty summary");
  std::map<std::int64_t, double> q;
  double ref_total = 0.0;
  for (std::size_t s = 0; s < ref.size(); ++s) {
    if (ref[s] != 0.0) q[static_cast<std::int64_t>(s)] = ref[s];
    ref_total += ref[s];
  }
  const double leftover = std::max(0.0, 1.0 - ref_total);
  return std::min(1.0, tv_distance(emp.pmf(), q) + 0.5 * leftover);
}

double tv_distance(const std::map<std::int64_t, double>& p,
                   const std::map<std::int64_t, double>& q) {
  double l1 = 0.0;
  for (const auto& [v, w] : p) {
    const auto it = q.find(v);
    l1 += std::fabs(w - (it == q.end() ? 0.0 : it->second));
  }
  for (const auto& [v, w] : q) {
    if (p.find(v) == p.end()) l1 += std::fabs(w);
  }
  return 0.5 * l1;
}

double ks_distance_to_normal(std::span<const double> sorted) {
  if (sorted.size() < 100) throw DomainError("ks_distance_to_normal: needs >= 100 values");
  if (!std::is_sorted(sorted.begin(), sorted.end())) {
    throw DomainError("ks_distance_to_normal: sample must be sorted");
  }
  const double n = static_cast<double>(sorted.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < sorted.size()) {
    std::size_t j = i;
    while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
    const double phi = normal_cdf(sorted[i]);
    d = std::max({d, std::fabs(static_cast<double>(i) / n - phi),
                  std::fabs(static_cast<double>(j) / n - phi)});
    i = j;
  }
  return d;
}

Band binomial_band(double p_hat, std::int64_t M, double k_sigma) {
  if (!(p_hat >= 0.0 && p_hat <= 1.0)) throw DomainError("binomial_band: p_hat outside [0, 1]");
  if (M < 1) throw DomainError("binomial_band: M must be >= 1");
  const double m = static_cast<double>(M);
  if (p_hat == 0.0) return {0.0, std::min(1.0, 3.0 / m)};
  if (p_hat == 1.0) return {std::max(0.0, 1.0 - 3.0 / m), 1.0};
  const double half = k_sigma * std::sqrt(p_hat * (1.0 - p_hat) / m);
  return {std::max(0.0, p_hat - half), std::min(1.0, p_hat + half)};
}

}  // namespace ri1d
