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

#include "ri1d/capacity.hpp"

#include <algorithm>
#include <cstdlib>

#include "ri1d/errors.hpp"
#include "ri1d/walks.hpp"

namespace ri1d {

IntervalSet::IntervalSet(std::int64_t min, std::int64_t max) : min_(min), max_(max) {
  if (min > max) throw DomainError("IntervalSet: min must be <= max");
}

IntervalSet IntervalSet::from_sites(std::span<const std::int64_t> sites) {
  if (sites.empty()) throw DomainError("IntervalSet: capacity of the empty set");
  const auto [lo, hi] = std::minmax_element(sites.begin(), sites.end());
  return {*lo, *hi};
}

IntervalSet IntervalSet::with_origin() const {
  return {std::min<std::int64_t>(min_, 0), std::max<std::int64_t>(max_, 0)};
}

double EquilibriumMeasure::total() const {
  double sum = 0.0;
  for (const auto& [site, mass] : masses) sum += mass;
  return sum;
}

double potential_kernel(std::int64_t x) { return static_cast<double>(std::llabs(x)); }

double capacity(const IntervalSet& a) { return static_cast<double>(a.diameter()) / 2.0; }

EquilibriumMeasure equilibrium_measure(const IntervalSet& a) {
  EquilibriumMeasure out;
  // Reversible measure mu_z = z^2; escape probability from the outer edge
  // of a half-line is 1/(2|z|) by the conditioned-walk formula.
  auto edge_mass = [](std::int64_t z) {
    const std::int64_t r = std::llabs(z);
    const double mu = static_cast<double>(r) * static_cast<double>(r);
    return escape_prob(r) * mu;
  };
  const std::int64_t lo = a.min();
  const std::int64_t hi = a.max();
  out.masses[lo] = lo < 0 ? edge_mass(lo) : 0.0;
  if (hi != lo) out.masses[hi] = hi > 0 ? edge_mass(hi) : 0.0;
  else if (hi > 0) out.masses[hi] = edge_mass(hi);
  return out;
}

double capacity_hat(const IntervalSet& a) { return equilibrium_measure(a).total(); }

}  // namespace ri1d
