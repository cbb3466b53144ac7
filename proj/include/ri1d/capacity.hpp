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

#include <cstdint>
#include <map>
#include <span>

namespace ri1d {

/// A finite nonempty set of integer sites, kept by its extremes. Every
/// capacity here depends on the set only through min and max.
class IntervalSet {
 public:
  IntervalSet(std::int64_t min, std::int64_t max);

  /// Collapses an arbitrary finite set to its extremes. Empty input is a
  /// DomainError.
  static IntervalSet from_sites(std::span<const std::int64_t> sites);

  std::int64_t min() const { return min_; }
  std::int64_t max() const { return max_; }
  std::int64_t diameter() const { return max_ - min_; }
  bool contains(std::int64_t site) const { return min_ <= site && site <= max_; }

  IntervalSet shifted(std::int64_t by) const { return {min_ + by, max_ + by}; }
  IntervalSet with_origin() const;

 private:
  std::int64_t min_;
  std::int64_t max_;
};

struct EquilibriumMeasure {
  std::map<std::int64_t, double> masses;

  double total() const;
};

/// a(x) = |x| for the one-dimensional simple random walk.
double potential_kernel(std::int64_t x);

/// diam(A) / 2.
double capacity(const IntervalSet& a);

/// Equilibrium measure of the conditioned walk: e_A(z) = P_z[no return to
/// A] * z^2 at the extremes of A. Sites on the origin side of an interval
/// that does not straddle 0 carry zero mass, because the walk from there
/// must come back through A.
EquilibriumMeasure equilibrium_measure(const IntervalSet& a);

/// Total equilibrium mass; equals capacity(A u {0}).
double capacity_hat(const IntervalSet& a);

}  // namespace ri1d
