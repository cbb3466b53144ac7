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

// Independent reference computations for the unit tests. Everything here
// is deliberately naive: brute-force enumeration, unnormalised recursions
// and quadratic sums.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace ri1d::testing {

/// Calls f on every nearest-neighbour path of `steps` steps from x0 (all
/// 2^steps sign sequences, with no constraint on the sites visited).
inline void for_each_walk(std::int64_t x0, int steps,
                          const std::function<void(const std::vector<std::int64_t>&)>& f) {
  std::vector<std::int64_t> pos(static_cast<std::size_t>(steps) + 1);
  pos[0] = x0;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << steps); ++bits) {
    for (int i = 0; i < steps; ++i) {
      pos[static_cast<std::size_t>(i) + 1] = pos[static_cast<std::size_t>(i)] + ((bits >> i) & 1 ? 1 : -1);
    }
    f(pos);
  }
}

/// Paths that stay strictly inside (0, n).
inline bool inside(const std::vector<std::int64_t>& pos, std::int64_t n) {
  for (std::int64_t p : pos) {
    if (p <= 0 || p >= n) return false;
  }
  return true;
}

/// h_n(x, t) by the plain recursion with no rescaling; fine while h stays
/// far above the double underflow threshold.
inline std::vector<std::vector<double>> naive_h_table(std::int64_t n, std::int64_t t_max) {
  std::vector<std::vector<double>> h(static_cast<std::size_t>(t_max) + 1,
                                     std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0));
  for (std::int64_t x = 1; x < n; ++x) h[0][static_cast<std::size_t>(x)] = 1.0;
  for (std::int64_t t = 1; t <= t_max; ++t) {
    for (std::int64_t x = 1; x < n; ++x) {
      h[static_cast<std::size_t>(t)][static_cast<std::size_t>(x)] =
          0.5 * (h[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(x - 1)] +
                 h[static_cast<std::size_t>(t - 1)][static_cast<std::size_t>(x + 1)]);
    }
  }
  return h;
}

/// Compound Poisson pmf, Poisson(lambda) many Geometric(p) on {1, ...},
/// by the quadratic recursion f(s) = (lambda/s) sum_j j g(j) f(s-j).
inline std::vector<double> panjer_naive(double lambda, double p, std::int64_t s_max) {
  std::vector<double> g(static_cast<std::size_t>(s_max) + 1, 0.0);
  for (std::int64_t j = 1; j <= s_max; ++j) {
    g[static_cast<std::size_t>(j)] = p * std::pow(1.0 - p, static_cast<double>(j - 1));
  }
  std::vector<double> f(static_cast<std::size_t>(s_max) + 1, 0.0);
  f[0] = std::exp(-lambda);
  for (std::int64_t s = 1; s <= s_max; ++s) {
    double acc = 0.0;
    for (std::int64_t j = 1; j <= s; ++j) {
      acc += static_cast<double>(j) * g[static_cast<std::size_t>(j)] * f[static_cast<std::size_t>(s - j)];
    }
    f[static_cast<std::size_t>(s)] = lambda / static_cast<double>(s) * acc;
  }
  return f;
}

/// Law of the number of visits to `site` at times 1..t of the simple walk
/// from x0 on {1, ..., n-1} conditioned to survive t steps. Forward
/// recursion over (position, visits), rescaled by the total each step.
inline std::vector<double> ring_visit_law(std::int64_t n, std::int64_t t, std::int64_t x0,
                                          std::int64_t site, std::int64_t max_visits) {
  const auto width = static_cast<std::size_t>(max_visits) + 1;
  std::vector<std::vector<double>> cur(static_cast<std::size_t>(n) + 1,
                                       std::vector<double>(width, 0.0));
  auto next = cur;
  cur[static_cast<std::size_t>(x0)][0] = 1.0;
  for (std::int64_t step = 0; step < t; ++step) {
    for (auto& row : next) std::fill(row.begin(), row.end(), 0.0);
    double total = 0.0;
    for (std::int64_t y = 1; y < n; ++y) {
      for (std::size_t c = 0; c < width; ++c) {
        const double w = cur[static_cast<std::size_t>(y)][c];
        if (w == 0.0) continue;
        for (std::int64_t z : {y - 1, y + 1}) {
          if (z <= 0 || z >= n) continue;
          const std::size_t c2 = std::min(width - 1, c + (z == site ? 1 : 0));
          next[static_cast<std::size_t>(z)][c2] += 0.5 * w;
          total += 0.5 * w;
        }
      }
    }
    for (auto& row : next) {
      for (double& v : row) v /= total;
    }
    cur.swap(next);
  }
  std::vector<double> law(width, 0.0);
  for (const auto& row : cur) {
    for (std::size_t c = 0; c < width; ++c) law[c] += row[c];
  }
  return law;
}

}  // namespace ri1d::testing
