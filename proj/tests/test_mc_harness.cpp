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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ri1d/numeric.hpp"

namespace ri1d {
namespace {

std::int64_t poisson_one(Rng& rng) { return rng.poisson(1.0); }

bool same(const EmpiricalSummary& a, const EmpiricalSummary& b) {
  return a.count == b.count && a.mean == b.mean && a.m2 == b.m2 && a.counts == b.counts &&
         a.values == b.values;
}

TEST(ReplicateTest, Deterministic) {
  const auto a = run_replicates(poisson_one, 20'000, {7, 1, true});
  const auto b = run_replicates(poisson_one, 20'000, {7, 1, true});
  EXPECT_TRUE(same(a, b));
}

TEST(ReplicateTest, WorkerCountDoesNotMatter) {
  const auto one = run_replicates(poisson_one, 30'001, {9, 1, true});
  for (int w : {2, 3, 8}) {
    EXPECT_TRUE(same(one, run_replicates(poisson_one, 30'001, {9, w, true}))) << w;
  }
}

TEST(ReplicateTest, PoissonMean) {
  const auto s = run_replicates(poisson_one, 100'000, {11, 0, false});
  EXPECT_EQ(s.count, 100'000);
  EXPECT_NEAR(s.mean, 1.0, 4.0 / std::sqrt(1e5));
  double total = 0.0;
  for (const auto& [v, f] : s.pmf()) total += f;
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(ReplicateTest, StreamsAreReplicateIndices) {
  const auto s = run_replicates([](Rng& rng) { return static_cast<std::int64_t>(rng.state().stream); },
                                5000, {1, 3, false});
  EXPECT_DOUBLE_EQ(s.mean, 2499.5);
  EXPECT_EQ(s.counts.size(), 5000u);
}

TEST(ReplicateTest, ErrorsCarryContext) {
  auto bad = [](Rng& rng) -> std::int64_t {
    if (rng.state().stream == 4321) throw std::runtime_error("boom");
    return 0;
  };
  try {
    run_replicates(bad, 10'000, {5, 2, false});
    FAIL() << "expected an exception";
  } catch (const std::runtime_error& e) {
    EXPECT_NE(std::string(e.what()).find("replicate 4321"), std::string::npos) << e.what();
    EXPECT_NE(std::string(e.what()).find("boom"), std::string::npos);
  }
  EXPECT_THROW(run_replicates(poisson_one, 0), DomainError);
}

TEST(SummaryTest, MergeMatchesSinglePass) {
  std::mt19937_64 gen(4);
  std::normal_distribution<double> normal(3.0, 2.0);
  std::vector<double> data(5000);
  for (double& d : data) d = std::round(normal(gen));
  EmpiricalSummary whole;
  for (double d : data) whole.add_integer(static_cast<std::int64_t>(d));
  for (int trial = 0; trial < 20; ++trial) {
    // Random partition into parts, merged in a random order.
    std::vector<EmpiricalSummary> parts(1 + trial % 7);
    std::uniform_int_distribution<std::size_t> pick(0, parts.size() - 1);
    for (double d : data) parts[pick(gen)].add_integer(static_cast<std::int64_t>(d));
    std::shuffle(parts.begin(), parts.end(), gen);
    EmpiricalSummary merged;
    for (const auto& p : parts) merged.merge(p);
    EXPECT_EQ(merged.count, whole.count);
    EXPECT_EQ(merged.counts, whole.counts);
    EXPECT_NEAR(merged.mean, whole.mean, 1e-12 * std::fabs(whole.mean));
    EXPECT_NEAR(merged.variance(), whole.variance(), 1e-10 * whole.variance());
    EXPECT_GE(merged.variance(), 0.0);
  }
}

TEST(SummaryTest, SmallCounts) {
  EmpiricalSummary s;
  EXPECT_EQ(s.variance(), 0.0);
  s.add(2.0);
  EXPECT_EQ(s.variance(), 0.0);
  s.add(4.0);
  EXPECT_DOUBLE_EQ(s.mean, 3.0);
  EXPECT_DOUBLE_EQ(s.variance(), 2.0);
  EXPECT_TRUE(s.counts.empty());
}

TEST(TvTest, Basics) {
  EmpiricalSummary s;
  for (int i = 0; i < 4; ++i) s.add_integer(i % 2);
  const std::vector<double> half{0.5, 0.5};
  EXPECT_EQ(tv_distance(s, half), 0.0);
  const std::vector<double> far{0.0, 0.0, 0.5, 0.5};
  EXPECT_EQ(tv_distance(s, far), 1.0);
  // Reference mass left off the table counts against the sample.
  const std::vector<double> short_ref{0.5, 0.3};
  EXPECT_NEAR(tv_distance(s, short_ref), 0.2, 1e-15);
  EXPECT_EQ(tv_distance(std::map<std::int64_t, double>{{1, 1.0}}, {{2, 1.0}}), 1.0);
}

TEST(TvTest, BoundedAndSymmetric) {
  std::mt19937_64 gen(5);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::map<std::int64_t, double> p, q;
    double sp = 0, sq = 0;
    for (int k = 0; k < 6; ++k) {
      p[k] = u(gen);
      q[k + trial % 3] = u(gen);
      sp += p[k];
      sq += q[k + trial % 3];
    }
    for (auto& [k, v] : p) v /= sp;
    for (auto& [k, v] : q) v /= sq;
    const double d = tv_distance(p, q);
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0 + 1e-15);
    EXPECT_NEAR(d, tv_distance(q, p), 1e-15);
    EXPECT_EQ(tv_distance(p, p), 0.0);
  }
}

// Inverse normal CDF by bisection on normal_cdf.
double normal_quantile(double p) {
  double lo = -40, hi = 40;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (normal_cdf(mid) < p ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

TEST(KsTest, QuantileGridAndPointMass) {
  const std::size_t size = 1000;
  std::vector<double> grid(size);
  for (std::size_t i = 0; i < size; ++i) grid[i] = normal_quantile((i + 0.5) / size);
  EXPECT_LE(ks_distance_to_normal(grid), 1.0 / size);
  const std::vector<double> zeros(500, 0.0);
  EXPECT_NEAR(ks_distance_to_normal(zeros), 0.5, 1e-15);
  EXPECT_THROW(ks_distance_to_normal(std::vector<double>(99, 0.0)), DomainError);
  std::vector<double> unsorted(grid.rbegin(), grid.rend());
  EXPECT_THROW(ks_distance_to_normal(unsorted), DomainError);
}

TEST(KsTest, ShiftedSampleIsFar) {
  std::vector<double> grid(1000);
  for (std::size_t i = 0; i < grid.size(); ++i) grid[i] = normal_quantile((i + 0.5) / 1000) + 1.0;
  EXPECT_NEAR(ks_distance_to_normal(grid), normal_cdf(0.5) - normal_cdf(-0.5), 2e-3);
}

TEST(NormalCdfTest, Accuracy) {
  EXPECT_NEAR(normal_cdf(0.0), 0.5, 1e-16);
  EXPECT_NEAR(normal_cdf(1.0), 0.841344746068542948585, 1e-15);
  EXPECT_NEAR(normal_cdf(-3.0), 0.001349898031630094526, 1e-17);
  EXPECT_NEAR(normal_cdf(5.0), 0.999999713348428076, 1e-15);
}

TEST(BandTest, Examples) {
  const Band b = binomial_band(0.5, 10'000, 4);
  EXPECT_NEAR(b.lo, 0.48, 1e-15);
  EXPECT_NEAR(b.hi, 0.52, 1e-15);
  const Band z = binomial_band(0.0, 1000, 4);
  EXPECT_EQ(z.lo, 0.0);
  EXPECT_DOUBLE_EQ(z.hi, 0.003);
  const Band o = binomial_band(1.0, 1000, 4);
  EXPECT_DOUBLE_EQ(o.lo, 0.997);
  EXPECT_EQ(o.hi, 1.0);
  const Band clip = binomial_band(0.01, 10, 4);
  EXPECT_EQ(clip.lo, 0.0);
  EXPECT_THROW(binomial_band(1.5, 10, 4), DomainError);
  EXPECT_THROW(binomial_band(0.5, 0, 4), DomainError);
}

TEST(VerdictTest, PassIffWithinThreshold) {
  EXPECT_TRUE(make_verdict("a", 0.1, 0.1).pass);
  EXPECT_FALSE(make_verdict("a", 0.2, 0.1).pass);
  EXPECT_FALSE(make_verdict("a", std::nan(""), 0.1).pass);
}

}  // namespace
}  // namespace ri1d
