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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "oracles.hpp"
#include "ri1d/errors.hpp"
#include "ri1d/mc_harness.hpp"

namespace ri1d {
namespace {

constexpr std::int64_t kBig = 100'000;

TEST(LevelTest, RejectsNonPositive) {
  EXPECT_THROW(Level(0.0), DomainError);
  EXPECT_THROW(Level(-1.0), DomainError);
  EXPECT_THROW(Level(std::nan("")), DomainError);
  EXPECT_EQ(Level(2.5).alpha(), 2.5);
}

TEST(VacantTest, Examples) {
  EXPECT_EQ(vacant_prob_exact(IntervalSet(0, 0), Level(3.0)), 1.0);
  EXPECT_NEAR(vacant_prob_exact(IntervalSet(0, 2), Level(1.0)), 0.367879441171, 1e-12);
  EXPECT_NEAR(vacant_prob_exact(IntervalSet(-2, 3), Level(2.0)), std::exp(-5.0), 1e-15);
}

TEST(VacantTest, MonotoneInLevelAndDiameter) {
  for (double a : {0.1, 0.5, 1.0, 2.0}) {
    for (std::int64_t d = 0; d <= 20; ++d) {
      EXPECT_GE(vacant_prob_exact(IntervalSet(0, d), Level(a)),
                vacant_prob_exact(IntervalSet(0, d), Level(a * 1.5)));
      EXPECT_GE(vacant_prob_exact(IntervalSet(-d / 2, d - d / 2), Level(a)),
                vacant_prob_exact(IntervalSet(-d / 2, d + 1 - d / 2), Level(a)));
    }
  }
}

TEST(VacantTest, ZeroClassOfLocalTime) {
  for (double a : {0.3, 1.0, 4.0}) {
    for (std::int64_t x = 1; x <= 30; ++x) {
      const Level level(a);
      EXPECT_NEAR(local_time_pmf(x, level).pmf[0], vacant_prob_exact(IntervalSet(0, x), level),
                  1e-14);
    }
  }
}

TEST(TrajectoryCountTest, PoissonMeanAndZeroClass) {
  const Level level(1.0);
  const IntervalSet a(0, 2);
  const auto s = run_replicates([&](Rng& rng) { return sample_trajectory_count(a, level, rng); },
                                kBig, {3, 0, false});
  EXPECT_NEAR(s.mean, 1.0, 4.0 / std::sqrt(double(kBig)));
  const double p0 = vacant_prob_exact(a, level);
  EXPECT_TRUE(binomial_band(s.frequency(0), kBig, 4).contains(p0));
  Rng rng(1, 0);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(sample_trajectory_count(IntervalSet(0, 0), level, rng), 0);
}

TEST(WindowTest, Structure) {
  const Level level(1.5);
  Rng rng(8, 0);
  for (int rep = 0; rep < 2000; ++rep) {
    const WindowSample w = sample_window(level, 6, rng);
    ASSERT_EQ(w.visits.size(), 13u);
    ASSERT_EQ(w.visits_at(0), 0);
    std::int64_t pos_edge = 7, neg_edge = -7;
    for (std::int64_t site = 1; site <= 6 && pos_edge == 7; ++site) {
      if (w.visits_at(site) > 0) pos_edge = site;
    }
    for (std::int64_t site = -1; site >= -6 && neg_edge == -7; --site) {
      if (w.visits_at(site) > 0) neg_edge = site;
    }
    ASSERT_EQ(w.pos_edge, pos_edge);
    ASSERT_EQ(w.neg_edge, neg_edge);
    // The unvisited sites around the origin form an interval.
    for (std::int64_t site = neg_edge + 1; site < pos_edge; ++site) ASSERT_EQ(w.visits_at(site), 0);
    ASSERT_TRUE(w.vacant(neg_edge + 1, pos_edge - 1));
    if (pos_edge <= 6) {
      ASSERT_FALSE(w.vacant(0, pos_edge));
    }
  }
  EXPECT_THROW(sample_window(level, 0, rng), DomainError);
}

TEST(WindowTest, VacancyAndVisitMean) {
  const Level level(1.0);
  const auto vac = run_replicates([&](Rng& rng) { return sample_window(level, 8, rng).vacant(0, 2); },
                                  kBig, {21, 0, false});
  EXPECT_TRUE(binomial_band(vac.frequency(1), kBig, 4).contains(std::exp(-1.0)));
  const auto visits = run_replicates(
      [&](Rng& rng) { return sample_window(level, 8, rng).visits_at(3); }, kBig, {22, 0, false});
  EXPECT_NEAR(visits.mean / 9.0, 1.0, 0.01);
  // Zero class: no trajectory touches 3.
  EXPECT_TRUE(binomial_band(visits.frequency(0), kBig, 4).contains(std::exp(-1.5)));
}

TEST(WindowTest, NegativeSideMirrorsPositive) {
  const Level level(1.0);
  const auto pos = run_replicates(
      [&](Rng& rng) { return sample_window(level, 8, rng).visits_at(2); }, 50'000, {31, 0, false});
  const auto neg = run_replicates(
      [&](Rng& rng) { return sample_window(level, 8, rng).visits_at(-2); }, 50'000, {32, 0, false});
  EXPECT_LT(tv_distance(pos.pmf(), neg.pmf()), 0.02);
}

TEST(WindowTest, TinyLevelIsEmpty) {
  const Level level(1e-6);
  const auto s = run_replicates(
      [&](Rng& rng) {
        const WindowSample w = sample_window(level, 8, rng);
        return w.trajectory_count == 0 && w.vacant(-8, 8);
      },
      10'000, {4, 0, false});
  EXPECT_GE(s.frequency(1), 1 - 1e-3);
}

TEST(LocalTimeSamplerTest, ZeroClass) {
  const Level level(1.0);
  constexpr std::int64_t kM = 1'000'000;
  const auto s = run_replicates([&](Rng& rng) { return sample_local_time(2, level, rng); }, kM,
                                {41, 0, false});
  EXPECT_TRUE(binomial_band(s.frequency(0), kM, 4).contains(std::exp(-1.0)));
  Rng rng(1, 0);
  EXPECT_THROW(sample_local_time(0, level, rng), DomainError);
}

TEST(LocalTimeSamplerTest, Moments) {
  const Level level(1.0);
  const auto s = run_replicates([&](Rng& rng) { return sample_local_time(5, level, rng); },
                                1'000'000, {42, 0, false});
  EXPECT_NEAR(s.mean / 25.0, 1.0, 0.005);
  EXPECT_NEAR(s.variance() / 475.0, 1.0, 0.02);
}

TEST(LocalTimeSamplerTest, StandardizedMoments) {
  const Level level(1.0);
  const auto s = run_replicates(
      [&](Rng& rng) {
        return standardize_local_time(static_cast<double>(sample_local_time(400, level, rng)), 400,
                                      level);
      },
      kBig, {43, 0, true});
  EXPECT_NEAR(s.mean, 0.0, 0.02);
  EXPECT_GE(s.variance(), 0.97);
  EXPECT_LE(s.variance(), 1.03);
  EXPECT_LE(ks_distance_to_normal(s.values), 0.02);
}

TEST(LocalTimePmfTest, Examples) {
  const auto law = local_time_pmf(2, Level(1.0));
  EXPECT_NEAR(law.pmf[0], std::exp(-1.0), 1e-12);
  double total = 0.0, mean = 0.0;
  for (std::size_t s = 0; s < law.pmf.size(); ++s) {
    total += law.pmf[s];
    mean += static_cast<double>(s) * law.pmf[s];
  }
  EXPECT_NEAR(total, 1.0, 1e-10);
  EXPECT_NEAR(mean / 4.0, 1.0, 1e-8);
  EXPECT_LE(law.tail_mass, 1e-12);
  EXPECT_FALSE(law.truncation_warning);
}

TEST(LocalTimePmfTest, MatchesQuadraticRecursion) {
  for (double a : {0.5, 1.0, 3.0}) {
    for (std::int64_t x : {1, 2, 3, 10, 40}) {
      const Level level(a);
      const auto law = local_time_pmf(x, level);
      const auto ref = testing::panjer_naive(a * x / 2.0, 1.0 / (2.0 * x),
                                             static_cast<std::int64_t>(law.pmf.size()) - 1);
      for (std::size_t s = 0; s < law.pmf.size(); ++s) {
        ASSERT_NEAR(law.pmf[s], ref[s], 1e-13 + 1e-10 * ref[s]) << "a=" << a << " x=" << x << " s=" << s;
      }
    }
  }
}

TEST(LocalTimePmfTest, TruncationFlag) {
  const auto law = local_time_pmf(3, Level(1.0), 5);
  EXPECT_EQ(law.pmf.size(), 6u);
  EXPECT_TRUE(law.truncation_warning);
  EXPECT_GT(law.tail_mass, kLocalTimeTailWarning);
}

TEST(LocalTimePmfTest, ChernoffCutoffBoundsTheTail) {
  for (std::int64_t x : {1, 3, 20}) {
    const Level level(1.0);
    const std::int64_t cut = local_time_chernoff_cutoff(x, level, 1e-12);
    const auto wide = local_time_pmf(x, level, 3 * cut + 50);
    double tail = 0.0;
    for (std::size_t s = static_cast<std::size_t>(cut) + 1; s < wide.pmf.size(); ++s) tail += wide.pmf[s];
    EXPECT_LE(tail, 1e-12) << x;
  }
}

TEST(LocalTimePmfTest, LargeSiteStaysFinite) {
  const auto law = local_time_pmf(400, Level(1.0));
  EXPECT_NEAR(law.mean() / 160000.0, 1.0, 1e-8);
  EXPECT_NEAR(law.variance() / local_time_variance(400, Level(1.0)), 1.0, 1e-7);
}

TEST(LocalTimeCfTest, Basics) {
  const Level level(1.0);
  EXPECT_EQ(local_time_cf(3, level, 0.0), std::complex<double>(1.0, 0.0));
  for (int k = -100; k <= 100; ++k) {
    EXPECT_LE(std::abs(local_time_cf(4, level, M_PI * k / 100.0)), 1.0 + 1e-15);
  }
}

TEST(LocalTimeCfTest, FourierTransformOfPmf) {
  const Level level(1.0);
  const auto law = local_time_pmf(3, level);
  for (int k = 0; k < 64; ++k) {
    const double t = 2 * M_PI * k / 64.0;
    std::complex<double> sum = 0.0;
    for (std::size_t s = 0; s < law.pmf.size(); ++s) {
      sum += law.pmf[s] * std::exp(std::complex<double>(0.0, t * static_cast<double>(s)));
    }
    EXPECT_LT(std::abs(sum - local_time_cf(3, level, t)), 1e-8) << k;
  }
}

TEST(LocalTimeCfTest, MomentTriangle) {
  constexpr double kH = 1e-4;
  for (double a : {0.5, 1.0}) {
    for (std::int64_t x : {1, 2, 3}) {
      const Level level(a);
      const auto up = local_time_cf(x, level, kH);
      const auto down = local_time_cf(x, level, -kH);
      const double cf_mean = (up - down).imag() / (2 * kH);
      const double cf_second = -(up + down - 2.0).real() / (kH * kH);
      const double cf_var = cf_second - cf_mean * cf_mean;
      const auto law = local_time_pmf(x, level);
      const double mean = local_time_mean(x, level);
      const double var = local_time_variance(x, level);
      EXPECT_DOUBLE_EQ(mean, a * x * x);
      EXPECT_DOUBLE_EQ(var, a * (4 * x - 1) * x * x);
      EXPECT_NEAR(law.mean() / mean, 1.0, 1e-6);
      EXPECT_NEAR(law.variance() / var, 1.0, 1e-6);
      EXPECT_NEAR(cf_mean / mean, 1.0, 1e-6);
      EXPECT_NEAR(cf_var / var, 1.0, 1e-6);
    }
  }
}

TEST(StandardizeTest, Centering) {
  EXPECT_EQ(standardize_local_time(25.0, 5, Level(1.0)), 0.0);
  EXPECT_DOUBLE_EQ(standardize_local_time(25.0 + 5 * std::sqrt(19.0), 5, Level(1.0)), 1.0);
}

}  // namespace
}  // namespace ri1d
