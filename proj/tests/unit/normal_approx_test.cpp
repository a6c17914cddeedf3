// Copyright 2026 The fpos Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "fpos/error.hpp"
#include "fpos/normal_approx.hpp"
#include "fpos/order_stat.hpp"

namespace fpos {
namespace {

double median_lrmse(std::int64_t population_size) {
  const HeatmapGrid grid = heatmap(population_size);
  std::vector<double> values;
  for (const HeatmapCell& c : grid.cells) values.push_back(c.lrmse);
  std::nth_element(values.begin(), values.begin() + values.size() / 2, values.end());
  return values[values.size() / 2];
}

TEST(AsymptoticRegime, RejectsOutOfRangeParameters) {
  EXPECT_THROW(AsymptoticRegime(0.0, 0.5, 100), ParameterError);
  EXPECT_THROW(AsymptoticRegime(0.5, 1.0, 100), ParameterError);
  EXPECT_THROW(AsymptoticRegime(0.5, 0.5, 0), ParameterError);
}

TEST(AsymptoticRegime, InducedSpecRounds) {
  const OrderStatSpec s = AsymptoticRegime(0.1, 0.5, 1000).induced_spec();
  EXPECT_EQ(s.sample_size(), 100);
  EXPECT_EQ(s.rank(), 50);
  EXPECT_EQ(s.population_size(), 1000);
}

TEST(AsymptoticMoments, SymmetricHalfSample) {
  const MomentSet m = asymptotic_moments(AsymptoticRegime(0.5, 0.5, 1000));
  EXPECT_DOUBLE_EQ(m.mean, 500.0);
  EXPECT_DOUBLE_EQ(m.variance, 250.0);
  ASSERT_TRUE(m.skewness.has_value());
  EXPECT_EQ(*m.skewness, 0.0);
}

TEST(AsymptoticMoments, AgreeWithExactMomentsForLargePopulation) {
  for (double lam : {0.2, 0.5, 0.8}) {
    for (double phi : {0.25, 0.5, 0.75}) {
      const AsymptoticRegime regime(lam, phi, 100000);
      const OrderStatSpec spec = regime.induced_spec();
      const MomentSet a = asymptotic_moments(regime);
      const MomentSet e = moments(spec);
      EXPECT_NEAR(a.mean / e.mean, 1.0, 0.02) << lam << " " << phi;
      EXPECT_NEAR(a.variance / e.variance, 1.0, 0.02) << lam << " " << phi;
      ASSERT_TRUE(e.kurtosis.has_value());
      EXPECT_NEAR(*a.kurtosis, *e.kurtosis, 0.01);
    }
  }
}

TEST(NormalApproxPmf, SumsToOneOverSupport) {
  for (const OrderStatSpec& s : {OrderStatSpec(1, 2, 3), OrderStatSpec(3, 5, 11),
                                 OrderStatSpec(50, 100, 1000)}) {
    const std::vector<double> approx = normal_approx_pmf(s);
    EXPECT_EQ(static_cast<std::int64_t>(approx.size()), support(s).size());
    double total = 0.0;
    for (double v : approx) {
      EXPECT_GE(v, 0.0);
      total += v;
    }
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
}

TEST(NormalApproxPmf, CensusIsDegenerate) {
  EXPECT_THROW(normal_approx_pmf(OrderStatSpec(2, 5, 5)), DegenerateDistributionError);
  EXPECT_THROW(lrmse(OrderStatSpec(2, 5, 5)), DegenerateDistributionError);
}

TEST(NormalApproxPmf, ModeNearExactMode) {
  const OrderStatSpec s(3, 5, 11);
  const std::vector<double> exact = pmf_table(s);
  const std::vector<double> approx = normal_approx_pmf(s);
  const auto exact_mode = std::max_element(exact.begin(), exact.end()) - exact.begin();
  const auto approx_mode = std::max_element(approx.begin(), approx.end()) - approx.begin();
  EXPECT_LE(std::abs(exact_mode - approx_mode), 1);
}

TEST(Lrmse, PinnedValues) {
  // Reference values from an exact-rational pmf and a renormalized Gaussian.
  EXPECT_NEAR(lrmse(OrderStatSpec(5, 10, 100)), -6.93090119691456, 1e-9);
  EXPECT_NEAR(lrmse(OrderStatSpec(50, 100, 1000)), -11.00713125678456, 1e-9);
  EXPECT_NEAR(lrmse(OrderStatSpec(1, 10, 100)), -4.397778145915514, 1e-9);
  EXPECT_NEAR(lrmse(OrderStatSpec(2, 3, 11)), -3.805433101053976, 1e-9);
}

TEST(Lrmse, SymmetricRankBeatsMinimum) {
  for (std::int64_t n : {5, 11, 21, 41}) {
    const std::int64_t N = 10 * n;
    EXPECT_LT(lrmse(OrderStatSpec((n + 1) / 2, n, N)), lrmse(OrderStatSpec(1, n, N))) << n;
  }
}

TEST(Lrmse, ImprovesWithPopulationAtMatchedRegime) {
  EXPECT_LT(lrmse(OrderStatSpec(50, 100, 1000)), lrmse(OrderStatSpec(5, 10, 100)));
}

TEST(Lrmse, FloorForIdenticalTables) {
  const std::vector<double> a{0.25, 0.75};
  EXPECT_EQ(lrmse_between(a, a), kLrmseFloor);
  EXPECT_NEAR(kLrmseFloor, std::log(1e-300), 1e-12);
}

TEST(Lrmse, MismatchedTablesRejected) {
  const std::vector<double> a{0.5, 0.5};
  const std::vector<double> b{1.0};
  EXPECT_THROW(lrmse_between(a, b), ParameterError);
  EXPECT_THROW(lrmse_between(std::vector<double>{}, std::vector<double>{}), ParameterError);
}

TEST(Lrmse, BetweenIsLogRootMeanSquare) {
  const std::vector<double> a{0.5, 0.5};
  const std::vector<double> b{0.4, 0.6};
  EXPECT_NEAR(lrmse_between(a, b), std::log(0.1), 1e-12);
}

TEST(Heatmap, CellCountAndRange) {
  const HeatmapGrid g = heatmap(100);
  EXPECT_EQ(g.population_size, 100);
  EXPECT_EQ(g.cells.size(), 4950u);
  for (const HeatmapCell& c : g.cells) {
    ASSERT_GE(c.rank, 1);
    ASSERT_LE(c.rank, c.sample_size);
    ASSERT_LE(c.sample_size, 99);
    ASSERT_TRUE(std::isfinite(c.lrmse));
  }
}

TEST(Heatmap, CellMatchesDirectLrmse) {
  const HeatmapGrid g = heatmap(40);
  for (const HeatmapCell& c : g.cells) {
    if (c.sample_size == 17 && c.rank == 6) {
      EXPECT_NEAR(c.lrmse, lrmse(OrderStatSpec(6, 17, 40)), 1e-12);
      return;
    }
  }
  FAIL() << "cell (17, 6) missing";
}

TEST(Heatmap, Limits) {
  EXPECT_THROW(heatmap(2), ParameterError);
  EXPECT_THROW(heatmap(kHeatmapMaxPopulation + 1), ResourceError);
}

TEST(Heatmap, CsvFormat) {
  std::ostringstream out;
  write_heatmap_csv(out, heatmap(4));
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "N,n,k,lrmse");
  int rows = 0;
  while (std::getline(in, line)) {
    EXPECT_EQ(line.rfind("4,", 0), 0u) << line;
    EXPECT_EQ(std::count(line.begin(), line.end(), ','), 3);
    ++rows;
  }
  EXPECT_EQ(rows, 6);
  EXPECT_EQ(out.str().find('\r'), std::string::npos);
}

TEST(Heatmap, MedianDecreasesWithPopulation) {
  EXPECT_LT(median_lrmse(200), median_lrmse(100));
}

TEST(StandardNormalCdf, KnownValues) {
  EXPECT_DOUBLE_EQ(standard_normal_cdf(0.0), 0.5);
  EXPECT_NEAR(standard_normal_cdf(1.959963984540054), 0.975, 1e-15);
  EXPECT_NEAR(standard_normal_cdf(-1.0), 0.15865525393145705, 1e-15);
  EXPECT_NEAR(standard_normal_cdf(-40.0), 0.0, 1e-300);
}

TEST(StandardizedCdfDistance, SmallCase) {
  // Support {1, 2} with masses 2/3, 1/3; mean 4/3, variance 2/9.
  EXPECT_NEAR(standardized_cdf_distance(OrderStatSpec(1, 2, 3)), 0.42691660557318983, 1e-14);
}

TEST(StandardizedCdfDistance, ShrinksWithPopulation) {
  const double small = standardized_cdf_distance(OrderStatSpec(5, 10, 100));
  const double large = standardized_cdf_distance(OrderStatSpec(50, 100, 1000));
  EXPECT_GT(small, 0.0);
  EXPECT_LT(small, 1.0);
  EXPECT_LT(large, small);
}

}  // namespace
}  // namespace fpos
