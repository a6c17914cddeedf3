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


#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <vector>

#include <gtest/gtest.h>

#include "fpos/bayes.hpp"
#include "fpos/error.hpp"
#include "fpos/order_stat.hpp"

namespace fpos {
namespace {

// Reference sums computed to 40 significant digits with mpmath.
constexpr double kPowerLawH_3_2_5 = 0.0005855727395978030591802299751375278714919;
constexpr double kPowerLawH_3_3_10 = 0.000167054846940692223964068910208202866684;
constexpr double kPowerLawH_1_1_4 = 0.006220632882801002511270698458560599686676;
constexpr double kPowerLawH_3_3_5 = 0.0006725598022913715160319796121141813318503;
constexpr double kPowerLawMean_3_3_5 = 5.870662709253201465693029897289234867652;
constexpr double kPowerLawVar_3_3_5 = 3.197837726952528875567952437991604712661;

TEST(Likelihood, SmallValues) {
  EXPECT_DOUBLE_EQ(likelihood(2, 2, 2, 2), 0.5);
  EXPECT_NEAR(likelihood(3, 2, 2, 2), 1.0 / 6.0, 1e-16);
  EXPECT_NEAR(likelihood(2, 2, 2, 2) / likelihood(3, 2, 2, 2), 3.0, 1e-14);
}

TEST(Likelihood, ProportionalToPmfInPopulation) {
  // pmf(x; N) / pmf(x; N') must equal L(N) / L(N') for fixed (n, k, x).
  const std::int64_t n = 4, k = 2, x = 7;
  for (std::int64_t N = 9; N < 30; ++N) {
    const double pmf_ratio = pmf(OrderStatSpec(k, n, N), x) / pmf(OrderStatSpec(k, n, N + 1), x);
    const double lik_ratio = likelihood(N, n, k, x) / likelihood(N + 1, n, k, x);
    EXPECT_NEAR(pmf_ratio / lik_ratio, 1.0, 1e-10) << N;
  }
}

TEST(Likelihood, ZeroOutsideSupport) {
  EXPECT_EQ(likelihood(5, 2, 2, 6), 0.0);
  EXPECT_EQ(likelihood(1, 2, 1, 1), 0.0);
}

TEST(PriorSpec, UniformAndPointMass) {
  const PriorSpec u = PriorSpec::uniform(2, 5);
  EXPECT_DOUBLE_EQ(u.mass(3), 0.25);
  EXPECT_EQ(u.mass(1), 0.0);
  EXPECT_EQ(u.mass(6), 0.0);
  EXPECT_TRUE(u.finite_support());
  EXPECT_EQ(u.tail(5), 0.0);
  const PriorSpec p = PriorSpec::point_mass(9);
  EXPECT_EQ(p.mass(9), 1.0);
  EXPECT_EQ(p.mass(8), 0.0);
}

TEST(PriorSpec, PowerLawNormalization) {
  const PriorSpec p = PriorSpec::power_law(2.0, 1);
  EXPECT_NEAR(p.mass(1), 6.0 / (std::numbers::pi * std::numbers::pi), 1e-14);
  EXPECT_NEAR(p.mass(3), 6.0 / (9.0 * std::numbers::pi * std::numbers::pi), 1e-15);
  EXPECT_EQ(p.mass(0), 0.0);
  EXPECT_FALSE(p.finite_support());
  const std::optional<double> t = p.tail(1000);
  ASSERT_TRUE(t.has_value());
  double true_tail = 0.0;
  for (std::int64_t j = 1001; j <= 2'000'000; ++j) true_tail += p.mass(j);
  EXPECT_GE(*t, true_tail);
}

TEST(PriorSpec, Parse) {
  EXPECT_DOUBLE_EQ(PriorSpec::parse("uniform:2,3").mass(2), 0.5);
  EXPECT_EQ(PriorSpec::parse("pointmass:7").mass(7), 1.0);
  EXPECT_NEAR(PriorSpec::parse("powerlaw:2,1").mass(1), 6.0 / (std::numbers::pi * std::numbers::pi),
              1e-14);
  EXPECT_THROW(PriorSpec::parse("gaussian:1,2"), ParameterError);
  EXPECT_THROW(PriorSpec::parse("uniform:3"), ParameterError);
  EXPECT_THROW(PriorSpec::parse("uniform:a,b"), ParameterError);
  EXPECT_THROW(PriorSpec::parse(""), ParameterError);
}

TEST(PriorSpec, ImproperPriorsRejected) {
  EXPECT_THROW(PriorSpec::power_law(1.0, 1), ParameterError);
  EXPECT_THROW(PriorSpec::power_law(0.5, 1), ParameterError);
  EXPECT_THROW(PriorSpec::uniform(5, 4), ParameterError);
  EXPECT_THROW(PriorSpec::uniform(0, 4), ParameterError);
  EXPECT_THROW(PriorSpec([](std::int64_t) { return 0.3; }, std::nullopt, 1, 3), ParameterError);
  EXPECT_THROW(PriorSpec([](std::int64_t j) { return j == 1 ? 1.5 : -0.5; }, std::nullopt, 1, 2),
               ParameterError);
}

TEST(HFunction, TwoPointPrior) {
  const HValue h = h_function(2, 2, 2, PriorSpec::uniform(2, 3));
  EXPECT_NEAR(h.value, 1.0 / 3.0, 1e-16);
  EXPECT_EQ(h.error_bound, 0.0);
}

TEST(HFunction, ShiftedTwoPointPrior) {
  EXPECT_NEAR(shifted_h_function(1, 2, 2, 2, PriorSpec::uniform(2, 3)).value, 0.75, 1e-15);
  EXPECT_NEAR(shifted_h_function(0, 2, 2, 2, PriorSpec::uniform(2, 3)).value, 1.0 / 3.0, 1e-16);
}

TEST(HFunction, PointMassGivesLikelihood) {
  const HValue h = h_function(3, 2, 5, PriorSpec::point_mass(20));
  EXPECT_NEAR(h.value, likelihood(20, 3, 2, 5), 1e-18);
}

TEST(HFunction, PowerLawAgainstHighPrecisionReference) {
  const PriorSpec p2 = PriorSpec::power_law(2.0, 1);
  const HValue a = h_function(3, 2, 5, p2, 1e-15);
  EXPECT_LE(a.error_bound, 1e-15);
  EXPECT_NEAR(a.value, kPowerLawH_3_2_5, 1e-15 + 1e-12 * kPowerLawH_3_2_5);
  const HValue b = h_function(3, 3, 10, PriorSpec::power_law(2.5, 5), 1e-15);
  EXPECT_NEAR(b.value, kPowerLawH_3_3_10, 1e-15 + 1e-12 * kPowerLawH_3_3_10);
  const HValue c = h_function(1, 1, 4, PriorSpec::power_law(3.0, 1), 1e-13);
  EXPECT_NEAR(c.value, kPowerLawH_1_1_4, 1e-13 + 1e-12 * kPowerLawH_1_1_4);
}

TEST(HFunction, TruncatedSumsSandwichTheValue) {
  const PriorSpec p = PriorSpec::power_law(2.0, 1);
  for (std::int64_t k : {2, 3}) {
    const double reference = k == 2 ? kPowerLawH_3_2_5 : kPowerLawH_3_3_5;
    for (std::int64_t t : {10, 100, 1000, 100000}) {
      const HValue h = h_function_truncated(3, k, 5, p, t);
      EXPECT_EQ(h.truncation_point, t);
      EXPECT_LE(h.value, reference * (1.0 + 1e-13)) << k << " " << t;
      EXPECT_GE(h.upper(), reference * (1.0 - 1e-13)) << k << " " << t;
    }
  }
}

TEST(HFunction, TighterToleranceShrinksBound) {
  const PriorSpec p = PriorSpec::power_law(2.0, 1);
  const HValue loose = h_function(3, 2, 5, p, 1e-6);
  const HValue tight = h_function(3, 2, 5, p, 1e-12);
  EXPECT_LE(loose.error_bound, 1e-6);
  EXPECT_LE(tight.error_bound, 1e-12);
  EXPECT_GE(tight.truncation_point, loose.truncation_point);
}

TEST(HFunction, UncertifiableWithoutTailThrows) {
  // k = 1 under a power law with alpha = 1.5: the tail of the sum decays too slowly.
  EXPECT_THROW(h_function(5, 1, 5, PriorSpec::power_law(1.5, 1), 1e-15), CertificationError);
  const PriorSpec no_tail(
      [](std::int64_t j) { return 1.0 / (static_cast<double>(j) * static_cast<double>(j + 1)); },
      std::nullopt, 1, std::nullopt);
  EXPECT_THROW(h_function(3, 1, 5, no_tail), CertificationError);
  // Only the unit-mass bound 1 / (J + 1) is available, far above the default tolerance.
  EXPECT_NEAR(h_function_truncated(3, 1, 5, no_tail, 100).error_bound, 1.0 / 101.0, 1e-15);
}

TEST(HFunction, MissingTailFallsBackToUnitMassForRankTwo) {
  const PriorSpec no_tail(
      [](std::int64_t j) { return 1.0 / (static_cast<double>(j) * static_cast<double>(j + 1)); },
      std::nullopt, 1, std::nullopt);
  const HValue h = h_function(3, 2, 5, no_tail, 1e-9);
  EXPECT_LE(h.error_bound, 1e-9);
  const HValue truncated = h_function_truncated(3, 2, 5, no_tail, 100);
  EXPECT_TRUE(std::isfinite(truncated.error_bound));
  EXPECT_LE(truncated.value, h.upper());
  EXPECT_GE(truncated.upper(), h.value);
}

TEST(HFunction, ShiftBeyondRankNeedsFiniteSupport) {
  EXPECT_THROW(shifted_h_function(3, 3, 2, 5, PriorSpec::power_law(2.0, 1)), CertificationError);
  EXPECT_NO_THROW(shifted_h_function(3, 3, 2, 5, PriorSpec::uniform(1, 50)));
}

TEST(Posterior, TwoPointMasses) {
  const PriorSpec p = PriorSpec::uniform(2, 3);
  EXPECT_NEAR(posterior_pmf(2, 2, 2, 2, p), 0.75, 1e-15);
  EXPECT_NEAR(posterior_pmf(3, 2, 2, 2, p), 0.25, 1e-15);
  EXPECT_EQ(posterior_pmf(4, 2, 2, 2, p), 0.0);
  const Posterior post = posterior(2, 2, 2, p);
  EXPECT_EQ(post.support_min, 2);
  ASSERT_EQ(post.masses.size(), 2u);
  EXPECT_NEAR(post.masses[0], 0.75, 1e-15);
  EXPECT_NEAR(post.masses[1], 0.25, 1e-15);
}

TEST(Posterior, PointMassIsDegenerate) {
  const PriorSpec p = PriorSpec::point_mass(12);
  EXPECT_NEAR(posterior_pmf(12, 3, 2, 5, p), 1.0, 1e-15);
  EXPECT_EQ(posterior_pmf(13, 3, 2, 5, p), 0.0);
  const PosteriorMoments m = posterior_mean_variance(3, 2, 5, p);
  EXPECT_NEAR(m.mean.value, 12.0, 1e-12);
  EXPECT_NEAR(m.variance.value, 0.0, 1e-9);
}

TEST(Posterior, InconsistentPriorThrows) {
  // Observing X(2) = 9 in a sample of 3 forces N >= 10.
  EXPECT_THROW(posterior(3, 2, 9, PriorSpec::uniform(2, 9)), InconsistentPriorError);
  EXPECT_THROW(posterior_pmf(5, 3, 2, 9, PriorSpec::point_mass(5)), InconsistentPriorError);
}

TEST(Posterior, ZeroBelowFeasibleMinimum) {
  const PriorSpec p = PriorSpec::uniform(1, 40);
  // Feasible N starts at max(n, n + x - k) = 6.
  for (std::int64_t N = 1; N < 6; ++N) EXPECT_EQ(posterior_pmf(N, 3, 2, 5, p), 0.0) << N;
  EXPECT_GT(posterior_pmf(6, 3, 2, 5, p), 0.0);
  double total = 0.0;
  for (std::int64_t N = 1; N <= 40; ++N) total += posterior_pmf(N, 3, 2, 5, p);
  EXPECT_NEAR(total, 1.0, 1e-13);
}

TEST(Posterior, UniformPriorIsProportionalToPmf) {
  const PriorSpec p = PriorSpec::uniform(1, 60);
  const std::int64_t n = 4, k = 3, x = 11;
  double z = 0.0;
  for (std::int64_t N = 12; N <= 60; ++N) z += pmf(OrderStatSpec(k, n, N), x);
  for (std::int64_t N = 12; N <= 60; ++N) {
    const double expected = pmf(OrderStatSpec(k, n, N), x) / z;
    EXPECT_NEAR(posterior_pmf(N, n, k, x, p) / expected, 1.0, 1e-10) << N;
  }
}

TEST(PosteriorMoments, TwoPointPrior) {
  const PriorSpec p = PriorSpec::uniform(2, 3);
  const CertifiedValue e0 = posterior_factorial_moment(0, 2, 2, 2, p);
  EXPECT_EQ(e0.value, 1.0);
  EXPECT_EQ(e0.error_bound, 0.0);
  EXPECT_NEAR(posterior_factorial_moment(1, 2, 2, 2, p).value, 2.25, 1e-14);
  // E[N(N-1)] = 0.75 * 2 + 0.25 * 6
  EXPECT_NEAR(posterior_factorial_moment(2, 2, 2, 2, p).value, 3.0, 1e-13);
  const PosteriorMoments m = posterior_mean_variance(2, 2, 2, p);
  EXPECT_NEAR(m.mean.value, 2.25, 1e-14);
  EXPECT_NEAR(m.variance.value, 3.0 / 16.0, 1e-13);
}

TEST(PosteriorMoments, MeanMatchesDirectSum) {
  const PriorSpec p = PriorSpec::uniform(1, 200);
  const Posterior post = posterior(5, 2, 17, p);
  double mean_direct = 0.0;
  for (std::size_t i = 0; i < post.masses.size(); ++i) {
    mean_direct += static_cast<double>(post.support_min + static_cast<std::int64_t>(i)) * post.masses[i];
  }
  EXPECT_NEAR(posterior_mean_variance(5, 2, 17, p).mean.value, mean_direct, 1e-10 * mean_direct);
}

TEST(PosteriorMoments, PowerLawAgainstHighPrecisionReference) {
  const PosteriorMoments m = posterior_mean_variance(3, 3, 5, PriorSpec::power_law(2.0, 1), 1e-14);
  EXPECT_NEAR(m.mean.value, kPowerLawMean_3_3_5, m.mean.error_bound + 1e-9);
  EXPECT_NEAR(m.variance.value, kPowerLawVar_3_3_5, m.variance.error_bound + 1e-8);
  EXPECT_LT(m.mean.error_bound, 1e-6);
}

}  // namespace
}  // namespace fpos
