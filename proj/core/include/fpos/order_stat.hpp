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

#ifndef FPOS_ORDER_STAT_HPP_
#define FPOS_ORDER_STAT_HPP_

// The finite-population order statistic (FPOS) distribution: the law of the
// k-th smallest value in a simple random sample of size n drawn without
// replacement from {1, ..., N}.
//
//   P(X = x) = C(x-1, k-1) C(N-x, n-k) / C(N, n),   x in [k, N-n+k].
//
// Floating-point evaluation goes through log-gamma sums; an exact rational
// path is available for small populations.

#include <cstdint>
#include <optional>
#include <vector>

#include "fpos/numeric.hpp"
#include "fpos/random.hpp"

namespace fpos {

// Parameters (k, n, N) of one FPOS distribution with 1 <= k <= n <= N.
class OrderStatSpec {
 public:
  // Throws ParameterError unless 1 <= rank <= sample_size <= population_size.
  OrderStatSpec(std::int64_t rank, std::int64_t sample_size, std::int64_t population_size);

  std::int64_t rank() const { return rank_; }
  std::int64_t sample_size() const { return sample_size_; }
  std::int64_t population_size() const { return population_size_; }

  // n == N: every sample is the whole population.
  bool is_census() const { return sample_size_ == population_size_; }

  friend bool operator==(const OrderStatSpec&, const OrderStatSpec&) = default;

 private:
  std::int64_t rank_;
  std::int64_t sample_size_;
  std::int64_t population_size_;
};

// Closed integer interval [lo, hi].
struct Support {
  std::int64_t lo;
  std::int64_t hi;

  std::int64_t size() const { return hi - lo + 1; }
  bool contains(std::int64_t x) const { return x >= lo && x <= hi; }
  friend bool operator==(const Support&, const Support&) = default;
};

// Skewness and kurtosis are empty for the census case, where the variance
// is zero.
struct MomentSet {
  double mean = 0.0;
  double variance = 0.0;
  std::optional<double> skewness;
  std::optional<double> kurtosis;
};

// Moments of X / (N + 1).
struct ScaledMoments {
  double mean = 0.0;
  double variance = 0.0;
};

// One draw of the beta-binomial mixture: the latent Beta(k, n-k+1) variate
// and the resulting order statistic k + Bin(N-n, u).
struct MixtureDraw {
  double u = 0.0;
  std::int64_t x = 0;
};

// Population sizes up to this bound are accepted by the exact rational path.
inline constexpr std::int64_t kExactMaxPopulation = 64;

Support support(const OrderStatSpec& spec);

// Zero outside the support.
double pmf(const OrderStatSpec& spec, std::int64_t x);

// -infinity outside the support.
double log_pmf(const OrderStatSpec& spec, std::int64_t x);

// Masses at every point of the support, in order.
std::vector<double> pmf_table(const OrderStatSpec& spec);
std::vector<double> pmf_table(const OrderStatSpec& spec, const LogFactorials& log_factorials);

// Exact mass; throws ResourceError for N > kExactMaxPopulation.
Rational exact_pmf(const OrderStatSpec& spec, std::int64_t x);

// P(X <= x); 0 below the support and 1 above it.
double cdf(const OrderStatSpec& spec, std::int64_t x);

// Smallest x in the support with cdf(x) >= p, for p in (0, 1].
std::int64_t quantile(const OrderStatSpec& spec, double p);

// E[X (X+1) ... (X+r-1)] = (N+1)^(r) k^(r) / (n+1)^(r).
double factorial_moment(const OrderStatSpec& spec, std::int64_t r);
Rational exact_factorial_moment(const OrderStatSpec& spec, std::int64_t r);

double mean(const OrderStatSpec& spec);
double variance(const OrderStatSpec& spec);
// Both throw DegenerateDistributionError when n == N.
double skewness(const OrderStatSpec& spec);
double kurtosis(const OrderStatSpec& spec);

MomentSet moments(const OrderStatSpec& spec);

// Exact mean, variance and kurtosis from the rising factorial moments. The
// kurtosis is empty in the census case.
struct ExactMoments {
  Rational mean;
  Rational variance;
  Rational third_central;
  Rational fourth_central;
  std::optional<Rational> kurtosis;
};
ExactMoments exact_moments(const OrderStatSpec& spec);

ScaledMoments scaled_moments(const OrderStatSpec& spec);

MixtureDraw sample_mixture(const OrderStatSpec& spec, Rng& rng);

// `count` independent draws via X = k + Bin(N-n, U), U ~ Beta(k, n-k+1).
std::vector<std::int64_t> sample(const OrderStatSpec& spec, Rng& rng, std::int64_t count);

}  // namespace fpos

#endif  // FPOS_ORDER_STAT_HPP_
