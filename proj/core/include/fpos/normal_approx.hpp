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

#ifndef FPOS_NORMAL_APPROX_HPP_
#define FPOS_NORMAL_APPROX_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "fpos/order_stat.hpp"

namespace fpos {

// Limit path n / N -> lambda, k / n -> phi at a given N.
class AsymptoticRegime {
 public:
  // Throws ParameterError unless 0 < lambda < 1, 0 < phi < 1 and N >= 1.
  AsymptoticRegime(double lambda, double phi, std::int64_t population_size);

  double lambda() const { return lambda_; }
  double phi() const { return phi_; }
  std::int64_t population_size() const { return population_size_; }

  // n = round(lambda N), k = round(phi n), each clamped into validity.
  OrderStatSpec induced_spec() const;

 private:
  double lambda_;
  double phi_;
  std::int64_t population_size_;
};

// Leading-order mean, variance, skewness and kurtosis along the regime.
MomentSet asymptotic_moments(const AsymptoticRegime& regime);

// Normal density at each support point with the exact mean and variance,
// renormalized to sum to one. Throws DegenerateDistributionError if n == N.
std::vector<double> normal_approx_pmf(const OrderStatSpec& spec);

// Floor used in place of log(0).
inline constexpr double kLrmseFloor = -690.7755278982137;  // log(1e-300)

// log(sqrt(mean squared difference)) over equal-length tables.
double lrmse_between(std::span<const double> exact, std::span<const double> approx);

// Log root-mean-squared error of the normal approximation over the N-n+1
// support points. Throws DegenerateDistributionError if n == N.
double lrmse(const OrderStatSpec& spec);
double lrmse(const OrderStatSpec& spec, const LogFactorials& log_factorials);

struct HeatmapCell {
  std::int64_t sample_size;
  std::int64_t rank;
  double lrmse;
};

struct HeatmapGrid {
  std::int64_t population_size = 0;
  // Ordered by sample size, then rank, both ascending.
  std::vector<HeatmapCell> cells;
};

inline constexpr std::int64_t kHeatmapMaxPopulation = 2000;

// LRMSE for every 1 <= k <= n <= N-1. Throws ParameterError for N < 3 and
// ResourceError above kHeatmapMaxPopulation.
HeatmapGrid heatmap(std::int64_t population_size);

// Header "N,n,k,lrmse", LF line endings, shortest round-trip doubles.
void write_heatmap_csv(std::ostream& out, const HeatmapGrid& grid);

double standard_normal_cdf(double z);

// Kolmogorov distance between the standardized order statistic and the
// standard normal: sup over z of |P((X - mu) / sigma <= z) - Phi(z)|.
// Throws DegenerateDistributionError if n == N.
double standardized_cdf_distance(const OrderStatSpec& spec);

}  // namespace fpos

#endif  // FPOS_NORMAL_APPROX_HPP_
