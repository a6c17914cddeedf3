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

#ifndef FPOS_TANK_HPP_
#define FPOS_TANK_HPP_

// Classical estimation of an unknown population size N from one observed
// order statistic (the German tank problem and its generalization to an
// arbitrary rank). Sampling is assumed to be without replacement and any
// unobserved higher order statistics missing completely at random.

#include <cstdint>
#include <optional>
#include <vector>

#include "fpos/random.hpp"

namespace fpos {

struct EstimateResult {
  double estimate = 0.0;
  std::int64_t rank = 0;
  std::int64_t sample_size = 0;
  // Set only through with_standard_error / with_plug_in_standard_error.
  std::optional<double> standard_error;
  // The population size the standard error was evaluated at; empty for the
  // plug-in variant or when no standard error was requested.
  std::optional<std::int64_t> variance_at;

  // Round-half-up, for display.
  std::int64_t rounded() const;
};

// (n + 1) / n * x_max - 1. Throws ParameterError if x_max < n or n < 1.
EstimateResult estimate_from_max(std::int64_t sample_size, std::int64_t max_value);

// (n + 1) / k * x_k - 1; unbiased for N. Throws ParameterError if x_k < k or
// the rank is outside [1, n].
EstimateResult estimate_from_kth(std::int64_t sample_size, std::int64_t rank, std::int64_t value);

// Exact variance (N + 1)(N - n) / (n + 2) * (n - k + 1) / k.
double estimator_variance(std::int64_t population_size, std::int64_t sample_size, std::int64_t rank);

// Limit of the variance of the max-based estimator as n / N -> lambda:
// (1 - lambda) / lambda^2.
double estimator_asymptotic_variance(double lambda);

// Standard error at a hypothesized population size.
EstimateResult with_standard_error(EstimateResult result, std::int64_t population_size);
// Standard error with N replaced by the estimate itself.
EstimateResult with_plug_in_standard_error(EstimateResult result);

struct ConsistencyRow {
  std::int64_t population_size = 0;
  std::int64_t sample_size = 0;
  std::int64_t rank = 0;
  double mean_ratio = 0.0;  // mean of N_hat / N
  double sd_ratio = 0.0;    // sample standard deviation of N_hat / N
  double standard_error = 0.0;  // sd_ratio / sqrt(sims)
};

// Monte Carlo behaviour of N_hat_k / N along n = round(lambda N),
// k = round(phi n), drawing the order statistic with the mixture sampler.
// Empty when sims == 0.
std::vector<ConsistencyRow> consistency_study(double lambda, double phi,
                                              const std::vector<std::int64_t>& population_sizes,
                                              std::int64_t sims, Rng& rng);

}  // namespace fpos

#endif  // FPOS_TANK_HPP_
