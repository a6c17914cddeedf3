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

#include "fpos/tank.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fpos/error.hpp"
#include "fpos/normal_approx.hpp"
#include "fpos/order_stat.hpp"

namespace fpos {
namespace {

double variance_at(double population_size, std::int64_t sample_size, std::int64_t rank) {
  const double n = static_cast<double>(sample_size);
  const double k = static_cast<double>(rank);
  return (population_size + 1.0) * (population_size - n) / (n + 2.0) * (n - k + 1.0) / k;
}

}  // namespace

std::int64_t EstimateResult::rounded() const {
  return static_cast<std::int64_t>(std::floor(estimate + 0.5));
}

EstimateResult estimate_from_kth(std::int64_t sample_size, std::int64_t rank, std::int64_t value) {
  if (sample_size < 1 || rank < 1 || rank > sample_size) {
    throw ParameterError("estimator requires 1 <= k <= n, got k=" + std::to_string(rank) +
                         " n=" + std::to_string(sample_size));
  }
  if (value < rank) {
    throw ParameterError("impossible observation: X(" + std::to_string(rank) + ") = " +
                         std::to_string(value) + " is below its rank");
  }
  EstimateResult r;
  r.rank = rank;
  r.sample_size = sample_size;
  r.estimate = static_cast<double>(sample_size + 1) / static_cast<double>(rank) *
                   static_cast<double>(value) - 1.0;
  return r;
}

EstimateResult estimate_from_max(std::int64_t sample_size, std::int64_t max_value) {
  return estimate_from_kth(sample_size, sample_size, max_value);
}

double estimator_variance(std::int64_t population_size, std::int64_t sample_size, std::int64_t rank) {
  const OrderStatSpec spec(rank, sample_size, population_size);  // validates
  return variance_at(static_cast<double>(spec.population_size()), sample_size, rank);
}

double estimator_asymptotic_variance(double lambda) {
  if (!(lambda > 0.0 && lambda < 1.0)) throw ParameterError("lambda must lie in (0, 1)");
  return (1.0 - lambda) / (lambda * lambda);
}

EstimateResult with_standard_error(EstimateResult result, std::int64_t population_size) {
  result.standard_error = std::sqrt(estimator_variance(population_size, result.sample_size, result.rank));
  result.variance_at = population_size;
  return result;
}

EstimateResult with_plug_in_standard_error(EstimateResult result) {
  const double plug_in = std::max(result.estimate, static_cast<double>(result.sample_size));
  result.standard_error = std::sqrt(variance_at(plug_in, result.sample_size, result.rank));
  result.variance_at.reset();
  return result;
}

std::vector<ConsistencyRow> consistency_study(double lambda, double phi,
                                              const std::vector<std::int64_t>& population_sizes,
                                              std::int64_t sims, Rng& rng) {
  if (sims < 0) throw ParameterError("number of simulations must be >= 0");
  std::vector<ConsistencyRow> rows;
  if (sims == 0) return rows;
  for (std::int64_t N : population_sizes) {
    const OrderStatSpec spec = AsymptoticRegime(lambda, phi, N).induced_spec();
    ConsistencyRow row;
    row.population_size = N;
    row.sample_size = spec.sample_size();
    row.rank = spec.rank();
    // Welford accumulation of N_hat / N.
    double m = 0.0;
    double s = 0.0;
    for (std::int64_t i = 0; i < sims; ++i) {
      const std::int64_t x = sample_mixture(spec, rng).x;
      const double ratio =
          estimate_from_kth(spec.sample_size(), spec.rank(), x).estimate / static_cast<double>(N);
      const double d = ratio - m;
      m += d / static_cast<double>(i + 1);
      s += d * (ratio - m);
    }
    row.mean_ratio = m;
    row.sd_ratio = sims > 1 ? std::sqrt(s / static_cast<double>(sims - 1)) : 0.0;
    row.standard_error = row.sd_ratio / std::sqrt(static_cast<double>(sims));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace fpos
