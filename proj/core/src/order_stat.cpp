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

#include "fpos/order_stat.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "fpos/error.hpp"

namespace fpos {

OrderStatSpec::OrderStatSpec(std::int64_t rank, std::int64_t sample_size,
                             std::int64_t population_size)
    : rank_(rank), sample_size_(sample_size), population_size_(population_size) {
  if (rank < 1 || rank > sample_size || sample_size > population_size) {
    throw ParameterError("order statistic requires 1 <= k <= n <= N, got k=" +
                         std::to_string(rank) + " n=" + std::to_string(sample_size) +
                         " N=" + std::to_string(population_size));
  }
}

Support support(const OrderStatSpec& spec) {
  return {spec.rank(), spec.population_size() - spec.sample_size() + spec.rank()};
}

double log_pmf(const OrderStatSpec& spec, std::int64_t x) {
  if (!support(spec).contains(x)) return -std::numeric_limits<double>::infinity();
  const auto k = spec.rank();
  const auto n = spec.sample_size();
  const auto N = spec.population_size();
  return log_choose(x - 1, k - 1) + log_choose(N - x, n - k) - log_choose(N, n);
}

double pmf(const OrderStatSpec& spec, std::int64_t x) {
  if (!support(spec).contains(x)) return 0.0;
  return std::exp(log_pmf(spec, x));
}

std::vector<double> pmf_table(const OrderStatSpec& spec, const LogFactorials& lf) {
  const auto k = spec.rank();
  const auto n = spec.sample_size();
  const auto N = spec.population_size();
  if (lf.max() < N) throw ParameterError("log-factorial table too short for N=" + std::to_string(N));
  const Support s = support(spec);
  const double log_total = lf.choose(N, n);
  std::vector<double> masses;
  masses.reserve(static_cast<std::size_t>(s.size()));
  for (std::int64_t x = s.lo; x <= s.hi; ++x) {
    masses.push_back(std::exp(lf.choose(x - 1, k - 1) + lf.choose(N - x, n - k) - log_total));
  }
  return masses;
}

std::vector<double> pmf_table(const OrderStatSpec& spec) {
  return pmf_table(spec, LogFactorials(spec.population_size()));
}

Rational exact_pmf(const OrderStatSpec& spec, std::int64_t x) {
  const auto N = spec.population_size();
  if (N > kExactMaxPopulation) {
    throw ResourceError("exact arithmetic limited to N <= " + std::to_string(kExactMaxPopulation));
  }
  if (!support(spec).contains(x)) return Rational(0);
  const auto k = spec.rank();
  const auto n = spec.sample_size();
  return Rational(exact_choose(x - 1, k - 1) * exact_choose(N - x, n - k), exact_choose(N, n));
}

double cdf(const OrderStatSpec& spec, std::int64_t x) {
  const Support s = support(spec);
  if (x < s.lo) return 0.0;
  if (x >= s.hi) return 1.0;
  double total = 0.0;
  for (std::int64_t i = s.lo; i <= x; ++i) total += pmf(spec, i);
  // The top support point carries positive mass, so the cdf stays below 1
  // there even when the running sum rounds up.
  return std::min(total, std::nextafter(1.0, 0.0));
}

std::int64_t quantile(const OrderStatSpec& spec, double p) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw ParameterError("quantile probability must lie in (0, 1], got " + std::to_string(p));
  }
  const Support s = support(spec);
  double total = 0.0;
  for (std::int64_t x = s.lo; x < s.hi; ++x) {
    total += pmf(spec, x);
    if (std::min(total, std::nextafter(1.0, 0.0)) >= p) return x;
  }
  return s.hi;
}

double factorial_moment(const OrderStatSpec& spec, std::int64_t r) {
  if (r < 0) throw ParameterError("factorial moment order must be >= 0, got " + std::to_string(r));
  const double k = static_cast<double>(spec.rank());
  const double n = static_cast<double>(spec.sample_size());
  const double N = static_cast<double>(spec.population_size());
  double result = 1.0;
  for (std::int64_t i = 0; i < r; ++i) {
    const double d = static_cast<double>(i);
    result *= (N + 1.0 + d) * (k + d) / (n + 1.0 + d);
  }
  return result;
}

Rational exact_factorial_moment(const OrderStatSpec& spec, std::int64_t r) {
  if (r < 0) throw ParameterError("factorial moment order must be >= 0, got " + std::to_string(r));
  return Rational(exact_rising_factorial(spec.population_size() + 1, r) *
                      exact_rising_factorial(spec.rank(), r),
                  exact_rising_factorial(spec.sample_size() + 1, r));
}

double mean(const OrderStatSpec& spec) {
  return static_cast<double>(spec.population_size() + 1) * static_cast<double>(spec.rank()) /
         static_cast<double>(spec.sample_size() + 1);
}

double variance(const OrderStatSpec& spec) {
  const double k = static_cast<double>(spec.rank());
  const double n = static_cast<double>(spec.sample_size());
  const double N = static_cast<double>(spec.population_size());
  return (N + 1.0) * (N - n) / ((n + 1.0) * (n + 1.0) * (n + 2.0)) * k * (n - k + 1.0);
}

double skewness(const OrderStatSpec& spec) {
  if (spec.is_census()) throw DegenerateDistributionError("skewness undefined for n == N (zero variance)");
  const double k = static_cast<double>(spec.rank());
  const double n = static_cast<double>(spec.sample_size());
  const double N = static_cast<double>(spec.population_size());
  return (n - 2.0 * k + 1.0) * (1.0 + 2.0 * (N - n - 1.0) / (n + 3.0)) *
         std::sqrt((n + 2.0) / ((N + 1.0) * (N - n) * k * (n - k + 1.0)));
}

double kurtosis(const OrderStatSpec& spec) {
  if (spec.is_census()) throw DegenerateDistributionError("kurtosis undefined for n == N (zero variance)");
  const double k = static_cast<double>(spec.rank());
  const double n = static_cast<double>(spec.sample_size());
  const double N = static_cast<double>(spec.population_size());
  const double spread = k * (n - k + 1.0);
  const double n34 = (n + 3.0) * (n + 4.0);
  const double np1sq = (n + 1.0) * (n + 1.0);
  const double bracket = n * np1sq * (n + 1.0) * (n + 2.0) / ((N - n) * n34 * spread) -
                         6.0 * np1sq * (n + 2.0) / ((N - n) * n34) +
                         6.0 * (N + 1.0) * np1sq * (n + 2.0) / (n34 * spread) -
                         6.0 * (N + 1.0) * (5.0 * n + 11.0) / n34;
  return 3.0 + bracket / (N + 1.0);
}

MomentSet moments(const OrderStatSpec& spec) {
  MomentSet m;
  m.mean = mean(spec);
  m.variance = variance(spec);
  if (!spec.is_census()) {
    m.skewness = skewness(spec);
    m.kurtosis = kurtosis(spec);
  }
  return m;
}

ExactMoments exact_moments(const OrderStatSpec& spec) {
  const Rational f1 = exact_factorial_moment(spec, 1);
  const Rational f2 = exact_factorial_moment(spec, 2);
  const Rational f3 = exact_factorial_moment(spec, 3);
  const Rational f4 = exact_factorial_moment(spec, 4);
  // Raw moments from rising factorial moments (Stirling numbers of the
  // first kind).
  const Rational e1 = f1;
  const Rational e2 = f2 - e1;
  const Rational e3 = f3 - 3 * e2 - 2 * e1;
  const Rational e4 = f4 - 6 * e3 - 11 * e2 - 6 * e1;
  const Rational mu = e1;

  ExactMoments m;
  m.mean = mu;
  m.variance = e2 - mu * mu;
  m.third_central = e3 - 3 * mu * e2 + 2 * mu * mu * mu;
  m.fourth_central = e4 - 4 * mu * e3 + 6 * mu * mu * e2 - 3 * mu * mu * mu * mu;
  if (m.variance != 0) m.kurtosis = m.fourth_central / (m.variance * m.variance);
  return m;
}

ScaledMoments scaled_moments(const OrderStatSpec& spec) {
  const double k = static_cast<double>(spec.rank());
  const double n = static_cast<double>(spec.sample_size());
  const double N = static_cast<double>(spec.population_size());
  ScaledMoments m;
  m.mean = k / (n + 1.0);
  m.variance = (N - n) / (N + 1.0) * k * (n - k + 1.0) / ((n + 1.0) * (n + 1.0) * (n + 2.0));
  return m;
}

MixtureDraw sample_mixture(const OrderStatSpec& spec, Rng& rng) {
  const auto k = spec.rank();
  const auto n = spec.sample_size();
  const auto N = spec.population_size();
  MixtureDraw draw;
  draw.u = beta_variate(rng, static_cast<double>(k), static_cast<double>(n - k + 1));
  draw.x = k + binomial_variate(rng, N - n, draw.u);
  return draw;
}

std::vector<std::int64_t> sample(const OrderStatSpec& spec, Rng& rng, std::int64_t count) {
  if (count < 0) throw ParameterError("sample count must be >= 0, got " + std::to_string(count));
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(count));
  for (std::int64_t i = 0; i < count; ++i) out.push_back(sample_mixture(spec, rng).x);
  return out;
}

}  // namespace fpos
