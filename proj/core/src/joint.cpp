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

#include "fpos/joint.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fpos/error.hpp"
#include "fpos/numeric.hpp"
#include "fpos/order_stat.hpp"

namespace fpos {
namespace {

bool strictly_increasing(std::span<const std::int64_t> v) {
  return std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
}

void check_length(const RankSet& ranks, std::span<const std::int64_t> values) {
  if (static_cast<std::int64_t>(values.size()) != ranks.size()) {
    throw ParameterError("expected " + std::to_string(ranks.size()) + " order statistic values, got " +
                         std::to_string(values.size()));
  }
}

// ln of C(x1-1, k1-1) * prod C(x(i+1)-xi-1, k(i+1)-ki-1).
double log_lower_binomials(std::span<const std::int64_t> ranks, std::span<const std::int64_t> values) {
  double total = log_choose(values[0] - 1, ranks[0] - 1);
  for (std::size_t i = 1; i < values.size(); ++i) {
    total += log_choose(values[i] - values[i - 1] - 1, ranks[i] - ranks[i - 1] - 1);
  }
  return total;
}

}  // namespace

RankSet::RankSet(std::vector<std::int64_t> ranks, std::int64_t sample_size,
                 std::int64_t population_size)
    : ranks_(std::move(ranks)), sample_size_(sample_size), population_size_(population_size) {
  if (ranks_.empty()) throw ParameterError("rank set must contain at least one rank");
  if (!strictly_increasing(ranks_)) throw ParameterError("ranks must be strictly increasing");
  if (ranks_.front() < 1 || ranks_.back() > sample_size_ || sample_size_ > population_size_) {
    throw ParameterError("ranks require 1 <= k1 and kr <= n <= N, got n=" + std::to_string(sample_size_) +
                         " N=" + std::to_string(population_size_));
  }
}

RankSet RankSet::with_population_size(std::int64_t population_size) const {
  return RankSet(ranks_, sample_size_, population_size);
}

DeltaVectors delta_vectors(std::span<const std::int64_t> values, const RankSet& ranks) {
  check_length(ranks, values);
  if (!strictly_increasing(values)) throw ParameterError("order statistic values must be strictly increasing");
  const auto& k = ranks.ranks();
  const std::size_t r = values.size();
  DeltaVectors d;
  d.dx.resize(r + 1);
  d.dk.resize(r + 1);
  d.dx[0] = values[0];
  d.dk[0] = k[0];
  for (std::size_t i = 1; i < r; ++i) {
    d.dx[i] = values[i] - values[i - 1];
    d.dk[i] = k[i] - k[i - 1];
  }
  d.dx[r] = ranks.population_size() - values[r - 1] + 1;
  d.dk[r] = ranks.sample_size() - k[r - 1] + 1;
  return d;
}

std::vector<std::int64_t> SummationMatrix::apply(std::span<const std::int64_t> v) const {
  if (static_cast<std::int64_t>(v.size()) != cols()) {
    throw ParameterError("summation matrix expects a vector of length " + std::to_string(cols()));
  }
  std::vector<std::int64_t> out(static_cast<std::size_t>(rows_));
  std::int64_t running = 0;
  for (std::size_t i = 0; i < out.size(); ++i) {
    running += v[i];
    out[i] = running;
  }
  return out;
}

double joint_pmf(const RankSet& ranks, std::span<const std::int64_t> values) {
  check_length(ranks, values);
  if (!strictly_increasing(values)) return 0.0;
  const auto n = ranks.sample_size();
  const auto N = ranks.population_size();
  const double log_mass = log_lower_binomials(ranks.ranks(), values) +
                          log_choose(N - values.back(), n - ranks.ranks().back()) - log_choose(N, n);
  return std::exp(log_mass);
}

double dm_pmf(const RankSet& ranks, std::span<const std::int64_t> values) {
  check_length(ranks, values);
  if (!strictly_increasing(values)) return 0.0;
  const DeltaVectors d = delta_vectors(values, ranks);
  const double trials = static_cast<double>(ranks.population_size() - ranks.sample_size());
  const double concentration = static_cast<double>(ranks.sample_size() + 1);
  double log_mass = std::lgamma(trials + 1.0) + std::lgamma(concentration) -
                    std::lgamma(trials + concentration);
  for (std::size_t i = 0; i < d.dx.size(); ++i) {
    const std::int64_t count = d.dx[i] - d.dk[i];
    if (count < 0) return 0.0;
    const double c = static_cast<double>(count);
    const double alpha = static_cast<double>(d.dk[i]);
    log_mass += std::lgamma(c + alpha) - std::lgamma(c + 1.0) - std::lgamma(alpha);
  }
  return std::exp(log_mass);
}

double conditional_next_pmf(std::int64_t rank_i, std::int64_t value_i, std::int64_t rank_next,
                            std::int64_t sample_size, std::int64_t population_size,
                            std::int64_t x) {
  if (rank_i < 1 || rank_next <= rank_i || rank_next > sample_size || value_i < rank_i ||
      population_size - value_i < sample_size - rank_i) {
    throw ParameterError("invalid conditioning: need 1 <= k_i < k_next <= n, k_i <= x_i <= N - n + k_i");
  }
  const OrderStatSpec rest(rank_next - rank_i, sample_size - rank_i, population_size - value_i);
  return pmf(rest, x - value_i);
}

double conditional_lower_pmf(const RankSet& ranks, std::span<const std::int64_t> values) {
  if (ranks.size() < 2) throw ParameterError("conditional law needs at least two ranks");
  check_length(ranks, values);
  if (!strictly_increasing(values)) return 0.0;
  const double log_top = log_choose(values.back() - 1, ranks.ranks().back() - 1);
  if (std::isinf(log_top)) return 0.0;
  return std::exp(log_lower_binomials(ranks.ranks(), values) - log_top);
}

std::pair<double, double> factorization_check(const RankSet& ranks,
                                              std::span<const std::int64_t> values) {
  if (ranks.size() < 2) throw ParameterError("factorization needs at least two ranks");
  check_length(ranks, values);
  const auto& k = ranks.ranks();
  const std::int64_t top_rank = k.back();
  const std::int64_t top_value = values.back();
  const OrderStatSpec top(top_rank, ranks.sample_size(), ranks.population_size());
  if (!support(top).contains(top_value)) return {0.0, 0.0};

  const RankSet lower(std::vector<std::int64_t>(k.begin(), k.end() - 1), top_rank - 1, top_value - 1);
  const double lower_mass = joint_pmf(lower, values.first(values.size() - 1));
  return {lower_mass, pmf(top, top_value)};
}

void for_each_support_point(const RankSet& ranks,
                            const std::function<void(std::span<const std::int64_t>)>& visit) {
  const auto& k = ranks.ranks();
  const std::int64_t slack = ranks.population_size() - ranks.sample_size();
  const std::size_t r = k.size();
  std::vector<std::int64_t> x(r);
  std::size_t depth = 0;
  x[0] = k[0];
  // Odometer over strictly increasing vectors with x_i in [k_i, k_i + slack].
  for (;;) {
    if (x[depth] > k[depth] + slack) {
      if (depth == 0) return;
      --depth;
      ++x[depth];
      continue;
    }
    if (depth + 1 == r) {
      visit(x);
      ++x[depth];
      continue;
    }
    ++depth;
    x[depth] = std::max(k[depth], x[depth - 1] + 1);
  }
}

}  // namespace fpos
