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

#include "fpos/oracle.hpp"

#include <string>

#include "fpos/error.hpp"

namespace fpos::oracle {
namespace {

template <typename Key>
std::map<Key, Rational> normalize(const std::map<Key, std::uint64_t>& counts, std::uint64_t total) {
  std::map<Key, Rational> masses;
  for (const auto& [key, count] : counts) masses.emplace(key, Rational(count, total));
  return masses;
}

}  // namespace

BigInt subset_count(std::int64_t population_size, std::int64_t sample_size) {
  return exact_choose(population_size, sample_size);
}

void for_each_subset(std::int64_t population_size, std::int64_t sample_size,
                     const EnumerationBudget& budget,
                     const std::function<void(std::span<const std::int64_t>)>& visit) {
  if (sample_size < 0 || sample_size > population_size) {
    throw ParameterError("subset enumeration needs 0 <= n <= N");
  }
  const BigInt count = subset_count(population_size, sample_size);
  if (count > budget.max_subsets) {
    throw ResourceError("enumeration of C(" + std::to_string(population_size) + ", " +
                        std::to_string(sample_size) + ") = " + count.str() +
                        " subsets exceeds budget of " + std::to_string(budget.max_subsets));
  }
  const auto n = static_cast<std::size_t>(sample_size);
  std::vector<std::int64_t> subset(n);
  for (std::size_t i = 0; i < n; ++i) subset[i] = static_cast<std::int64_t>(i) + 1;
  for (;;) {
    visit(subset);
    // Advance the rightmost element that still has room, then reset the tail.
    std::size_t i = n;
    while (i > 0 && subset[i - 1] == population_size - static_cast<std::int64_t>(n - i)) --i;
    if (i == 0) return;
    ++subset[i - 1];
    for (std::size_t j = i; j < n; ++j) subset[j] = subset[j - 1] + 1;
  }
}

MassTable enumerate_pmf(const OrderStatSpec& spec, const EnumerationBudget& budget) {
  std::map<std::int64_t, std::uint64_t> counts;
  std::uint64_t total = 0;
  const auto index = static_cast<std::size_t>(spec.rank() - 1);
  for_each_subset(spec.population_size(), spec.sample_size(), budget,
                  [&](std::span<const std::int64_t> subset) {
                    ++counts[subset[index]];
                    ++total;
                  });
  return normalize(counts, total);
}

JointMassTable enumerate_joint_pmf(const RankSet& ranks, const EnumerationBudget& budget) {
  std::map<std::vector<std::int64_t>, std::uint64_t> counts;
  std::uint64_t total = 0;
  std::vector<std::int64_t> key(ranks.ranks().size());
  for_each_subset(ranks.population_size(), ranks.sample_size(), budget,
                  [&](std::span<const std::int64_t> subset) {
                    for (std::size_t i = 0; i < key.size(); ++i) {
                      key[i] = subset[static_cast<std::size_t>(ranks.ranks()[i] - 1)];
                    }
                    ++counts[key];
                    ++total;
                  });
  return normalize(counts, total);
}

Rational enumerate_expectation(const OrderStatSpec& spec,
                               const std::function<Rational(std::int64_t)>& f,
                               const EnumerationBudget& budget) {
  Rational total = 0;
  for (const auto& [x, mass] : enumerate_pmf(spec, budget)) total += f(x) * mass;
  return total;
}

}  // namespace fpos::oracle
