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

#ifndef FPOS_ORACLE_HPP_
#define FPOS_ORACLE_HPP_

// Ground truth by brute force: every one of the C(N, n) equally likely
// samples is listed, sorted, and tallied. Nothing here uses the closed-form
// masses, so the results can check them.

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "fpos/joint.hpp"
#include "fpos/numeric.hpp"
#include "fpos/order_stat.hpp"

namespace fpos::oracle {

struct EnumerationBudget {
  std::uint64_t max_subsets = 10'000'000;
};

using MassTable = std::map<std::int64_t, Rational>;
using JointMassTable = std::map<std::vector<std::int64_t>, Rational>;

// Number of subsets the enumeration would visit.
BigInt subset_count(std::int64_t population_size, std::int64_t sample_size);

// Calls `visit` with each size-n subset of {1..N} in lexicographic order.
// Throws ResourceError if C(N, n) exceeds the budget.
void for_each_subset(std::int64_t population_size, std::int64_t sample_size,
                     const EnumerationBudget& budget,
                     const std::function<void(std::span<const std::int64_t>)>& visit);

// Exact law of X(k); keys cover exactly the attained values.
MassTable enumerate_pmf(const OrderStatSpec& spec, const EnumerationBudget& budget = {});

// Exact joint law of (X(k1), ..., X(kr)).
JointMassTable enumerate_joint_pmf(const RankSet& ranks, const EnumerationBudget& budget = {});

// E[f(X(k))] in exact arithmetic.
Rational enumerate_expectation(const OrderStatSpec& spec,
                               const std::function<Rational(std::int64_t)>& f,
                               const EnumerationBudget& budget = {});

}  // namespace fpos::oracle

#endif  // FPOS_ORACLE_HPP_
