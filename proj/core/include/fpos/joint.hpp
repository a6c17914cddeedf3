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

#ifndef FPOS_JOINT_HPP_
#define FPOS_JOINT_HPP_

// Joint law of several order statistics X(k1) < ... < X(kr) from one
// sample, its Dirichlet-multinomial form, and the conditional laws that make
// X(kr) sufficient for N and the lower order statistics ancillary.

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

namespace fpos {

// Strictly increasing ranks 1 <= k1 < ... < kr <= n <= N, r >= 1.
class RankSet {
 public:
  // Throws ParameterError on any violation.
  RankSet(std::vector<std::int64_t> ranks, std::int64_t sample_size, std::int64_t population_size);

  const std::vector<std::int64_t>& ranks() const { return ranks_; }
  std::int64_t size() const { return static_cast<std::int64_t>(ranks_.size()); }
  std::int64_t sample_size() const { return sample_size_; }
  std::int64_t population_size() const { return population_size_; }

  // Same ranks and sample size with a different population size.
  RankSet with_population_size(std::int64_t population_size) const;

 private:
  std::vector<std::int64_t> ranks_;
  std::int64_t sample_size_;
  std::int64_t population_size_;
};

// Gaps of the observed values and of their ranks, padded at both ends:
//   dx = (x1, x2-x1, ..., xr-x(r-1), N-xr+1),  sum = N+1
//   dk = (k1, k2-k1, ..., kr-k(r-1), n-kr+1),  sum = n+1
struct DeltaVectors {
  std::vector<std::int64_t> dx;
  std::vector<std::int64_t> dk;
};

// Throws ParameterError if `values` has the wrong length or is not strictly
// increasing.
DeltaVectors delta_vectors(std::span<const std::int64_t> values, const RankSet& ranks);

// The r x (r+1) lower-triangular 0/1 matrix whose row i sums the first i
// entries of a vector; it turns multinomial gap counts into cumulative
// offsets.
class SummationMatrix {
 public:
  explicit SummationMatrix(std::int64_t rows) : rows_(rows) {}

  std::int64_t rows() const { return rows_; }
  std::int64_t cols() const { return rows_ + 1; }
  int operator()(std::int64_t row, std::int64_t col) const { return col <= row ? 1 : 0; }

  // Product with a vector of length r+1.
  std::vector<std::int64_t> apply(std::span<const std::int64_t> v) const;

 private:
  std::int64_t rows_;
};

// Product-of-binomials mass. Points off the support, including tied or
// decreasing values, have mass 0. Throws ParameterError on length mismatch.
double joint_pmf(const RankSet& ranks, std::span<const std::int64_t> values);

// Same mass computed independently as DirichletMultinomial(dx - dk | N - n, dk)
// through log-gamma.
double dm_pmf(const RankSet& ranks, std::span<const std::int64_t> values);

// P(X(k_next) = x | X(k_i) = x_i): the FPOS law with
// (k_next - k_i, n - k_i, N - x_i) evaluated at x - x_i.
double conditional_next_pmf(std::int64_t rank_i, std::int64_t value_i, std::int64_t rank_next,
                            std::int64_t sample_size, std::int64_t population_size,
                            std::int64_t x);

// P(X(k1..k(r-1)) = x1..x(r-1) | X(kr) = xr). The expression involves only
// ranks and values, never N. Requires r >= 2.
double conditional_lower_pmf(const RankSet& ranks, std::span<const std::int64_t> values);

// (FPOS(x** | k**, kr - 1, xr - 1), FPOS(xr | kr, n, N)), whose product is
// the joint mass. Requires r >= 2.
std::pair<double, double> factorization_check(const RankSet& ranks,
                                              std::span<const std::int64_t> values);

// Visits every strictly increasing x with k_i <= x_i <= N - n + k_i.
void for_each_support_point(const RankSet& ranks,
                            const std::function<void(std::span<const std::int64_t>)>& visit);

}  // namespace fpos

#endif  // FPOS_JOINT_HPP_
