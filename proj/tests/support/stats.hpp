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

#ifndef FPOS_TESTS_SUPPORT_STATS_HPP_
#define FPOS_TESTS_SUPPORT_STATS_HPP_

#include <cstdint>
#include <vector>

namespace fpos::testing {

struct ChiSquareResult {
  double statistic = 0.0;
  int dof = 0;
  double p_value = 1.0;
};

// Goodness of fit of observed counts against cell probabilities. Adjacent
// cells are pooled left to right until each pooled cell expects at least
// `min_expected` observations.
ChiSquareResult chi_square_gof(const std::vector<double>& observed,
                               const std::vector<double>& probabilities, double min_expected = 5.0);

// Two-sample homogeneity test on paired cell counts, pooled the same way.
ChiSquareResult chi_square_homogeneity(const std::vector<double>& a, const std::vector<double>& b,
                                       double min_expected = 5.0);

double total_variation(const std::vector<double>& p, const std::vector<double>& q);

// Counts of each integer in [lo, hi]; values outside are ignored.
std::vector<double> tally(const std::vector<std::int64_t>& draws, std::int64_t lo, std::int64_t hi);

std::vector<double> normalized(std::vector<double> counts);

}  // namespace fpos::testing

#endif  // FPOS_TESTS_SUPPORT_STATS_HPP_
