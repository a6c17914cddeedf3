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

#include "fpos/numeric.hpp"

#include <cassert>
#include <cmath>
#include <limits>

namespace fpos {

double log_factorial(std::int64_t n) {
  assert(n >= 0);
  return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_choose(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  if (k == 0 || k == n) return 0.0;
  return log_factorial(n) - log_factorial(k) - log_factorial(n - k);
}

BigInt exact_choose(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  // result * (n - i) / (i + 1) is C(n, i + 1) at every step, so the division
  // is exact.
  for (std::int64_t i = 0; i < k; ++i) {
    result *= (n - i);
    result /= (i + 1);
  }
  return result;
}

double rising_factorial(double a, std::int64_t r) {
  double product = 1.0;
  for (std::int64_t i = 0; i < r; ++i) product *= a + static_cast<double>(i);
  return product;
}

BigInt exact_rising_factorial(std::int64_t a, std::int64_t r) {
  BigInt product = 1;
  for (std::int64_t i = 0; i < r; ++i) product *= a + i;
  return product;
}

LogFactorials::LogFactorials(std::int64_t max) : table_(static_cast<std::size_t>(max) + 1) {
  assert(max >= 0);
  // Running sums of logs drift for large tables; lgamma keeps every entry at
  // full precision.
  for (std::size_t i = 0; i < table_.size(); ++i) {
    table_[i] = std::lgamma(static_cast<double>(i) + 1.0);
  }
}

double LogFactorials::choose(std::int64_t n, std::int64_t k) const {
  if (n < 0 || k < 0 || k > n) return -std::numeric_limits<double>::infinity();
  return (*this)(n) - (*this)(k) - (*this)(n - k);
}

std::string to_fraction_string(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

double to_double(const Rational& value) { return value.convert_to<double>(); }

}  // namespace fpos
