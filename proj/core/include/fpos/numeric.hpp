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

#ifndef FPOS_NUMERIC_HPP_
#define FPOS_NUMERIC_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fpos {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// ln(n!) for n >= 0.
double log_factorial(std::int64_t n);

// ln C(n, k); -infinity when the coefficient is structurally zero
// (k < 0, k > n or n < 0).
double log_choose(std::int64_t n, std::int64_t k);

// Exact C(n, k); zero when structurally zero.
BigInt exact_choose(std::int64_t n, std::int64_t k);

// Rising factorial a (a+1) ... (a+r-1); r = 0 gives 1.
double rising_factorial(double a, std::int64_t r);
BigInt exact_rising_factorial(std::int64_t a, std::int64_t r);

// Table of ln(i!) for i in [0, max]. Lookups are bounds-checked in debug only.
class LogFactorials {
 public:
  explicit LogFactorials(std::int64_t max);

  std::int64_t max() const { return static_cast<std::int64_t>(table_.size()) - 1; }
  double operator()(std::int64_t i) const { return table_[static_cast<std::size_t>(i)]; }

  // ln C(n, k) with the same zero convention as log_choose.
  double choose(std::int64_t n, std::int64_t k) const;

 private:
  std::vector<double> table_;
};

// "p/q" in lowest terms ("p" when q == 1).
std::string to_fraction_string(const Rational& value);

double to_double(const Rational& value);

}  // namespace fpos

#endif  // FPOS_NUMERIC_HPP_
