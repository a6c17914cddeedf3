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

#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "fpos/numeric.hpp"

namespace fpos {
namespace {

TEST(LogFactorial, SmallValues) {
  EXPECT_DOUBLE_EQ(log_factorial(0), 0.0);
  EXPECT_DOUBLE_EQ(log_factorial(1), 0.0);
  EXPECT_NEAR(log_factorial(5), std::log(120.0), 1e-14);
  EXPECT_NEAR(log_factorial(20), std::log(2432902008176640000.0), 1e-12);
}

TEST(LogChoose, StructuralZeros) {
  const double ninf = -std::numeric_limits<double>::infinity();
  EXPECT_EQ(log_choose(5, -1), ninf);
  EXPECT_EQ(log_choose(5, 6), ninf);
  EXPECT_EQ(log_choose(-1, 0), ninf);
  EXPECT_DOUBLE_EQ(log_choose(7, 0), 0.0);
  EXPECT_NEAR(std::exp(log_choose(10, 3)), 120.0, 1e-10);
}

TEST(ExactChoose, MatchesPascal) {
  for (int n = 0; n <= 30; ++n) {
    for (int k = 1; k < n; ++k) {
      EXPECT_EQ(exact_choose(n, k), exact_choose(n - 1, k - 1) + exact_choose(n - 1, k));
    }
  }
  EXPECT_EQ(exact_choose(64, 32), BigInt("1832624140942590534"));
  EXPECT_EQ(exact_choose(3, 5), 0);
}

TEST(RisingFactorial, Values) {
  EXPECT_DOUBLE_EQ(rising_factorial(3.0, 0), 1.0);
  EXPECT_DOUBLE_EQ(rising_factorial(3.0, 3), 60.0);
  EXPECT_EQ(exact_rising_factorial(4, 4), 4 * 5 * 6 * 7);
}

TEST(LogFactorials, TableAgreesWithFunction) {
  LogFactorials lf(200);
  EXPECT_EQ(lf.max(), 200);
  for (int i = 0; i <= 200; i += 7) EXPECT_NEAR(lf(i), log_factorial(i), 1e-9);
  EXPECT_NEAR(lf.choose(50, 20), log_choose(50, 20), 1e-9);
  EXPECT_EQ(lf.choose(5, 6), -std::numeric_limits<double>::infinity());
}

TEST(Fractions, Formatting) {
  EXPECT_EQ(to_fraction_string(Rational(2, 3)), "2/3");
  EXPECT_EQ(to_fraction_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_fraction_string(Rational(-1, 4)), "-1/4");
  EXPECT_DOUBLE_EQ(to_double(Rational(1, 4)), 0.25);
}

}  // namespace
}  // namespace fpos
