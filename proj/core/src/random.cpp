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

#include "fpos/random.hpp"

#include <array>
#include <cassert>
#include <cmath>

namespace fpos {
namespace {

constexpr double kInversionMeanLimit = 30.0;

constexpr int kReciprocals = 128;

constexpr std::array<double, kReciprocals> make_reciprocals() {
  std::array<double, kReciprocals> table{};
  for (int i = 1; i < kReciprocals; ++i) table[static_cast<std::size_t>(i)] = 1.0 / i;
  return table;
}

constexpr std::array<double, kReciprocals> kReciprocal = make_reciprocals();

double reciprocal(std::int64_t x) {
  return x < kReciprocals ? kReciprocal[static_cast<std::size_t>(x)] : 1.0 / static_cast<double>(x);
}

// base^exponent by repeated squaring; exponent >= 0.
double integer_power(double base, std::int64_t exponent) {
  double result = 1.0;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

// Sequential search from zero; expected cost is about trials * p + 1 steps.
std::int64_t binomial_inversion(Rng& rng, std::int64_t trials, double p) {
  const double q = 1.0 - p;
  const double odds = p / q;
  const double scale = static_cast<double>(trials + 1) * odds;
  for (;;) {
    double mass = integer_power(q, trials);
    double u = uniform01(rng);
    std::int64_t x = 0;
    while (u > mass) {
      u -= mass;
      ++x;
      if (x > trials) break;  // rounding left u stranded above the tail
      mass *= scale * reciprocal(x) - odds;
    }
    if (x <= trials) return x;
  }
}

}  // namespace

std::int64_t binomial_variate(Rng& rng, std::int64_t trials, double p) {
  assert(trials >= 0);
  if (trials == 0 || p <= 0.0) return 0;
  if (p >= 1.0) return trials;
  if (p > 0.5) return trials - binomial_variate(rng, trials, 1.0 - p);
  if (static_cast<double>(trials) * p < kInversionMeanLimit) {
    return binomial_inversion(rng, trials, p);
  }
  std::binomial_distribution<std::int64_t> dist(trials, p);
  return dist(rng);
}

GammaVariate::GammaVariate(double shape) : general_(shape, 1.0) {
  if (shape >= 1.0 && shape <= kSmallIntegerShape && shape == std::floor(shape)) {
    small_integer_shape_ = static_cast<int>(shape);
  }
}

double beta_variate(Rng& rng, double a, double b) {
  GammaVariate ga(a);
  GammaVariate gb(b);
  const double x = ga(rng);
  const double y = gb(rng);
  return x / (x + y);
}

}  // namespace fpos
