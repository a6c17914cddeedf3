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

#ifndef FPOS_RANDOM_HPP_
#define FPOS_RANDOM_HPP_

#include <cmath>
#include <cstdint>
#include <random>

namespace fpos {

// The seedable random stream used throughout the library. Identical seeds
// give identical variate sequences on the same standard library.
using Rng = std::mt19937_64;

// Uniform on [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Uniform on (0, 1].
inline double uniform01_open_below(Rng& rng) {
  return static_cast<double>((rng() >> 11) + 1) * 0x1.0p-53;
}

// Gamma(shape, 1). Integer shapes up to kSmallIntegerShape are drawn as a sum
// of exponentials, -ln(U1 ... Um); other shapes use the standard library.
class GammaVariate {
 public:
  static constexpr int kSmallIntegerShape = 16;

  explicit GammaVariate(double shape);

  double operator()(Rng& rng) {
    if (small_integer_shape_ == 0) return general_(rng);
    double product = uniform01_open_below(rng);
    for (int i = 1; i < small_integer_shape_; ++i) product *= uniform01_open_below(rng);
    return -std::log(product);
  }

 private:
  int small_integer_shape_ = 0;
  std::gamma_distribution<double> general_;
};

// Binomial(trials, p). Inversion for small mean, the standard library's
// rejection sampler otherwise.
std::int64_t binomial_variate(Rng& rng, std::int64_t trials, double p);

// Beta(a, b) as G1 / (G1 + G2) with G1 ~ Gamma(a), G2 ~ Gamma(b).
double beta_variate(Rng& rng, double a, double b);

}  // namespace fpos

#endif  // FPOS_RANDOM_HPP_
