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

#ifndef FPOS_BAYES_HPP_
#define FPOS_BAYES_HPP_

// Bayesian inference for the population size N from one observed order
// statistic X(k) = x in a sample of size n.
//
// The posterior is L_x(i) pi0(i) / H with
//   L_x(N) = (N-n)! (N-x)! / (N! (N-n-x+k)!)
// and H = sum_N L_x(N) pi0(N). Posterior factorial moments are ratios
// E[(N)_r] = H(n-r, k-r, x-r, pi_r) / H(n, k, x, pi0) with the shifted prior
// pi_r(j) = pi0(j + r). Infinite sums are truncated at a point N* chosen so
// that a certified bound on the discarded tail stays below the tolerance.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace fpos {

// Proper prior over population sizes N >= 1.
class PriorSpec {
 public:
  using Function = std::function<double(std::int64_t)>;

  // `mass` must be a pure function of N. `tail`, when present, must bound
  // sum_{N > M} mass(N) from above for every M. With `support_max` present
  // the masses on [support_min, support_max] must sum to 1 within 1e-12.
  // Throws ParameterError on a detectable violation.
  PriorSpec(Function mass, std::optional<Function> tail, std::int64_t support_min,
            std::optional<std::int64_t> support_max);

  // Uniform on {lo, ..., hi}.
  static PriorSpec uniform(std::int64_t lo, std::int64_t hi);
  static PriorSpec point_mass(std::int64_t value);
  // mass(N) proportional to N^-alpha for N >= n_min; alpha > 1.
  static PriorSpec power_law(double alpha, std::int64_t n_min);

  // "uniform:a,b", "pointmass:N0" or "powerlaw:alpha,Nmin".
  static PriorSpec parse(const std::string& text);

  // Zero outside [support_min, support_max].
  double mass(std::int64_t value) const;
  // Upper bound on sum_{N > after} mass(N), if one is known.
  std::optional<double> tail(std::int64_t after) const;

  std::int64_t support_min() const { return support_min_; }
  const std::optional<std::int64_t>& support_max() const { return support_max_; }
  bool finite_support() const { return support_max_.has_value(); }

 private:
  Function mass_;
  std::optional<Function> tail_;
  std::int64_t support_min_;
  std::optional<std::int64_t> support_max_;
};

// The true H lies in [value, value + error_bound].
struct HValue {
  double value = 0.0;
  std::int64_t truncation_point = 0;
  double error_bound = 0.0;

  double upper() const { return value + error_bound; }
};

// A value known to lie within +/- error_bound.
struct CertifiedValue {
  double value = 0.0;
  double error_bound = 0.0;
};

inline constexpr double kDefaultTolerance = 1e-10;
// Largest truncation point the certified sums will use.
inline constexpr std::int64_t kMaxTruncationPoint = 50'000'000;

// L_x(N); zero when N < n + x - k. Throws ParameterError unless n >= 1,
// 1 <= k <= n and x >= k.
double likelihood(std::int64_t population_size, std::int64_t sample_size, std::int64_t rank,
                  std::int64_t value);

// H(n, k, x, pi0) with error_bound <= tol. Throws CertificationError when the
// available tail information cannot reach tol (k = 1 without a tail envelope
// or finite support, or a truncation point beyond kMaxTruncationPoint).
HValue h_function(std::int64_t sample_size, std::int64_t rank, std::int64_t value,
                  const PriorSpec& prior, double tol = kDefaultTolerance);

// H summed exactly up to a caller-chosen truncation point, with the certified
// bound on everything beyond it. The bound is infinite when no bound exists.
HValue h_function_truncated(std::int64_t sample_size, std::int64_t rank, std::int64_t value,
                            const PriorSpec& prior, std::int64_t truncation_point);

// H(n - r, k - r, x - r, pi_r).
HValue shifted_h_function(std::int64_t shift, std::int64_t sample_size, std::int64_t rank,
                          std::int64_t value, const PriorSpec& prior, double tol = kDefaultTolerance);

// P(N = i | x). Throws InconsistentPriorError when the prior puts no mass on
// any N compatible with the observation.
double posterior_pmf(std::int64_t population_size, std::int64_t sample_size, std::int64_t rank,
                     std::int64_t value, const PriorSpec& prior, double tol = kDefaultTolerance);

struct Posterior {
  std::int64_t support_min = 0;
  // Masses for N = support_min, support_min + 1, ..., normalizer.truncation_point.
  std::vector<double> masses;
  HValue normalizer;
};

Posterior posterior(std::int64_t sample_size, std::int64_t rank, std::int64_t value,
                    const PriorSpec& prior, double tol = kDefaultTolerance);

// E[N (N-1) ... (N-r+1) | x] as an H ratio, with the error propagated from
// both certified sums. Needs r <= k unless the prior has finite support;
// otherwise throws CertificationError.
CertifiedValue posterior_factorial_moment(std::int64_t order, std::int64_t sample_size,
                                          std::int64_t rank, std::int64_t value,
                                          const PriorSpec& prior, double tol = kDefaultTolerance);

struct PosteriorMoments {
  CertifiedValue mean;
  CertifiedValue variance;
};

// Mean E[(N)_1] and variance E[(N)_2] + E[N] - E[N]^2.
PosteriorMoments posterior_mean_variance(std::int64_t sample_size, std::int64_t rank,
                                         std::int64_t value, const PriorSpec& prior,
                                         double tol = kDefaultTolerance);

}  // namespace fpos

#endif  // FPOS_BAYES_HPP_
