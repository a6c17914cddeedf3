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

#ifndef FPOS_SAMPLER_HPP_
#define FPOS_SAMPLER_HPP_

// Order statistics of a sample drawn without replacement from an arbitrary
// finite population (duplicates allowed). Values are reached through the
// rank map omega(x) = z(x), the x-th smallest population value.
//
// Two samplers produce the same law:
//   * the rank-based sampler draws Dirichlet gaps from unit-scale gammas,
//     spreads the N - n unsampled units over them with one multinomial, and
//     accumulates the counts onto the ranks; it never builds the sample;
//   * the naive sampler draws the whole sample, sorts it and reads off ranks.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "fpos/random.hpp"

namespace fpos {

// Sorted finite multiset z(1) <= ... <= z(N), N >= 1.
class Population {
 public:
  // Sorts `values`; throws ParameterError if empty or non-finite.
  explicit Population(std::vector<double> values);

  // 1..N.
  static Population identity(std::int64_t size);

  // One decimal value per line; blank lines and lines starting with '#' are
  // skipped. Throws ParameterError on malformed input.
  static Population read(std::istream& in);
  static Population load(const std::string& path);

  std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }
  const std::vector<double>& values() const { return values_; }

  // omega(rank) for rank in [1, N].
  double at_rank(std::int64_t rank) const { return values_[static_cast<std::size_t>(rank - 1)]; }

  // omega^-1(z) as the 1-based closed rank interval holding value z; empty
  // (first > last) when z does not occur.
  std::pair<std::int64_t, std::int64_t> ranks_of(double value) const;

 private:
  std::vector<double> values_;
};

struct SimulationRequest {
  Population population;
  std::int64_t sample_size = 0;
  // Distinct ranks in [1, sample_size], in any order; output columns follow
  // this order.
  std::vector<std::int64_t> ranks;
  std::int64_t sims = 0;

  // Throws ParameterError on any violation.
  void validate() const;
};

// sims x r values, row-major, one simulation per row.
struct SampleMatrix {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::vector<double> values;

  double at(std::int64_t row, std::int64_t col) const {
    return values[static_cast<std::size_t>(row * cols + col)];
  }
};

// Reusable per-request state for the rank-based method.
class RankSampler {
 public:
  explicit RankSampler(const SimulationRequest& request);

  // Writes one simulation (r values, caller rank order) into `row`.
  void draw(Rng& rng, double* row);

  // Ranks X(k1..kr) of the most recent draw, in ascending rank order.
  const std::vector<std::int64_t>& last_ranks() const { return positions_; }

 private:
  const Population* population_;
  std::int64_t trials_;
  std::vector<std::int64_t> sorted_ranks_;
  std::vector<std::size_t> output_slot_;
  std::vector<GammaVariate> gammas_;
  std::vector<double> weights_;
  std::vector<std::int64_t> positions_;
};

// Reusable per-request state for the sample-and-sort method.
class NaiveSampler {
 public:
  explicit NaiveSampler(const SimulationRequest& request);

  void draw(Rng& rng, double* row);

 private:
  const Population* population_;
  std::int64_t sample_size_;
  std::vector<std::int64_t> ranks_;
  std::vector<std::int64_t> indices_;
  std::vector<std::int64_t> sample_;
};

SampleMatrix sample_order_stats(const SimulationRequest& request, Rng& rng);
SampleMatrix naive_sample_order_stats(const SimulationRequest& request, Rng& rng);

// P(Z(k) = z): the FPOS mass summed over omega^-1(z); 0 if z is not attained.
double generalized_pmf(const Population& population, std::int64_t rank, std::int64_t sample_size,
                       double value);

// (value, mass) for every distinct attainable value, ascending.
std::vector<std::pair<double, double>> generalized_distribution(const Population& population,
                                                                std::int64_t rank,
                                                                std::int64_t sample_size);

// E[f(Z(k))] = sum over the support of f(omega(x)) FPOS(x | k, n, N).
double generalized_expectation(const Population& population, std::int64_t rank,
                               std::int64_t sample_size, const std::function<double(double)>& f);

// CSV, one simulation per row, columns in caller rank order, LF endings.
void write_csv(std::ostream& out, const SampleMatrix& samples);

// Timing unit: the time to sort the descending sequence 1000..1 ascending.
struct KilosortCalibration {
  double seconds = 0.0;           // median over samples
  std::vector<double> samples_ns;
};

// Median over `repetitions` (>= 25) timed sorts, after one warm-up sort.
KilosortCalibration kilosort_unit(int repetitions = 25);

struct BenchReport {
  // Medians per repetition, in kilosorts.
  double method_time_kilosorts = 0.0;
  double baseline_time_kilosorts = 0.0;
  double method_mean_kilosorts = 0.0;
  double baseline_mean_kilosorts = 0.0;
  double kilosort_ns = 0.0;
  double kilosort_before_ns = 0.0;
  double kilosort_after_ns = 0.0;
  std::vector<double> method_raw_ns;
  std::vector<double> baseline_raw_ns;
  std::int64_t sims = 0;
  int repetitions = 0;
  // True when there was nothing to time (sims == 0 or repetitions == 0); the
  // time fields are then zero.
  bool empty = false;

  double ratio() const { return method_time_kilosorts / baseline_time_kilosorts; }
};

// Times both samplers on identical requests, `repetitions` times each with
// interleaved order, and reports them in kilosorts.
BenchReport benchmark(const SimulationRequest& request, int repetitions, std::uint64_t seed = 1);

}  // namespace fpos

#endif  // FPOS_SAMPLER_HPP_
