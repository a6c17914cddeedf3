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

#include "fpos/sampler.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <set>

#include "fpos/error.hpp"
#include "fpos/order_stat.hpp"

namespace fpos {
namespace {

double median_of(std::vector<double> v) {
  if (v.empty()) return 0.0;
  const std::size_t mid = v.size() / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid), v.end());
  const double upper = v[mid];
  if (v.size() % 2 == 1) return upper;
  const double lower = *std::max_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(mid));
  return 0.5 * (lower + upper);
}

double mean_of(const std::vector<double>& v) {
  if (v.empty()) return 0.0;
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Keeps a computed value observable so the optimizer cannot drop the work
// that produced it.
void consume(double value) {
  static volatile double sink = 0.0;
  sink = sink + value;
}

void append_shortest(std::string& out, double value) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), value);
  out.append(buf, result.ptr);
}

}  // namespace

Population::Population(std::vector<double> values) : values_(std::move(values)) {
  if (values_.empty()) throw ParameterError("population must contain at least one value");
  for (double v : values_) {
    if (!std::isfinite(v)) throw ParameterError("population values must be finite");
  }
  std::sort(values_.begin(), values_.end());
}

Population Population::identity(std::int64_t size) {
  if (size < 1) throw ParameterError("population size must be >= 1");
  std::vector<double> values(static_cast<std::size_t>(size));
  std::iota(values.begin(), values.end(), 1.0);
  return Population(std::move(values));
}

Population Population::read(std::istream& in) {
  std::vector<double> values;
  std::string line;
  std::int64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string text = trim(line);
    if (text.empty() || text.front() == '#') continue;
    double value = 0.0;
    const char* begin = text.data();
    const char* end = text.data() + text.size();
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
      throw ParameterError("population line " + std::to_string(line_number) + ": not a decimal value: '" +
                           text + "'");
    }
    values.push_back(value);
  }
  return Population(std::move(values));
}

Population Population::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParameterError("cannot open population file '" + path + "'");
  return read(in);
}

std::pair<std::int64_t, std::int64_t> Population::ranks_of(double value) const {
  const auto [first, last] = std::equal_range(values_.begin(), values_.end(), value);
  return {static_cast<std::int64_t>(first - values_.begin()) + 1,
          static_cast<std::int64_t>(last - values_.begin())};
}

void SimulationRequest::validate() const {
  const std::int64_t N = population.size();
  if (sample_size < 1 || sample_size > N) {
    throw ParameterError("sample size must satisfy 1 <= n <= N=" + std::to_string(N) + ", got " +
                         std::to_string(sample_size));
  }
  if (ranks.empty()) throw ParameterError("at least one rank is required");
  std::set<std::int64_t> seen;
  for (std::int64_t k : ranks) {
    if (k < 1 || k > sample_size) {
      throw ParameterError("rank " + std::to_string(k) + " outside [1, " + std::to_string(sample_size) + "]");
    }
    if (!seen.insert(k).second) throw ParameterError("duplicate rank " + std::to_string(k));
  }
  if (sims < 0) throw ParameterError("number of simulations must be >= 0");
}

RankSampler::RankSampler(const SimulationRequest& request)
    : population_(&request.population),
      trials_(request.population.size() - request.sample_size) {
  request.validate();
  const std::size_t r = request.ranks.size();
  std::vector<std::size_t> order(r);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return request.ranks[a] < request.ranks[b]; });
  sorted_ranks_.resize(r);
  output_slot_.resize(r);
  for (std::size_t i = 0; i < r; ++i) {
    sorted_ranks_[i] = request.ranks[order[i]];
    output_slot_[i] = order[i];
  }
  gammas_.reserve(r + 1);
  std::int64_t previous = 0;
  for (std::int64_t k : sorted_ranks_) {
    gammas_.emplace_back(static_cast<double>(k - previous));
    previous = k;
  }
  gammas_.emplace_back(static_cast<double>(request.sample_size - previous + 1));
  weights_.resize(r + 1);
  positions_ = sorted_ranks_;
}

void RankSampler::draw(Rng& rng, double* row) {
  const std::size_t r = sorted_ranks_.size();
  if (trials_ == 0) {
    positions_ = sorted_ranks_;
  } else {
    double total = 0.0;
    for (std::size_t i = 0; i <= r; ++i) {
      weights_[i] = gammas_[i](rng);
      total += weights_[i];
    }
    // Multinomial(N - n, S) by sequential conditional binomials, accumulated
    // straight into the rank offsets.
    std::int64_t remaining = trials_;
    std::int64_t offset = 0;
    for (std::size_t i = 0; i < r; ++i) {
      if (remaining > 0) {
        const double p = total > 0.0 ? std::clamp(weights_[i] / total, 0.0, 1.0) : 0.0;
        const std::int64_t count = binomial_variate(rng, remaining, p);
        remaining -= count;
        offset += count;
      }
      total -= weights_[i];
      positions_[i] = sorted_ranks_[i] + offset;
    }
  }
  for (std::size_t i = 0; i < r; ++i) row[output_slot_[i]] = population_->at_rank(positions_[i]);
}

NaiveSampler::NaiveSampler(const SimulationRequest& request)
    : population_(&request.population),
      sample_size_(request.sample_size),
      ranks_(request.ranks),
      indices_(static_cast<std::size_t>(request.population.size())),
      sample_(static_cast<std::size_t>(request.sample_size)) {
  request.validate();
  std::iota(indices_.begin(), indices_.end(), std::int64_t{1});
}

void NaiveSampler::draw(Rng& rng, double* row) {
  const auto N = static_cast<std::int64_t>(indices_.size());
  // Partial Fisher-Yates. The index array is left permuted between draws;
  // shuffling any fixed arrangement still yields a uniform subset.
  for (std::int64_t i = 0; i < sample_size_; ++i) {
    std::uniform_int_distribution<std::int64_t> pick(i, N - 1);
    std::swap(indices_[static_cast<std::size_t>(i)], indices_[static_cast<std::size_t>(pick(rng))]);
  }
  std::copy_n(indices_.begin(), sample_size_, sample_.begin());
  std::sort(sample_.begin(), sample_.end());
  for (std::size_t c = 0; c < ranks_.size(); ++c) {
    row[c] = population_->at_rank(sample_[static_cast<std::size_t>(ranks_[c] - 1)]);
  }
}

namespace {

template <typename Sampler>
SampleMatrix run_sampler(const SimulationRequest& request, Rng& rng) {
  Sampler sampler(request);
  SampleMatrix out;
  out.rows = request.sims;
  out.cols = static_cast<std::int64_t>(request.ranks.size());
  out.values.resize(static_cast<std::size_t>(out.rows * out.cols));
  for (std::int64_t i = 0; i < out.rows; ++i) {
    sampler.draw(rng, out.values.data() + i * out.cols);
  }
  return out;
}

// Wall time of one full request, output allocation included.
template <typename Sampler>
double time_sampler(const SimulationRequest& request, Rng& rng) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  const SampleMatrix m = run_sampler<Sampler>(request, rng);
  consume(m.values.back());
  const auto stop = Clock::now();
  return std::chrono::duration<double, std::nano>(stop - start).count();
}

}  // namespace

SampleMatrix sample_order_stats(const SimulationRequest& request, Rng& rng) {
  return run_sampler<RankSampler>(request, rng);
}

SampleMatrix naive_sample_order_stats(const SimulationRequest& request, Rng& rng) {
  return run_sampler<NaiveSampler>(request, rng);
}

double generalized_pmf(const Population& population, std::int64_t rank, std::int64_t sample_size,
                       double value) {
  const OrderStatSpec spec(rank, sample_size, population.size());
  const Support s = support(spec);
  const auto [first, last] = population.ranks_of(value);
  double total = 0.0;
  for (std::int64_t x = std::max(first, s.lo); x <= std::min(last, s.hi); ++x) total += pmf(spec, x);
  return total;
}

std::vector<std::pair<double, double>> generalized_distribution(const Population& population,
                                                                std::int64_t rank,
                                                                std::int64_t sample_size) {
  const OrderStatSpec spec(rank, sample_size, population.size());
  const Support s = support(spec);
  std::vector<std::pair<double, double>> out;
  for (std::int64_t x = s.lo; x <= s.hi; ++x) {
    const double z = population.at_rank(x);
    const double mass = pmf(spec, x);
    if (!out.empty() && out.back().first == z) {
      out.back().second += mass;
    } else {
      out.emplace_back(z, mass);
    }
  }
  return out;
}

double generalized_expectation(const Population& population, std::int64_t rank,
                               std::int64_t sample_size, const std::function<double(double)>& f) {
  const OrderStatSpec spec(rank, sample_size, population.size());
  const Support s = support(spec);
  double total = 0.0;
  for (std::int64_t x = s.lo; x <= s.hi; ++x) total += f(population.at_rank(x)) * pmf(spec, x);
  return total;
}

void write_csv(std::ostream& out, const SampleMatrix& samples) {
  std::string line;
  for (std::int64_t i = 0; i < samples.rows; ++i) {
    line.clear();
    for (std::int64_t j = 0; j < samples.cols; ++j) {
      if (j > 0) line.push_back(',');
      append_shortest(line, samples.at(i, j));
    }
    line.push_back('\n');
    out << line;
  }
}

KilosortCalibration kilosort_unit(int repetitions) {
  if (repetitions < 25) throw ParameterError("kilosort calibration needs at least 25 repetitions");
  using Clock = std::chrono::steady_clock;
  std::vector<int> data(1000);
  const auto fill = [&] { std::iota(data.rbegin(), data.rend(), 1); };

  fill();
  std::sort(data.begin(), data.end());
  consume(data.front());

  KilosortCalibration cal;
  cal.samples_ns.reserve(static_cast<std::size_t>(repetitions));
  for (int i = 0; i < repetitions; ++i) {
    fill();
    const auto start = Clock::now();
    std::sort(data.begin(), data.end());
    consume(data[static_cast<std::size_t>(i) % data.size()]);
    const auto stop = Clock::now();
    cal.samples_ns.push_back(std::chrono::duration<double, std::nano>(stop - start).count());
  }
  cal.seconds = median_of(cal.samples_ns) * 1e-9;
  if (!(cal.seconds > 0.0)) throw Error("kilosort calibration measured a non-positive time");
  return cal;
}

BenchReport benchmark(const SimulationRequest& request, int repetitions, std::uint64_t seed) {
  request.validate();
  if (repetitions < 0) throw ParameterError("repetitions must be >= 0");
  BenchReport report;
  report.sims = request.sims;
  report.repetitions = repetitions;
  if (request.sims == 0 || repetitions == 0) {
    report.empty = true;
    return report;
  }

  Rng rng(seed);
  // Warm-up.
  time_sampler<RankSampler>(request, rng);
  time_sampler<NaiveSampler>(request, rng);

  const KilosortCalibration before = kilosort_unit(25);
  for (int rep = 0; rep < repetitions; ++rep) {
    if (rep % 2 == 0) {
      report.method_raw_ns.push_back(time_sampler<RankSampler>(request, rng));
      report.baseline_raw_ns.push_back(time_sampler<NaiveSampler>(request, rng));
    } else {
      report.baseline_raw_ns.push_back(time_sampler<NaiveSampler>(request, rng));
      report.method_raw_ns.push_back(time_sampler<RankSampler>(request, rng));
    }
  }
  const KilosortCalibration after = kilosort_unit(25);

  std::vector<double> all = before.samples_ns;
  all.insert(all.end(), after.samples_ns.begin(), after.samples_ns.end());
  report.kilosort_before_ns = before.seconds * 1e9;
  report.kilosort_after_ns = after.seconds * 1e9;
  report.kilosort_ns = median_of(all);
  report.method_time_kilosorts = median_of(report.method_raw_ns) / report.kilosort_ns;
  report.baseline_time_kilosorts = median_of(report.baseline_raw_ns) / report.kilosort_ns;
  report.method_mean_kilosorts = mean_of(report.method_raw_ns) / report.kilosort_ns;
  report.baseline_mean_kilosorts = mean_of(report.baseline_raw_ns) / report.kilosort_ns;
  return report;
}

}  // namespace fpos
