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

#include "fpos/normal_approx.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <string>

#include "fpos/error.hpp"

namespace fpos {
namespace {

void require_nondegenerate(const OrderStatSpec& spec) {
  if (spec.is_census()) {
    throw DegenerateDistributionError("normal approximation undefined for n == N (zero variance)");
  }
}

std::int64_t round_clamped(double value, std::int64_t lo, std::int64_t hi) {
  return std::clamp(static_cast<std::int64_t>(std::llround(value)), lo, hi);
}

}  // namespace

AsymptoticRegime::AsymptoticRegime(double lambda, double phi, std::int64_t population_size)
    : lambda_(lambda), phi_(phi), population_size_(population_size) {
  if (!(lambda > 0.0 && lambda < 1.0) || !(phi > 0.0 && phi < 1.0) || population_size < 1) {
    throw ParameterError("asymptotic regime requires 0 < lambda < 1, 0 < phi < 1, N >= 1");
  }
}

OrderStatSpec AsymptoticRegime::induced_spec() const {
  const std::int64_t n =
      round_clamped(lambda_ * static_cast<double>(population_size_), 1, population_size_);
  const std::int64_t k = round_clamped(phi_ * static_cast<double>(n), 1, n);
  return OrderStatSpec(k, n, population_size_);
}

MomentSet asymptotic_moments(const AsymptoticRegime& regime) {
  const double lam = regime.lambda();
  const double phi = regime.phi();
  const double N = static_cast<double>(regime.population_size());
  const double spread = phi * (1.0 - phi);
  MomentSet m;
  m.mean = phi * N;
  m.variance = (1.0 - lam) / lam * spread * N;
  m.skewness = (1.0 - 2.0 * phi) * (2.0 - lam) / std::sqrt(lam * (1.0 - lam) * spread * N);
  m.kurtosis = 3.0 + (lam / (1.0 - lam) * (1.0 / spread - 6.0) + 6.0 / lam * (1.0 / spread - 5.0)) / N;
  return m;
}

std::vector<double> normal_approx_pmf(const OrderStatSpec& spec) {
  require_nondegenerate(spec);
  const double mu = mean(spec);
  const double var = variance(spec);
  const Support s = support(spec);
  std::vector<double> weights;
  weights.reserve(static_cast<std::size_t>(s.size()));
  double total = 0.0;
  for (std::int64_t x = s.lo; x <= s.hi; ++x) {
    const double d = static_cast<double>(x) - mu;
    // The density's constant factor cancels in the normalization.
    const double w = std::exp(-d * d / (2.0 * var));
    weights.push_back(w);
    total += w;
  }
  for (double& w : weights) w /= total;
  return weights;
}

double lrmse_between(std::span<const double> exact, std::span<const double> approx) {
  if (exact.size() != approx.size() || exact.empty()) {
    throw ParameterError("lrmse needs two non-empty tables of equal length");
  }
  double sum_sq = 0.0;
  for (std::size_t i = 0; i < exact.size(); ++i) {
    const double d = exact[i] - approx[i];
    sum_sq += d * d;
  }
  const double rmse = std::sqrt(sum_sq / static_cast<double>(exact.size()));
  if (!(rmse > 1e-300)) return kLrmseFloor;
  return std::log(rmse);
}

double lrmse(const OrderStatSpec& spec, const LogFactorials& log_factorials) {
  require_nondegenerate(spec);
  const std::vector<double> exact = pmf_table(spec, log_factorials);
  const std::vector<double> approx = normal_approx_pmf(spec);
  return lrmse_between(exact, approx);
}

double lrmse(const OrderStatSpec& spec) { return lrmse(spec, LogFactorials(spec.population_size())); }

HeatmapGrid heatmap(std::int64_t population_size) {
  if (population_size < 3) throw ParameterError("heatmap requires N >= 3");
  if (population_size > kHeatmapMaxPopulation) {
    throw ResourceError("heatmap limited to N <= " + std::to_string(kHeatmapMaxPopulation));
  }
  const LogFactorials lf(population_size);
  HeatmapGrid grid;
  grid.population_size = population_size;
  grid.cells.reserve(static_cast<std::size_t>(population_size * (population_size - 1) / 2));
  for (std::int64_t n = 1; n < population_size; ++n) {
    for (std::int64_t k = 1; k <= n; ++k) {
      grid.cells.push_back({n, k, lrmse(OrderStatSpec(k, n, population_size), lf)});
    }
  }
  return grid;
}

void write_heatmap_csv(std::ostream& out, const HeatmapGrid& grid) {
  std::string line;
  out << "N,n,k,lrmse\n";
  char buf[32];
  for (const HeatmapCell& cell : grid.cells) {
    line = std::to_string(grid.population_size);
    line += ',';
    line += std::to_string(cell.sample_size);
    line += ',';
    line += std::to_string(cell.rank);
    line += ',';
    const auto result = std::to_chars(buf, buf + sizeof(buf), cell.lrmse);
    line.append(buf, result.ptr);
    line += '\n';
    out << line;
  }
}

double standard_normal_cdf(double z) { return 0.5 * std::erfc(-z / std::sqrt(2.0)); }

double standardized_cdf_distance(const OrderStatSpec& spec) {
  require_nondegenerate(spec);
  const double mu = mean(spec);
  const double sigma = std::sqrt(variance(spec));
  const Support s = support(spec);
  const std::vector<double> masses = pmf_table(spec);
  double below = 0.0;
  double worst = 0.0;
  // Between support points the empirical side is flat, so the supremum is
  // reached at a support point from the left (cdf below) or at it (cdf after).
  for (std::int64_t x = s.lo; x <= s.hi; ++x) {
    const double phi = standard_normal_cdf((static_cast<double>(x) - mu) / sigma);
    const double at = std::min(1.0, below + masses[static_cast<std::size_t>(x - s.lo)]);
    worst = std::max({worst, std::abs(below - phi), std::abs(at - phi)});
    below = at;
  }
  return worst;
}

}  // namespace fpos
