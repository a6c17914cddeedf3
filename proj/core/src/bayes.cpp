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

#include "fpos/bayes.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "fpos/error.hpp"
#include "fpos/numeric.hpp"

namespace fpos {
namespace {

constexpr double kMassSlack = 1e-12;
constexpr std::int64_t kResyncInterval = 4096;

std::int64_t parse_integer(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  long long v = 0;
  try {
    v = std::stoll(text, &used);
  } catch (const std::exception&) {
    throw ParameterError("prior: cannot parse " + what + " from '" + text + "'");
  }
  if (used != text.size()) throw ParameterError("prior: trailing characters in " + what + " '" + text + "'");
  return v;
}

double parse_real(const std::string& text, const std::string& what) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    throw ParameterError("prior: cannot parse " + what + " from '" + text + "'");
  }
  if (used != text.size()) throw ParameterError("prior: trailing characters in " + what + " '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string part;
  while (std::getline(in, part, sep)) out.push_back(part);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

// sum_{N >= lo} N^-alpha.
double hurwitz_zeta(double alpha, std::int64_t lo) {
  const std::int64_t m = lo + 2000;
  double direct = 0.0;
  for (std::int64_t i = m - 1; i >= lo; --i) direct += std::pow(static_cast<double>(i), -alpha);
  const double md = static_cast<double>(m);
  const double tail = std::pow(md, 1.0 - alpha) / (alpha - 1.0) + 0.5 * std::pow(md, -alpha) +
                      alpha / 12.0 * std::pow(md, -alpha - 1.0) -
                      alpha * (alpha + 1.0) * (alpha + 2.0) / 720.0 * std::pow(md, -alpha - 3.0);
  return direct + tail;
}

// Likelihood with shifted parameters (n', k', x'), evaluated at index j.
// Needs n' >= k' and j >= max(0, n' + x' - k').
struct ShiftedLikelihood {
  std::int64_t n;
  std::int64_t k;
  std::int64_t x;

  std::int64_t first_index() const { return std::max<std::int64_t>(0, n + x - k); }

  double log_at(std::int64_t j) const {
    return log_factorial(j - n) + log_factorial(j - x) - log_factorial(j) - log_factorial(j - n - x + k);
  }

  // L(j + 1) / L(j).
  double ratio(std::int64_t j) const {
    const double a = static_cast<double>(j + 1);
    return (a - static_cast<double>(n)) * (a - static_cast<double>(x)) /
           (a * (a - static_cast<double>(n + x - k)));
  }
};

struct SumProblem {
  ShiftedLikelihood lik;
  std::int64_t shift;
  const PriorSpec* prior;

  std::int64_t first_index() const {
    return std::max(lik.first_index(), prior->support_min() - shift);
  }

  double prior_at(std::int64_t j) const { return prior->mass(j + shift); }

  // ln of the bound on sum_{j > last} L(j) pi_r(j); +infinity when none exists.
  double log_tail_bound(std::int64_t last) const {
    if (lik.k < 0) return std::numeric_limits<double>::infinity();
    double log_mass = 0.0;
    if (auto t = prior->tail(last + shift)) {
      if (*t <= 0.0) return -std::numeric_limits<double>::infinity();
      log_mass = std::min(0.0, std::log(*t));
    }
    double log_fall = 0.0;
    for (std::int64_t i = 0; i < lik.k; ++i) log_fall += std::log(static_cast<double>(last + 1 - i));
    return log_mass - log_fall;
  }

  double partial_sum(std::int64_t last) const {
    const std::int64_t first = first_index();
    double sum = 0.0;
    double comp = 0.0;
    double term = 0.0;
    for (std::int64_t j = first; j <= last; ++j) {
      if (j == first || (j - first) % kResyncInterval == 0) {
        term = std::exp(lik.log_at(j));
      } else {
        term *= lik.ratio(j - 1);
      }
      const double y = term * prior_at(j) - comp;
      const double t = sum + y;
      comp = (t - sum) - y;
      sum = t;
    }
    return sum;
  }
};

SumProblem make_problem(std::int64_t shift, std::int64_t sample_size, std::int64_t rank,
                        std::int64_t value, const PriorSpec& prior) {
  if (sample_size < 1 || rank < 1 || rank > sample_size || value < rank) {
    throw ParameterError("H requires n >= 1, 1 <= k <= n and x >= k");
  }
  if (shift < 0) throw ParameterError("shift must be nonnegative");
  return SumProblem{ShiftedLikelihood{sample_size - shift, rank - shift, value - shift}, shift, &prior};
}

HValue certified_sum(const SumProblem& p, double tol) {
  if (!(tol > 0.0)) throw ParameterError("tolerance must be positive");
  const std::int64_t first = p.first_index();
  HValue out;
  if (p.prior->finite_support()) {
    out.truncation_point = *p.prior->support_max() - p.shift;
    out.value = out.truncation_point >= first ? p.partial_sum(out.truncation_point) : 0.0;
    out.error_bound = 0.0;
    return out;
  }
  if (p.lik.k < 0) {
    throw CertificationError("factorial moment order exceeds the rank; needs a finite-support prior");
  }
  const double log_tol = std::log(tol);
  auto ok = [&](std::int64_t last) { return p.log_tail_bound(last) <= log_tol; };
  std::int64_t hi = first;
  std::int64_t lo = first - 1;
  std::int64_t step = 1;
  while (!ok(hi)) {
    if (hi >= kMaxTruncationPoint) {
      std::ostringstream msg;
      msg << "cannot certify H to tolerance " << tol << " within " << kMaxTruncationPoint
          << " terms; supply a prior with a tail envelope, finite support, or a larger tolerance";
      throw CertificationError(msg.str());
    }
    lo = hi;
    hi = std::min(kMaxTruncationPoint, first + step);
    step *= 2;
  }
  while (hi - lo > 1) {
    const std::int64_t mid = lo + (hi - lo) / 2;
    if (ok(mid)) hi = mid; else lo = mid;
  }
  out.truncation_point = hi;
  out.value = p.partial_sum(hi);
  out.error_bound = std::exp(p.log_tail_bound(hi));
  return out;
}

void require_nonzero(const HValue& h) {
  if (h.value > 0.0) return;
  if (h.error_bound == 0.0) {
    throw InconsistentPriorError("prior puts no mass on any population size compatible with the observation");
  }
  throw CertificationError("H evaluated to zero within its truncation point; cannot normalise");
}

}  // namespace

PriorSpec::PriorSpec(Function mass, std::optional<Function> tail, std::int64_t support_min,
                     std::optional<std::int64_t> support_max)
    : mass_(std::move(mass)), tail_(std::move(tail)), support_min_(support_min), support_max_(support_max) {
  if (!mass_) throw ParameterError("prior: mass function is empty");
  if (support_min_ < 1) throw ParameterError("prior: support must start at N >= 1");
  if (!support_max_) return;
  if (*support_max_ < support_min_) throw ParameterError("prior: empty support");
  if (*support_max_ - support_min_ >= kMaxTruncationPoint) {
    throw ParameterError("prior: finite support wider than " + std::to_string(kMaxTruncationPoint));
  }
  double sum = 0.0;
  double comp = 0.0;
  for (std::int64_t i = support_min_; i <= *support_max_; ++i) {
    const double m = mass_(i);
    if (!(m >= 0.0) || !std::isfinite(m)) {
      throw ParameterError("prior: mass at N=" + std::to_string(i) + " is not a nonnegative number");
    }
    const double y = m - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  if (std::abs(sum - 1.0) > kMassSlack) {
    throw ParameterError("prior: masses sum to " + std::to_string(sum) + ", not 1 (improper prior)");
  }
}

PriorSpec PriorSpec::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo < 1 || hi < lo) throw ParameterError("uniform prior needs 1 <= a <= b");
  const double m = 1.0 / static_cast<double>(hi - lo + 1);
  return PriorSpec([=](std::int64_t i) { return i >= lo && i <= hi ? m : 0.0; }, std::nullopt, lo, hi);
}

PriorSpec PriorSpec::point_mass(std::int64_t value) {
  if (value < 1) throw ParameterError("point-mass prior needs N0 >= 1");
  return PriorSpec([=](std::int64_t i) { return i == value ? 1.0 : 0.0; }, std::nullopt, value, value);
}

PriorSpec PriorSpec::power_law(double alpha, std::int64_t n_min) {
  if (!(alpha > 1.0) || !std::isfinite(alpha)) {
    throw ParameterError("power-law prior needs alpha > 1 (otherwise it is improper)");
  }
  if (n_min < 1) throw ParameterError("power-law prior needs Nmin >= 1");
  const double c = 1.0 / hurwitz_zeta(alpha, n_min);
  Function mass = [=](std::int64_t i) {
    return i >= n_min ? c * std::pow(static_cast<double>(i), -alpha) : 0.0;
  };
  Function tail = [=](std::int64_t after) {
    if (after < n_min) return 1.0;
    return std::min(1.0, c * std::pow(static_cast<double>(after), 1.0 - alpha) / (alpha - 1.0));
  };
  return PriorSpec(std::move(mass), std::move(tail), n_min, std::nullopt);
}

PriorSpec PriorSpec::parse(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw ParameterError("prior '" + text + "': expected uniform:a,b, pointmass:N0 or powerlaw:alpha,Nmin");
  }
  const std::string kind = text.substr(0, colon);
  const auto args = split(text.substr(colon + 1), ',');
  if (kind == "uniform") {
    if (args.size() != 2) throw ParameterError("uniform prior takes two bounds: uniform:a,b");
    return uniform(parse_integer(args[0], "lower bound"), parse_integer(args[1], "upper bound"));
  }
  if (kind == "pointmass") {
    if (args.size() != 1) throw ParameterError("point-mass prior takes one value: pointmass:N0");
    return point_mass(parse_integer(args[0], "N0"));
  }
  if (kind == "powerlaw") {
    if (args.size() != 2) throw ParameterError("power-law prior takes two values: powerlaw:alpha,Nmin");
    return power_law(parse_real(args[0], "alpha"), parse_integer(args[1], "Nmin"));
  }
  throw ParameterError("unknown prior family '" + kind + "'");
}

double PriorSpec::mass(std::int64_t value) const {
  if (value < support_min_ || (support_max_ && value > *support_max_)) return 0.0;
  return mass_(value);
}

std::optional<double> PriorSpec::tail(std::int64_t after) const {
  if (support_max_ && after >= *support_max_) return 0.0;
  if (!tail_) return std::nullopt;
  return (*tail_)(after);
}

double likelihood(std::int64_t population_size, std::int64_t sample_size, std::int64_t rank,
                  std::int64_t value) {
  if (sample_size < 1 || rank < 1 || rank > sample_size || value < rank) {
    throw ParameterError("likelihood requires n >= 1, 1 <= k <= n and x >= k");
  }
  const ShiftedLikelihood lik{sample_size, rank, value};
  if (population_size < lik.first_index()) return 0.0;
  return std::exp(lik.log_at(population_size));
}

HValue h_function(std::int64_t sample_size, std::int64_t rank, std::int64_t value,
                  const PriorSpec& prior, double tol) {
  return certified_sum(make_problem(0, sample_size, rank, value, prior), tol);
}

HValue h_function_truncated(std::int64_t sample_size, std::int64_t rank, std::int64_t value,
                            const PriorSpec& prior, std::int64_t truncation_point) {
  const SumProblem p = make_problem(0, sample_size, rank, value, prior);
  HValue out;
  out.truncation_point = truncation_point;
  out.value = truncation_point >= p.first_index() ? p.partial_sum(truncation_point) : 0.0;
  out.error_bound = std::exp(p.log_tail_bound(truncation_point));
  return out;
}

HValue shifted_h_function(std::int64_t shift, std::int64_t sample_size, std::int64_t rank,
                          std::int64_t value, const PriorSpec& prior, double tol) {
  return certified_sum(make_problem(shift, sample_size, rank, value, prior), tol);
}

double posterior_pmf(std::int64_t population_size, std::int64_t sample_size, std::int64_t rank,
                     std::int64_t value, const PriorSpec& prior, double tol) {
  const HValue h = h_function(sample_size, rank, value, prior, tol);
  require_nonzero(h);
  const double l = likelihood(population_size, sample_size, rank, value);
  return l * prior.mass(population_size) / h.value;
}

Posterior posterior(std::int64_t sample_size, std::int64_t rank, std::int64_t value,
                    const PriorSpec& prior, double tol) {
  const SumProblem p = make_problem(0, sample_size, rank, value, prior);
  Posterior out;
  out.normalizer = certified_sum(p, tol);
  require_nonzero(out.normalizer);
  out.support_min = p.first_index();
  for (std::int64_t i = out.support_min; i <= out.normalizer.truncation_point; ++i) {
    out.masses.push_back(std::exp(p.lik.log_at(i)) * prior.mass(i) / out.normalizer.value);
  }
  return out;
}

CertifiedValue posterior_factorial_moment(std::int64_t order, std::int64_t sample_size,
                                          std::int64_t rank, std::int64_t value,
                                          const PriorSpec& prior, double tol) {
  if (order < 0) throw ParameterError("moment order must be nonnegative");
  const HValue den = h_function(sample_size, rank, value, prior, tol);
  require_nonzero(den);
  if (order == 0) return {1.0, 0.0};
  const HValue num = shifted_h_function(order, sample_size, rank, value, prior, tol);
  const double lo = num.value / den.upper();
  const double hi = num.upper() / den.value;
  return {0.5 * (lo + hi), 0.5 * (hi - lo)};
}

PosteriorMoments posterior_mean_variance(std::int64_t sample_size, std::int64_t rank,
                                         std::int64_t value, const PriorSpec& prior, double tol) {
  const CertifiedValue m = posterior_factorial_moment(1, sample_size, rank, value, prior, tol);
  const CertifiedValue e2 = posterior_factorial_moment(2, sample_size, rank, value, prior, tol);
  auto f = [](double mu) { return mu - mu * mu; };
  const double m_lo = m.value - m.error_bound;
  const double m_hi = m.value + m.error_bound;
  double f_lo = std::min(f(m_lo), f(m_hi));
  double f_hi = std::max(f(m_lo), f(m_hi));
  if (m_lo <= 0.5 && 0.5 <= m_hi) f_hi = 0.25;
  const double v_lo = std::max(0.0, e2.value - e2.error_bound + f_lo);
  const double v_hi = std::max(v_lo, e2.value + e2.error_bound + f_hi);
  PosteriorMoments out;
  out.mean = m;
  out.variance = {0.5 * (v_lo + v_hi), 0.5 * (v_hi - v_lo)};
  return out;
}

}  // namespace fpos
