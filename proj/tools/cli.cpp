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

#include "cli.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "fpos/bayes.hpp"
#include "fpos/error.hpp"
#include "fpos/joint.hpp"
#include "fpos/normal_approx.hpp"
#include "fpos/numeric.hpp"
#include "fpos/oracle.hpp"
#include "fpos/order_stat.hpp"
#include "fpos/random.hpp"
#include "fpos/sampler.hpp"
#include "fpos/tank.hpp"

namespace fpos::cli {
namespace {

using nlohmann::json;

struct Options {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t N = 0;
  std::int64_t x = 0;
  std::int64_t count = 1;
  std::int64_t sims = 1000;
  int reps = 100;
  std::uint64_t seed = 0;
  bool exact = false;
  bool plug_in = false;
  double tol = kDefaultTolerance;
  std::string prior;
  std::string population;
  std::string format;
  std::string method = "rank";
  std::vector<std::int64_t> ranks;
  std::vector<std::int64_t> values;
};

json optional_number(const std::optional<double>& v) {
  return v ? json(*v) : json(nullptr);
}

void print_json(std::ostream& out, const json& j) { out << j.dump() << '\n'; }

json exact_table(const OrderStatSpec& spec) {
  json mass = json::array();
  const Support s = support(spec);
  for (std::int64_t x = s.lo; x <= s.hi; ++x) mass.push_back(to_fraction_string(exact_pmf(spec, x)));
  return mass;
}

json support_list(const Support& s) {
  json out = json::array();
  for (std::int64_t x = s.lo; x <= s.hi; ++x) out.push_back(x);
  return out;
}

std::uint64_t resolve_seed(const CLI::Option* opt, std::uint64_t given, std::ostream& err) {
  if (opt->count() > 0) return given;
  std::random_device rd;
  const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  err << "seed: " << seed << '\n';
  return seed;
}

SimulationRequest make_request(const Options& o) {
  SimulationRequest req{o.population.empty() ? Population::identity(o.N) : Population::load(o.population),
                        o.n, o.ranks, o.sims};
  req.validate();
  return req;
}

bool wants_csv(const Options& o) {
  if (o.format.empty() || o.format == "csv") return true;
  if (o.format == "json") return false;
  throw ParameterError("unknown format '" + o.format + "'; expected csv or json");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order statistics of samples drawn without replacement from a finite population", "fpos"};
  app.require_subcommand(1);
  Options o;

  auto spec_flags = [&o](CLI::App* sub) {
    sub->add_option("--k", o.k, "rank of the order statistic")->required();
    sub->add_option("--n", o.n, "sample size")->required();
    sub->add_option("--N", o.N, "population size")->required();
  };

  auto* pmf_cmd = app.add_subcommand("pmf", "probability mass function over the support");
  spec_flags(pmf_cmd);
  pmf_cmd->add_flag("--exact", o.exact, "rational arithmetic, printed as p/q (N <= 64)");

  auto* cdf_cmd = app.add_subcommand("cdf", "cumulative distribution function");
  spec_flags(cdf_cmd);
  auto* cdf_x = cdf_cmd->add_option("--x", o.x, "single evaluation point");

  auto* moments_cmd = app.add_subcommand("moments", "mean, variance, skewness and kurtosis");
  spec_flags(moments_cmd);
  moments_cmd->add_flag("--exact", o.exact, "rational arithmetic, printed as p/q (N <= 64)");

  auto* sample_cmd = app.add_subcommand("sample", "draws via the beta-binomial mixture");
  spec_flags(sample_cmd);
  sample_cmd->add_option("--count", o.count, "number of draws")->check(CLI::NonNegativeNumber);
  auto* sample_seed = sample_cmd->add_option("--seed", o.seed, "64-bit seed");

  auto* joint_cmd = app.add_subcommand("joint-pmf", "joint mass of several order statistics");
  joint_cmd->add_option("--ranks", o.ranks, "comma-separated increasing ranks")->delimiter(',')->required();
  joint_cmd->add_option("--x", o.values, "comma-separated observed values")->delimiter(',')->required();
  joint_cmd->add_option("--n", o.n, "sample size")->required();
  joint_cmd->add_option("--N", o.N, "population size")->required();

  auto* sim_cmd = app.add_subcommand("simulate", "order statistics from an arbitrary population");
  auto* sim_pop = sim_cmd->add_option("--population", o.population, "file with one value per line");
  auto* sim_N = sim_cmd->add_option("--N", o.N, "use the population 1..N instead of a file");
  sim_pop->excludes(sim_N);
  sim_cmd->add_option("--n", o.n, "sample size")->required();
  sim_cmd->add_option("--ranks", o.ranks, "comma-separated ranks")->delimiter(',')->required();
  sim_cmd->add_option("--sims", o.sims, "number of simulations");
  sim_cmd->add_option("--method", o.method, "rank or naive");
  sim_cmd->add_option("--format", o.format, "csv (default) or json");
  auto* sim_seed = sim_cmd->add_option("--seed", o.seed, "64-bit seed");

  auto* est_cmd = app.add_subcommand("estimate", "unbiased population size estimate");
  est_cmd->add_option("--n", o.n, "sample size")->required();
  auto* est_max = est_cmd->add_option("--max", o.x, "observed sample maximum");
  auto* est_rank = est_cmd->add_option("--rank", o.k, "rank of the observed order statistic");
  auto* est_x = est_cmd->add_option("--x", o.values, "observed value for --rank")->expected(1);
  est_max->excludes(est_rank);
  est_rank->needs(est_x);
  auto* est_N = est_cmd->add_option("--N", o.N, "population size at which to evaluate the standard error");
  auto* est_plug = est_cmd->add_flag("--plug-in", o.plug_in, "standard error at the estimate itself");
  est_N->excludes(est_plug);

  auto* post_cmd = app.add_subcommand("posterior", "posterior over N from one order statistic");
  post_cmd->add_option("--n", o.n, "sample size")->required();
  post_cmd->add_option("--k", o.k, "rank")->required();
  post_cmd->add_option("--x", o.x, "observed value")->required();
  post_cmd->add_option("--prior", o.prior, "uniform:a,b | pointmass:N0 | powerlaw:alpha,Nmin")->required();
  post_cmd->add_option("--tol", o.tol, "certified truncation tolerance");

  auto* heat_cmd = app.add_subcommand("heatmap", "LRMSE of the normal approximation over (n, k)");
  heat_cmd->add_option("--N", o.N, "population size")->required();
  heat_cmd->add_option("--format", o.format, "csv (default) or json");

  auto* bench_cmd = app.add_subcommand("bench", "rank-based vs naive sampler timing in kilosorts");
  bench_cmd->add_option("--N", o.N, "population size")->required();
  bench_cmd->add_option("--n", o.n, "sample size")->required();
  bench_cmd->add_option("--ranks", o.ranks, "comma-separated ranks")->delimiter(',')->required();
  bench_cmd->add_option("--sims", o.sims, "simulations per repetition");
  bench_cmd->add_option("--reps", o.reps, "repetitions");
  auto* bench_seed = bench_cmd->add_option("--seed", o.seed, "64-bit seed");

  auto* oracle_cmd = app.add_subcommand("oracle", "exact pmf by enumerating every subset");
  spec_flags(oracle_cmd);

  std::vector<std::string> argv_store;
  argv_store.reserve(args.size() + 1);
  argv_store.emplace_back("fpos");
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }

  try {
    if (pmf_cmd->parsed()) {
      const OrderStatSpec spec(o.k, o.n, o.N);
      const Support s = support(spec);
      json mass = json::array();
      if (o.exact) {
        mass = exact_table(spec);
      } else {
        for (double m : pmf_table(spec)) mass.push_back(m);
      }
      print_json(out, {{"support", support_list(s)}, {"mass", mass}});
    } else if (cdf_cmd->parsed()) {
      const OrderStatSpec spec(o.k, o.n, o.N);
      if (cdf_x->count() > 0) {
        print_json(out, {{"x", o.x}, {"cdf", cdf(spec, o.x)}});
      } else {
        const Support s = support(spec);
        json values = json::array();
        for (std::int64_t x = s.lo; x <= s.hi; ++x) values.push_back(cdf(spec, x));
        print_json(out, {{"support", support_list(s)}, {"cdf", values}});
      }
    } else if (moments_cmd->parsed()) {
      const OrderStatSpec spec(o.k, o.n, o.N);
      if (o.exact) {
        const ExactMoments m = exact_moments(spec);
        print_json(out, {{"mean", to_fraction_string(m.mean)},
                         {"variance", to_fraction_string(m.variance)},
                         {"third_central", to_fraction_string(m.third_central)},
                         {"fourth_central", to_fraction_string(m.fourth_central)},
                         {"kurtosis", m.kurtosis ? json(to_fraction_string(*m.kurtosis)) : json(nullptr)}});
      } else {
        const MomentSet m = moments(spec);
        print_json(out, {{"mean", m.mean},
                         {"variance", m.variance},
                         {"skewness", optional_number(m.skewness)},
                         {"kurtosis", optional_number(m.kurtosis)}});
      }
    } else if (sample_cmd->parsed()) {
      const OrderStatSpec spec(o.k, o.n, o.N);
      Rng rng(resolve_seed(sample_seed, o.seed, err));
      print_json(out, {{"draws", sample(spec, rng, o.count)}});
    } else if (joint_cmd->parsed()) {
      const RankSet ranks(o.ranks, o.n, o.N);
      print_json(out, {{"joint_pmf", joint_pmf(ranks, o.values)},
                       {"dirichlet_multinomial", dm_pmf(ranks, o.values)}});
    } else if (sim_cmd->parsed()) {
      if (sim_pop->count() == 0 && sim_N->count() == 0) {
        throw ParameterError("simulate needs --population FILE or --N");
      }
      const bool csv = wants_csv(o);
      const SimulationRequest req = make_request(o);
      Rng rng(resolve_seed(sim_seed, o.seed, err));
      SampleMatrix samples;
      if (o.method == "rank") {
        samples = sample_order_stats(req, rng);
      } else if (o.method == "naive") {
        samples = naive_sample_order_stats(req, rng);
      } else {
        throw ParameterError("unknown method '" + o.method + "'; expected rank or naive");
      }
      if (csv) {
        write_csv(out, samples);
      } else {
        json rows = json::array();
        for (std::int64_t i = 0; i < samples.rows; ++i) {
          json row = json::array();
          for (std::int64_t j = 0; j < samples.cols; ++j) row.push_back(samples.at(i, j));
          rows.push_back(row);
        }
        print_json(out, {{"ranks", o.ranks}, {"samples", rows}});
      }
    } else if (est_cmd->parsed()) {
      EstimateResult r;
      if (est_max->count() > 0) {
        r = estimate_from_max(o.n, o.x);
      } else if (est_rank->count() > 0) {
        r = estimate_from_kth(o.n, o.k, o.values.at(0));
      } else {
        throw ParameterError("estimate needs --max X or --rank k --x X");
      }
      if (est_N->count() > 0) r = with_standard_error(r, o.N);
      if (o.plug_in) r = with_plug_in_standard_error(r);
      json j = {{"estimate", r.estimate},
                {"rounded", r.rounded()},
                {"rank", r.rank},
                {"sample_size", r.sample_size},
                {"standard_error", optional_number(r.standard_error)}};
      j["variance_at"] = r.variance_at ? json(*r.variance_at) : json(nullptr);
      print_json(out, j);
    } else if (post_cmd->parsed()) {
      const PriorSpec prior = PriorSpec::parse(o.prior);
      const Posterior p = posterior(o.n, o.k, o.x, prior, o.tol);
      json j = {{"support_min", p.support_min},
                {"masses", p.masses},
                {"h", p.normalizer.value},
                {"truncation_point", p.normalizer.truncation_point},
                {"error_bound", p.normalizer.error_bound}};
      try {
        const PosteriorMoments m = posterior_mean_variance(o.n, o.k, o.x, prior, o.tol);
        j["mean"] = m.mean.value;
        j["mean_error_bound"] = m.mean.error_bound;
        j["variance"] = m.variance.value;
        j["variance_error_bound"] = m.variance.error_bound;
      } catch (const CertificationError& e) {
        j["mean"] = nullptr;
        j["variance"] = nullptr;
        err << "warning: " << e.what() << '\n';
        try {
          const CertifiedValue m = posterior_factorial_moment(1, o.n, o.k, o.x, prior, o.tol);
          j["mean"] = m.value;
          j["mean_error_bound"] = m.error_bound;
        } catch (const CertificationError&) {
        }
      }
      print_json(out, j);
    } else if (heat_cmd->parsed()) {
      const bool csv = wants_csv(o);
      const HeatmapGrid grid = heatmap(o.N);
      if (csv) {
        write_heatmap_csv(out, grid);
      } else {
        json cells = json::array();
        for (const auto& c : grid.cells) cells.push_back({{"n", c.sample_size}, {"k", c.rank}, {"lrmse", c.lrmse}});
        print_json(out, {{"N", grid.population_size}, {"cells", cells}});
      }
    } else if (bench_cmd->parsed()) {
      const SimulationRequest req = make_request(o);
      if (o.reps < 1) throw ParameterError("--reps must be at least 1");
      const BenchReport r = benchmark(req, o.reps, resolve_seed(bench_seed, o.seed, err));
      print_json(out, {{"rank_based_kilosorts", r.method_time_kilosorts},
                       {"naive_kilosorts", r.baseline_time_kilosorts},
                       {"rank_based_mean_kilosorts", r.method_mean_kilosorts},
                       {"naive_mean_kilosorts", r.baseline_mean_kilosorts},
                       {"ratio", r.ratio()},
                       {"kilosort_ns", r.kilosort_ns},
                       {"kilosort_before_ns", r.kilosort_before_ns},
                       {"kilosort_after_ns", r.kilosort_after_ns},
                       {"sims", r.sims},
                       {"reps", r.repetitions}});
    } else if (oracle_cmd->parsed()) {
      const OrderStatSpec spec(o.k, o.n, o.N);
      const oracle::MassTable table = oracle::enumerate_pmf(spec);
      json support_json = json::array();
      json mass = json::array();
      for (const auto& [x, m] : table) {
        support_json.push_back(x);
        mass.push_back(to_fraction_string(m));
      }
      print_json(out, {{"support", support_json},
                       {"mass", mass},
                       {"subsets", oracle::subset_count(o.N, o.n).str()}});
    }
  } catch (const ParameterError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const DegenerateDistributionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const InconsistentPriorError& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const CertificationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitParameter;
  }
  return kExitOk;
}

}  // namespace fpos::cli
