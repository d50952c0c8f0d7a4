// Copyright 2026 The ricesim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// rice: command-line front end for simulation, training and experiments.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "rice/config.hpp"
#include "rice/engine.hpp"
#include "rice/error.hpp"
#include "rice/experiments.hpp"
#include "rice/report.hpp"
#include "rice/timing.hpp"
#include "rice/trainer.hpp"

namespace fs = std::filesystem;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitRuntime = 2;

struct Common {
  std::optional<std::uint64_t> seed;
  std::string config;
  std::string nego;
  std::string out;
  bool verbose = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Seed (experiments: replaces the seed list)");
  cmd->add_option("--config", c.config, "Structured config file (default: built-in)");
  cmd->add_option("--nego", c.nego, "Negotiation protocol")->check(CLI::IsMember({"on", "off"}));
  cmd->add_option("--out", c.out, "Output directory");
  cmd->add_flag("--verbose,-v", c.verbose, "Stream per-step records to stdout");
}

rice::SimConfig load(const Common& c) {
  rice::SimConfig cfg = c.config.empty() ? rice::default_config() : rice::load_config(c.config);
  if (!c.nego.empty()) cfg.negotiation_on = c.nego == "on";
  if (!c.out.empty()) cfg.output_dir = c.out;
  cfg.validate();
  return cfg;
}

std::uint64_t first_seed(const Common& c, const rice::SimConfig& cfg) {
  if (c.seed) return *c.seed;
  return cfg.seeds.empty() ? 0 : cfg.seeds.front();
}

// --- run ----------------------------------------------------------------

struct RunOptions {
  std::string policy = "zero";
  double mitigation = 0.0;
  double savings = 0.0;
  double export_fraction = 0.0;
  double import_fraction = 0.0;
  double tariff = 0.0;
};

rice::PolicySet scripted_policy(const RunOptions& o, std::uint64_t seed, std::size_t n) {
  if (o.policy == "zero") return rice::PolicySet(rice::Policy(rice::PolicySpec::zero()));
  if (o.policy == "fixed") {
    return rice::PolicySet(rice::Policy(rice::PolicySpec::fixed(
        o.mitigation, o.savings, o.export_fraction, o.import_fraction, o.tariff)));
  }
  if (o.policy == "random") return rice::PolicySet(rice::Policy(rice::PolicySpec::random(seed)));
  const rice::PolicyRecord record = rice::read_policy_record(o.policy);
  rice::PolicySet set = record.policy_set();
  set.validate(n);
  return set;
}

int cmd_run(const Common& c, const RunOptions& o) {
  const rice::SimConfig cfg = load(c);
  const rice::Engine engine(cfg);
  const std::uint64_t seed = first_seed(c, cfg);
  const rice::PolicySet policies = scripted_policy(o, seed, engine.num_regions());
  rice::EpisodeOptions options;
  if (c.verbose) options.verbose = &std::cout;
  const rice::EpisodeLog log = engine.run_episode(policies, seed, cfg.negotiation_on, options);

  const fs::path path = fs::path(cfg.output_dir) / "episode.json";
  rice::write_text_file(path, rice::serialize_episode(log, rice::config_hash(cfg), seed,
                                                      cfg.negotiation_on));
  std::cerr << "temperature increase " << log.temperature_increase << ", collective reward "
            << log.collective_reward << "\nwrote " << path.string() << "\n";
  return kExitOk;
}

// --- train --------------------------------------------------------------

struct BudgetOptions {
  std::optional<int> iterations;
  std::optional<int> population;
  std::optional<int> threads;
  std::optional<std::string> weights;
};

void add_budget(CLI::App* cmd, BudgetOptions& b) {
  cmd->add_option("--iterations", b.iterations, "CEM iterations")->check(CLI::NonNegativeNumber);
  cmd->add_option("--population", b.population, "CEM population")->check(CLI::PositiveNumber);
  cmd->add_option("--threads", b.threads, "Worker threads")->check(CLI::PositiveNumber);
  cmd->add_option("--weights", b.weights, "Policy weights: per-region or shared")
      ->check(CLI::IsMember({"per-region", "shared"}));
}

rice::TrainingConfig budget(const rice::SimConfig& cfg, const BudgetOptions& b) {
  rice::TrainingConfig t = cfg.training;
  if (b.iterations) t.iterations = *b.iterations;
  if (b.population) t.population = *b.population;
  if (b.threads) t.threads = *b.threads;
  if (b.weights) t.per_region = *b.weights == "per-region";
  return t;
}

int cmd_train(const Common& c, const BudgetOptions& b) {
  const rice::SimConfig cfg = load(c);
  const rice::Engine engine(cfg);
  const std::uint64_t seed = first_seed(c, cfg);
  const rice::TrainingConfig training = budget(cfg, b);
  const rice::TrainingResult trained = rice::train_cem(
      engine, rice::PolicySpec::linear(engine.num_regions()), training, cfg.negotiation_on, seed);

  rice::PolicyRecord record;
  record.config_hash = rice::config_hash(cfg);
  record.build_id = rice::build_id();
  record.seed = seed;
  record.negotiation = cfg.negotiation_on;
  record.training = training;
  record.initial_fitness = trained.initial_fitness;
  record.best_fitness = trained.best_fitness;
  record.policies = trained.policies;

  const fs::path path = fs::path(cfg.output_dir) / "policy.json";
  rice::write_policy_record(record, path);
  if (c.verbose) {
    rice::EpisodeOptions options;
    options.verbose = &std::cout;
    engine.run_episode(record.policy_set(), seed, cfg.negotiation_on, options);
  }
  std::cerr << "fitness " << trained.initial_fitness << " -> " << trained.best_fitness << " over "
            << trained.episodes << " episodes\nwrote " << path.string() << "\n";
  return kExitOk;
}

// --- exp1 / exp2 ----------------------------------------------------------

struct ExperimentOptions {
  BudgetOptions budget;
  std::vector<std::uint64_t> seeds;
  std::string format = "json";
};

rice::ExperimentSettings settings_for(const Common& c, const ExperimentOptions& o,
                                      const rice::SimConfig& cfg) {
  rice::ExperimentSettings s;
  s.training = budget(cfg, o.budget);
  s.threads = s.training.threads;
  s.seeds = cfg.seeds;
  if (!o.seeds.empty()) s.seeds = o.seeds;
  if (c.seed) s.seeds = {*c.seed};
  return s;
}

void print_summary(const rice::ExperimentResult& result) {
  for (const rice::SubtestRecord& r : result.records) {
    std::cout << r.test << ' ' << r.ltc.label() << " temp=" << r.temperature_increase.mean
              << " u=" << r.collective_reward.mean << " mu=" << r.mitigation.mean << '\n';
  }
}

int cmd_experiment(const Common& c, const ExperimentOptions& o, bool second) {
  const rice::SimConfig cfg = load(c);
  if (!c.nego.empty()) {
    std::cerr << "note: experiments always compare both negotiation modes; --nego ignored\n";
  }
  const rice::ExperimentSettings settings = settings_for(c, o, cfg);
  const rice::ReportFormat format = rice::report_format_from_string(o.format);
  const rice::ExperimentResult result =
      second ? rice::run_experiment2(cfg, settings) : rice::run_experiment1(cfg, settings);

  const fs::path dir(cfg.output_dir);
  const fs::path path =
      dir / (result.experiment + (format == rice::ReportFormat::kStructured ? ".json" : ".csv"));
  rice::write_report(result, format, path);
  std::cerr << "wrote " << path.string() << '\n';
  for (const fs::path& p : rice::write_tables(result, dir)) {
    std::cerr << "wrote " << p.string() << '\n';
  }
  if (c.verbose) print_summary(result);
  if (!second) {
    const rice::Experiment1Summary summary = rice::summarize_experiment1(result);
    std::cerr << "spearman rank correlation " << summary.spearman << '\n';
  }
  return kExitOk;
}

// --- report -------------------------------------------------------------

int cmd_report(const Common& c, const std::string& input, const std::string& convert) {
  const rice::ExperimentResult result = rice::read_report(input);
  const fs::path dir = c.out.empty() ? fs::path(input).parent_path() : fs::path(c.out);
  if (!convert.empty()) {
    const rice::ReportFormat format = rice::report_format_from_string(convert);
    const fs::path path =
        dir / (result.experiment +
               (format == rice::ReportFormat::kStructured ? ".json" : ".csv"));
    rice::write_report(result, format, path);
    std::cerr << "wrote " << path.string() << '\n';
  }
  for (const fs::path& p : rice::write_tables(result, dir)) {
    std::cerr << "wrote " << p.string() << '\n';
  }
  if (c.verbose) print_summary(result);
  return kExitOk;
}

// --- bench --------------------------------------------------------------

int cmd_bench(const Common& c, int repeats, const std::vector<std::size_t>& sizes) {
  std::ostringstream json;
  json << "{\n  \"schema\": \"rice-bench/1\",\n  \"build_id\": \"" << rice::build_id()
       << "\",\n  \"results\": [";
  bool first = true;
  for (std::size_t n : sizes) {
    const rice::EpisodeTiming t = rice::time_episodes(n, repeats, c.seed.value_or(1));
    std::cout << n << " regions: median " << t.median_ms << " ms (min " << t.min_ms << ", max "
              << t.max_ms << ", " << t.repeats << " episodes)\n";
    json << (first ? "" : ",") << "\n    {\"num_regions\": " << n
         << ", \"repeats\": " << t.repeats << ", \"median_ms\": " << t.median_ms
         << ", \"min_ms\": " << t.min_ms << ", \"max_ms\": " << t.max_ms << "}";
    first = false;
  }
  json << "\n  ]\n}\n";
  if (!c.out.empty()) {
    const fs::path path = fs::path(c.out) / "bench.json";
    rice::write_text_file(path, json.str());
    std::cerr << "wrote " << path.string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regional climate-economy simulator with negotiation"};
  app.require_subcommand(1);
  app.set_version_flag("--version", rice::build_id());

  Common common;

  RunOptions run_opts;
  CLI::App* run = app.add_subcommand("run", "Simulate one episode with a scripted or stored policy");
  add_common(run, common);
  run->add_option("--policy", run_opts.policy, "zero, fixed, random, or a policy.json path");
  run->add_option("--mitigation", run_opts.mitigation, "fixed policy: mitigation rate");
  run->add_option("--savings", run_opts.savings, "fixed policy: saving rate");
  run->add_option("--export", run_opts.export_fraction, "fixed policy: export cap fraction");
  run->add_option("--import", run_opts.import_fraction, "fixed policy: import bid fraction");
  run->add_option("--tariff", run_opts.tariff, "fixed policy: tariff rate");

  BudgetOptions train_budget;
  CLI::App* train = app.add_subcommand("train", "Train linear policies with CEM");
  add_common(train, common);
  add_budget(train, train_budget);

  ExperimentOptions exp_opts;
  CLI::App* exp1 = app.add_subcommand("exp1", "Negotiation on vs off, all regions");
  CLI::App* exp2 = app.add_subcommand("exp2", "Labor and technology sweep, 8 tests x 9 LTCs");
  for (CLI::App* cmd : {exp1, exp2}) {
    add_common(cmd, common);
    add_budget(cmd, exp_opts.budget);
    cmd->add_option("--seeds", exp_opts.seeds, "Seed list")->delimiter(',');
    cmd->add_option("--format", exp_opts.format, "Result format: json or csv");
  }

  std::string report_in;
  std::string report_convert;
  CLI::App* report = app.add_subcommand("report", "Emit tables from a stored result");
  add_common(report, common);
  report->add_option("--in", report_in, "Result file (exp1/exp2 .json or .csv)")->required();
  report->add_option("--convert", report_convert, "Also rewrite the result as json or csv");

  int bench_repeats = 50;
  std::vector<std::size_t> bench_sizes = {27, 200};
  CLI::App* bench = app.add_subcommand("bench", "Time full episodes");
  add_common(bench, common);
  bench->add_option("--repeats", bench_repeats, "Episodes per size")->check(CLI::PositiveNumber);
  bench->add_option("--regions", bench_sizes, "Region counts")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitValidation;
  }

  try {
    if (*run) return cmd_run(common, run_opts);
    if (*train) return cmd_train(common, train_budget);
    if (*exp1) return cmd_experiment(common, exp_opts, false);
    if (*exp2) return cmd_experiment(common, exp_opts, true);
    if (*report) return cmd_report(common, report_in, report_convert);
    if (*bench) return cmd_bench(common, bench_repeats, bench_sizes);
  } catch (const rice::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitValidation;
}
