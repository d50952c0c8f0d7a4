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

#include "rice/experiments.hpp"

#include <chrono>
#include <string>

#include "rice/error.hpp"
#include "rice/parallel.hpp"
#include "rice/trainer.hpp"

namespace rice {

namespace {

struct Cell {
  std::string test;
  std::optional<int> target_region_id;
  LTC ltc;
  bool negotiation = false;
};

struct SeedOutcome {
  double temperature_increase = 0.0;
  double collective_reward = 0.0;
  std::vector<double> region_rewards;
  ActionMeans actions;
  std::int64_t episodes = 0;
  double seconds = 0.0;
};

SimConfig perturbed_config(const SimConfig& base, const Cell& cell) {
  SimConfig cfg = base;
  bool matched = !cell.target_region_id.has_value();
  for (RegionParams& r : cfg.regions) {
    if (!cell.target_region_id || r.region_id == *cell.target_region_id) {
      r = apply_ltc(r, cell.ltc);
      matched = true;
    }
  }
  if (!matched) {
    throw ValidationError(cell.test + ": config has no region with id " +
                          std::to_string(*cell.target_region_id));
  }
  return cfg;
}

SeedOutcome run_seed(const Engine& engine, const TrainingConfig& training, bool negotiation,
                     std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  TrainingConfig single = training;
  single.threads = 1;
  const TrainingResult trained =
      train_cem(engine, PolicySpec::linear(engine.num_regions()), single, negotiation, seed);
  const EpisodeLog log = engine.run_episode(trained.policy_set(), seed, negotiation);

  SeedOutcome out;
  out.temperature_increase = log.temperature_increase;
  out.collective_reward = log.collective_reward;
  out.region_rewards = log.region_rewards;
  out.actions = log.action_means();
  out.episodes = trained.episodes + 1;
  out.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

SubtestRecord assemble(const Cell& cell, const SimConfig& cfg,
                       const std::vector<std::uint64_t>& seeds,
                       std::span<const SeedOutcome> outcomes) {
  SubtestRecord rec;
  rec.test = cell.test;
  rec.target = cell.target_region_id ? std::to_string(*cell.target_region_id) : "all";
  rec.negotiation = cell.negotiation;
  rec.ltc = cell.ltc;
  rec.config_hash = config_hash(cfg);
  rec.seeds = seeds;

  const std::size_t n = cfg.regions.size();
  std::vector<double> temp, collective, mitigation, savings, export_cap, imports, tariffs;
  std::vector<std::vector<double>> reward_by_region(n), rank_by_region(n);
  for (const SeedOutcome& o : outcomes) {
    temp.push_back(o.temperature_increase);
    collective.push_back(o.collective_reward);
    mitigation.push_back(o.actions.mitigation);
    savings.push_back(o.actions.savings);
    export_cap.push_back(o.actions.export_cap);
    imports.push_back(o.actions.imports);
    tariffs.push_back(o.actions.tariffs);
    const std::vector<int> ranks = rank_regions(o.region_rewards);
    for (std::size_t i = 0; i < n; ++i) {
      reward_by_region[i].push_back(o.region_rewards[i]);
      rank_by_region[i].push_back(static_cast<double>(ranks[i]));
    }
    rec.seed_region_reward.push_back(o.region_rewards);
    rec.episodes += o.episodes;
    rec.wall_seconds += o.seconds;
  }
  rec.seed_temperature_increase = temp;
  rec.seed_collective_reward = collective;
  rec.temperature_increase = aggregate_stats(temp);
  rec.collective_reward = aggregate_stats(collective);
  rec.mitigation = aggregate_stats(mitigation);
  rec.savings = aggregate_stats(savings);
  rec.export_cap = aggregate_stats(export_cap);
  rec.imports = aggregate_stats(imports);
  rec.tariffs = aggregate_stats(tariffs);
  for (std::size_t i = 0; i < n; ++i) {
    rec.region_reward.push_back(aggregate_stats(reward_by_region[i]));
    rec.region_rank.push_back(aggregate_stats(rank_by_region[i]));
  }
  return rec;
}

// Runs every (cell, seed) job concurrently and assembles records in cell order.
std::vector<SubtestRecord> run_cells(const SimConfig& base, const ExperimentSettings& settings,
                                     const std::vector<Cell>& cells) {
  if (settings.seeds.empty()) throw ValidationError("experiment: at least one seed required");
  std::vector<SimConfig> configs;
  std::vector<Engine> engines;
  configs.reserve(cells.size());
  engines.reserve(cells.size());
  for (const Cell& cell : cells) {
    configs.push_back(perturbed_config(base, cell));
    engines.emplace_back(configs.back());
  }

  const std::size_t seeds = settings.seeds.size();
  std::vector<SeedOutcome> outcomes(cells.size() * seeds);
  parallel_for(outcomes.size(), settings.threads, [&](std::size_t job) {
    const std::size_t c = job / seeds;
    outcomes[job] = run_seed(engines[c], settings.training, cells[c].negotiation,
                             settings.seeds[job % seeds]);
  });

  std::vector<SubtestRecord> records;
  records.reserve(cells.size());
  for (std::size_t c = 0; c < cells.size(); ++c) {
    records.push_back(assemble(cells[c], configs[c], settings.seeds,
                               std::span(outcomes).subspan(c * seeds, seeds)));
  }
  return records;
}

ExperimentResult make_result(const char* name, const SimConfig& config,
                             const ExperimentSettings& settings) {
  ExperimentResult result;
  result.experiment = name;
  result.config_hash = config_hash(config);
  result.build_id = build_id();
  result.training = settings.training;
  for (const RegionParams& r : config.regions) result.region_ids.push_back(r.region_id);
  return result;
}

std::string mode_suffix(bool negotiation) { return negotiation ? "nego" : "no-nego"; }

}  // namespace

bool SubtestRecord::same_outcome(const SubtestRecord& other) const {
  SubtestRecord a = *this;
  SubtestRecord b = other;
  a.wall_seconds = b.wall_seconds = 0.0;
  return a == b;
}

std::size_t ExperimentResult::index_of(int region_id) const {
  for (std::size_t i = 0; i < region_ids.size(); ++i) {
    if (region_ids[i] == region_id) return i;
  }
  throw ValidationError("result has no region with id " + std::to_string(region_id));
}

const SubtestRecord& ExperimentResult::find(std::string_view test, const LTC& ltc) const {
  for (const SubtestRecord& r : records) {
    if (r.test == test && r.ltc == ltc) return r;
  }
  throw ValidationError("result has no record '" + std::string(test) + "' for LTC " +
                        ltc.label());
}

SubtestRecord run_subtest(const SimConfig& config, const ExperimentSettings& settings,
                          const std::string& test, std::optional<int> target_region_id,
                          const LTC& ltc, bool negotiation) {
  return run_cells(config, settings, {Cell{test, target_region_id, ltc, negotiation}}).front();
}

ExperimentResult run_experiment1(const SimConfig& config, const ExperimentSettings& settings) {
  ExperimentResult result = make_result("exp1", config, settings);
  std::vector<Cell> cells;
  for (bool nego : {false, true}) {
    cells.push_back({"test-1-" + mode_suffix(nego), std::nullopt, LTC{}, nego});
  }
  result.records = run_cells(config, settings, cells);
  return result;
}

ExperimentResult run_experiment2(const SimConfig& config, const ExperimentSettings& settings) {
  struct Target {
    const char* tag;
    std::optional<int> region_id;
  };
  const Target targets[] = {{"a", std::nullopt}, {"h", 15}, {"m", 19}, {"l", 6}};

  ExperimentResult result = make_result("exp2", config, settings);
  std::vector<Cell> cells;
  for (bool nego : {false, true}) {
    for (const Target& target : targets) {
      const std::string test = std::string("test-2-") + target.tag + "-" + mode_suffix(nego);
      for (const LTC& ltc : ltc_grid()) cells.push_back({test, target.region_id, ltc, nego});
    }
  }
  result.records = run_cells(config, settings, cells);
  if (result.records.size() != 8 * 9) {
    throw ValidationError("experiment 2: expected 72 subtest records");
  }
  return result;
}

Experiment1Summary summarize_experiment1(const ExperimentResult& result) {
  const SubtestRecord& off = result.find("test-1-no-nego");
  const SubtestRecord& on = result.find("test-1-nego");
  const std::size_t n = off.region_reward.size();
  if (on.region_reward.size() != n) {
    throw ValidationError("experiment 1: mode records differ in region count");
  }
  std::vector<double> u_off(n), u_on(n);
  for (std::size_t i = 0; i < n; ++i) {
    u_off[i] = off.region_reward[i].mean;
    u_on[i] = on.region_reward[i].mean;
  }
  const std::vector<int> rank_off = rank_regions(u_off);
  const std::vector<int> rank_on = rank_regions(u_on);

  Experiment1Summary summary;
  for (std::size_t i = 0; i < n; ++i) {
    RegionComparison row;
    row.region_id = i < result.region_ids.size() ? result.region_ids[i] : static_cast<int>(i);
    row.u_no_nego = u_off[i];
    row.rank_no_nego = rank_off[i];
    row.u_nego = u_on[i];
    row.rank_nego = rank_on[i];
    row.gain = gain_ratio(u_on[i], u_off[i]);
    row.rank_delta = rank_on[i] - rank_off[i];
    summary.total_no_nego += u_off[i];
    summary.total_nego += u_on[i];
    summary.regions.push_back(row);
  }
  summary.spearman = spearman_correlation(rank_off, rank_on);
  return summary;
}

std::vector<RegionalAverageRow> summarize_experiment2(const ExperimentResult& result) {
  struct Target {
    const char* tag;
    std::string label;
  };
  const Target targets[] = {{"h", "15"}, {"m", "19"}, {"l", "6"}, {"a", "all"}};

  // Mean episode reward of the tested region, or of all regions for "all".
  auto tested_reward = [&](const SubtestRecord& rec) {
    if (rec.target == "all") {
      double total = 0.0;
      for (const Stat& s : rec.region_reward) total += s.mean;
      return total / static_cast<double>(rec.region_reward.size());
    }
    return rec.region_reward.at(result.index_of(std::stoi(rec.target))).mean;
  };

  std::vector<RegionalAverageRow> rows;
  for (const Target& target : targets) {
    const std::string off_name = std::string("test-2-") + target.tag + "-no-nego";
    const std::string on_name = std::string("test-2-") + target.tag + "-nego";
    double pooled_off = 0.0;
    double pooled_on = 0.0;
    const auto grid = ltc_grid();
    for (const LTC& ltc : grid) {
      RegionalAverageRow row;
      row.target = target.label;
      row.ltc = ltc.label();
      row.u_no_nego = tested_reward(result.find(off_name, ltc));
      row.u_nego = tested_reward(result.find(on_name, ltc));
      if (auto g = gain_ratio(row.u_nego, row.u_no_nego)) row.difference = *g - 1.0;
      pooled_off += row.u_no_nego;
      pooled_on += row.u_nego;
      rows.push_back(row);
    }
    RegionalAverageRow pooled;
    pooled.target = target.label;
    pooled.ltc = "pooled";
    pooled.u_no_nego = pooled_off / static_cast<double>(grid.size());
    pooled.u_nego = pooled_on / static_cast<double>(grid.size());
    if (auto g = gain_ratio(pooled.u_nego, pooled.u_no_nego)) pooled.difference = *g - 1.0;
    rows.push_back(pooled);
  }
  return rows;
}

}  // namespace rice
