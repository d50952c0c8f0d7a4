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

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rice/config.hpp"
#include "rice/engine.hpp"

namespace rice {

struct Stat {
  double mean = 0.0;
  double std = 0.0;

  friend bool operator==(const Stat&, const Stat&) = default;
};

// Arithmetic mean and population standard deviation (divisor n).
Stat aggregate_stats(std::span<const double> samples);

// Rank 0 is the highest utility; ties go to the lower region index.
std::vector<int> rank_regions(std::span<const double> utilities);

// u_nego / u_no_nego, or nullopt when the denominator is zero.
std::optional<double> gain_ratio(double u_nego, double u_no_nego);

// Spearman correlation of two rank vectors (no ties, as produced by
// rank_regions). Returns 1 for fewer than two regions.
double spearman_correlation(std::span<const int> ranks_a, std::span<const int> ranks_b);

// Labor-and-technology configuration: relative changes of l_a and g_a.
struct LTC {
  double labor_delta = 0.0;
  double tech_delta = 0.0;

  std::string label() const;  // e.g. "la-10%_ga+0%"
  friend bool operator==(const LTC&, const LTC&) = default;
};

inline constexpr std::array<double, 3> kLtcSteps = {-0.10, 0.0, 0.10};

// The 3 x 3 grid, labor-major: (-10%,-10%), (-10%,0), ..., (+10%,+10%).
std::vector<LTC> ltc_grid();

// l_a' = l_a (1 + labor_delta), g_a' = g_a (1 + tech_delta). Throws
// ValidationError for deltas outside the grid.
RegionParams apply_ltc(RegionParams params, const LTC& ltc);

// Training budget and parallelism of an experiment run.
struct ExperimentSettings {
  TrainingConfig training;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  int threads = 1;  // concurrent (subtest, seed) jobs
};

// Aggregates of one (test, LTC) cell over seeds.
struct SubtestRecord {
  std::string test;    // e.g. "test-1-nego", "test-2-h-no-nego"
  std::string target;  // "all" or the perturbed region id
  bool negotiation = false;
  LTC ltc;
  std::string config_hash;  // of the perturbed config
  std::vector<std::uint64_t> seeds;

  Stat temperature_increase;
  Stat collective_reward;
  std::vector<Stat> region_reward;
  std::vector<Stat> region_rank;
  Stat mitigation;
  Stat savings;
  Stat export_cap;
  Stat imports;
  Stat tariffs;

  // Raw per-seed samples behind the aggregates, seed-major.
  std::vector<double> seed_temperature_increase;
  std::vector<double> seed_collective_reward;
  std::vector<std::vector<double>> seed_region_reward;

  std::int64_t episodes = 0;  // simulated, training included
  double wall_seconds = 0.0;

  // Equality of everything except wall time.
  bool same_outcome(const SubtestRecord& other) const;

  friend bool operator==(const SubtestRecord&, const SubtestRecord&) = default;
};

inline constexpr std::string_view kResultSchema = "rice-result/1";

struct ExperimentResult {
  std::string experiment;   // "exp1" or "exp2"
  std::string config_hash;  // base config
  std::string build_id;
  TrainingConfig training;
  std::vector<int> region_ids;  // position -> region_id
  std::vector<SubtestRecord> records;

  std::size_t index_of(int region_id) const;

  const SubtestRecord& find(std::string_view test, const LTC& ltc = {}) const;

  friend bool operator==(const ExperimentResult&, const ExperimentResult&) = default;
};

// Train from scratch and evaluate one policy per (seed, negotiation mode) on
// the unperturbed config: records "test-1-no-nego" and "test-1-nego".
ExperimentResult run_experiment1(const SimConfig& config, const ExperimentSettings& settings);

// Eight tests (all regions, region 15, region 19, region 6; negotiation off
// and on) times the nine LTCs. Region targets are matched by region_id.
ExperimentResult run_experiment2(const SimConfig& config, const ExperimentSettings& settings);

// Same cell as an Experiment-2 subtest, exposed for tests and the CLI.
SubtestRecord run_subtest(const SimConfig& config, const ExperimentSettings& settings,
                          const std::string& test, std::optional<int> target_region_id,
                          const LTC& ltc, bool negotiation);

// Regional comparison between the two Experiment-1 modes.
struct RegionComparison {
  int region_id = 0;
  double u_no_nego = 0.0;
  int rank_no_nego = 0;
  double u_nego = 0.0;
  int rank_nego = 0;
  std::optional<double> gain;
  int rank_delta = 0;  // rank_nego - rank_no_nego
};

struct Experiment1Summary {
  std::vector<RegionComparison> regions;
  double total_no_nego = 0.0;
  double total_nego = 0.0;
  double spearman = 0.0;
};

Experiment1Summary summarize_experiment1(const ExperimentResult& result);

// Average episode reward of the tested region(s) with and without
// negotiation: one row per (target, LTC) plus one pooled row per target.
struct RegionalAverageRow {
  std::string target;  // "15", "19", "6" or "all"
  std::string ltc;     // LTC label, or "pooled"
  double u_no_nego = 0.0;
  double u_nego = 0.0;
  std::optional<double> difference;  // u_nego / u_no_nego - 1
};

std::vector<RegionalAverageRow> summarize_experiment2(const ExperimentResult& result);

// Two decimals truncated toward zero, e.g. 2.8 / 3.6 -> "0.77".
std::string format_gain(double gain);

// "-14%" style percentage, "undefined" when absent.
std::string format_percent(std::optional<double> fraction);

}  // namespace rice
