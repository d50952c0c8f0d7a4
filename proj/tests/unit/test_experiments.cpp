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

#include <gtest/gtest.h>

#include <cmath>

#include "published.hpp"
#include "rice/error.hpp"
#include "rice/config.hpp"
#include "rice/experiments.hpp"

namespace rice {
namespace {

namespace pub = testing::published;

TEST(Stats, PopulationConvention) {
  const std::vector<double> x = {1.0, 2.0, 3.0, 4.0};
  const Stat s = aggregate_stats(x);
  EXPECT_DOUBLE_EQ(s.mean, 2.5);
  EXPECT_DOUBLE_EQ(s.std, std::sqrt(1.25));
  EXPECT_EQ(aggregate_stats(std::vector<double>{7.0}).std, 0.0);
  EXPECT_THROW(aggregate_stats(std::vector<double>{}), ValidationError);
}

TEST(Ranks, DescendingWithLowerIdFirstOnTies) {
  EXPECT_EQ(rank_regions(std::vector<double>{1.0, 2.0}), (std::vector<int>{1, 0}));
  EXPECT_EQ(rank_regions(std::vector<double>{3.0, 3.0, 3.0}), (std::vector<int>{0, 1, 2}));
}

TEST(Ranks, PublishedNoNegoColumn) {
  const auto ranks = rank_regions(pub::kRewardNoNego);
  EXPECT_EQ(ranks[15], 0);
  EXPECT_EQ(ranks[20], 1);
  EXPECT_EQ(ranks[6], 26);
}

TEST(Gain, RatioAndFormatting) {
  EXPECT_EQ(format_gain(*gain_ratio(5.0, 5.8)), "0.86");
  EXPECT_EQ(format_gain(*gain_ratio(2.8, 3.6)), "0.77");
  EXPECT_EQ(format_gain(*gain_ratio(4.2, 4.2)), "1.00");
  EXPECT_FALSE(gain_ratio(1.0, 0.0).has_value());
  EXPECT_EQ(format_percent(std::nullopt), "undefined");
  EXPECT_EQ(format_percent(-0.14), "-14%");
  EXPECT_EQ(format_percent(0.02), "+2%");
}

TEST(Gain, PublishedColumn) {
  for (std::size_t i = 0; i < 27; ++i) {
    EXPECT_EQ(format_gain(*gain_ratio(pub::kRewardNego[i], pub::kRewardNoNego[i])), pub::kGain[i])
        << "region " << i;
  }
}

TEST(Spearman, Extremes) {
  const std::vector<int> a = {0, 1, 2, 3};
  const std::vector<int> b = {3, 2, 1, 0};
  EXPECT_DOUBLE_EQ(spearman_correlation(a, a), 1.0);
  EXPECT_DOUBLE_EQ(spearman_correlation(a, b), -1.0);
  EXPECT_THROW(spearman_correlation(a, std::vector<int>{0, 1}), ValidationError);
}

TEST(Ltc, GridAndLabels) {
  const auto grid = ltc_grid();
  ASSERT_EQ(grid.size(), 9u);
  EXPECT_EQ(grid.front().label(), "la-10%_ga-10%");
  EXPECT_EQ(grid[4].label(), "la0%_ga0%");
  EXPECT_EQ(grid[1].labor_delta, -0.1);
  EXPECT_EQ(grid[1].tech_delta, 0.0);
}

TEST(Ltc, ApplyToRegionZero) {
  const RegionParams r0 = default_regions()[0];
  EXPECT_EQ(apply_ltc(r0, {}), r0);
  EXPECT_NEAR(apply_ltc(r0, {0.1, 0.0}).l_a, 736.553, 5e-4);  // printed to 3 decimals
  EXPECT_NEAR(apply_ltc(r0, {0.0, -0.1}).g_a, 0.1098, 1e-12);
  RegionParams changed = apply_ltc(r0, {0.1, 0.1});
  changed.l_a = r0.l_a;
  changed.g_a = r0.g_a;
  EXPECT_EQ(changed, r0);
  EXPECT_THROW(apply_ltc(r0, {0.2, 0.0}), ValidationError);
}

ExperimentSettings tiny_settings() {
  ExperimentSettings s;
  s.training.iterations = 1;
  s.training.population = 4;
  s.seeds = {1, 2};
  return s;
}

TEST(Experiment1, RecordsAndSummary) {
  const SimConfig cfg = with_regions(default_config(), tiled_default_regions(4));
  const ExperimentResult r = run_experiment1(cfg, tiny_settings());
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_EQ(r.records[0].test, "test-1-no-nego");
  EXPECT_EQ(r.records[1].test, "test-1-nego");
  EXPECT_EQ(r.records[0].seed_collective_reward.size(), 2u);
  EXPECT_EQ(r.records[0].region_reward.size(), 4u);
  EXPECT_EQ(r.region_ids, (std::vector<int>{0, 1, 2, 3}));
  const Experiment1Summary s = summarize_experiment1(r);
  EXPECT_EQ(s.regions.size(), 4u);
  EXPECT_NEAR(s.total_no_nego, r.records[0].collective_reward.mean, 1e-9);
  EXPECT_GE(s.spearman, -1.0);
  EXPECT_LE(s.spearman, 1.0);
}

TEST(Experiment1, ParallelJobsDoNotChangeResults) {
  const SimConfig cfg = with_regions(default_config(), tiled_default_regions(3));
  ExperimentSettings one = tiny_settings();
  ExperimentSettings many = tiny_settings();
  many.threads = 4;
  const ExperimentResult a = run_experiment1(cfg, one);
  const ExperimentResult b = run_experiment1(cfg, many);
  ASSERT_EQ(a.records.size(), b.records.size());
  for (std::size_t k = 0; k < a.records.size(); ++k) {
    EXPECT_TRUE(a.records[k].same_outcome(b.records[k]));
  }
}

TEST(Experiment2, MissingTargetRegionRejected) {
  const SimConfig cfg = with_regions(default_config(), tiled_default_regions(4));
  EXPECT_THROW(run_experiment2(cfg, tiny_settings()), ValidationError);
}

TEST(Experiment2, SubtestMatchesExperimentOneCell) {
  const SimConfig cfg = with_regions(default_config(), tiled_default_regions(20));
  ExperimentSettings s = tiny_settings();
  s.seeds = {4};
  const ExperimentResult e1 = run_experiment1(cfg, s);
  const SubtestRecord cell = run_subtest(cfg, s, "test-2-m-nego", 19, LTC{}, true);
  const SubtestRecord& base = e1.find("test-1-nego");
  EXPECT_EQ(cell.config_hash, base.config_hash);
  EXPECT_EQ(cell.seed_region_reward, base.seed_region_reward);
  EXPECT_EQ(cell.seed_temperature_increase, base.seed_temperature_increase);
  EXPECT_EQ(cell.mitigation, base.mitigation);
}

}  // namespace
}  // namespace rice
