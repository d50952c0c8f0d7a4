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

#include <algorithm>
#include <sstream>

#include "oracle.hpp"
#include "rice/config.hpp"
#include "rice/engine.hpp"
#include "rice/error.hpp"

namespace rice {
namespace {

Engine small_engine(std::size_t n = 4) {
  return Engine(with_regions(default_config(), tiled_default_regions(n)));
}

TEST(Engine, ResetMatchesCalibration) {
  const Engine engine(default_config());
  const WorldState s = engine.reset(3);
  ASSERT_EQ(s.regions.size(), 27u);
  EXPECT_EQ(s.step_index, 0);
  EXPECT_DOUBLE_EQ(s.regions[0].labor, 476.878);
  EXPECT_DOUBLE_EQ(s.regions[0].technology, 1.872);
  EXPECT_DOUBLE_EQ(s.climate.temp_atmosphere, 0.85);
}

TEST(Engine, ObservationLayout) {
  const Engine engine = small_engine(5);
  const WorldState s = engine.reset(1);
  const Observation o = engine.build_observation(s, 2);
  EXPECT_EQ(o.features.size(), obs::size(5));
  EXPECT_NO_THROW(o.validate());
  EXPECT_EQ(o[obs::kStepFraction], 0.0);
  EXPECT_EQ(o[obs::kRegionOneHot + 2], 1.0);
  EXPECT_EQ(o[obs::kRegionOneHot + 1], 0.0);
  EXPECT_DOUBLE_EQ(o[obs::kLabor], s.regions[2].labor / 1000.0);
  EXPECT_THROW(engine.build_observation(s, 5), ValidationError);
}

TEST(Engine, StepRecordsMatchOracle) {
  const SimConfig cfg = testing::oracle_config();
  const auto actions = testing::oracle_actions();
  const EpisodeLog log = testing::engine_run(cfg, actions);
  const auto oracle = testing::oracle_run(cfg, actions);
  EXPECT_LT(testing::max_relative_difference(log, oracle), 1e-12);
}

TEST(Engine, FirstStepOfRegionZero) {
  const Engine engine(default_config());
  const PolicySet zero{Policy(PolicySpec::zero())};
  const EpisodeLog log = engine.run_episode(zero, 1, false);
  // Stocks entering step 1 are the first updates.
  EXPECT_DOUBLE_EQ(log.at(1, 0).labor, 482.40315188667415);
  EXPECT_NEAR(log.at(1, 0).technology, 2.1065718042616, 1e-12);
  EXPECT_DOUBLE_EQ(log.at(0, 0).production, 0.7256217900348811);
}

TEST(Engine, StepIsPure) {
  const Engine engine = small_engine();
  const WorldState s = engine.reset(1);
  const WorldState copy = s;
  std::vector<ActionVector> actions(4, ActionVector{0.2, 0.3, 0.0, {}, {}});
  const StepResult a = engine.step(s, actions);
  const StepResult b = engine.step(s, actions);
  EXPECT_EQ(s, copy);
  EXPECT_EQ(a.state, b.state);
  EXPECT_EQ(a.state.step_index, 1);
}

TEST(Engine, RejectsWrongShapesWithoutChangingState) {
  const Engine engine = small_engine();
  WorldState s = engine.reset(1);
  const WorldState copy = s;
  Engine::Workspace ws;
  GlobalStepRecord g;
  std::vector<ActionVector> three(3);
  EXPECT_THROW(engine.advance(s, three, ws, g), ValidationError);
  std::vector<ActionVector> bad(4, ActionVector{0.1, 0.1, 0.0, {0.0, 0.0}, {}});
  EXPECT_THROW(engine.advance(s, bad, ws, g), ValidationError);
  EXPECT_EQ(s, copy);
}

TEST(Engine, NumericFailureNamesStepRegionAndField) {
  SimConfig cfg = with_regions(default_config(), tiled_default_regions(2));
  cfg.regions[1].damage_a3 = 0.5;
  cfg.initial_climate.temp_atmosphere = -1.0;
  const Engine engine(cfg);
  WorldState s = engine.reset(1);
  const WorldState copy = s;
  Engine::Workspace ws;
  GlobalStepRecord g;
  std::vector<ActionVector> actions(2);
  try {
    engine.advance(s, actions, ws, g);
    FAIL() << "expected NumericError";
  } catch (const NumericError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("step 0"), std::string::npos) << what;
    EXPECT_NE(what.find("region 1"), std::string::npos) << what;
    EXPECT_NE(what.find("gross_output"), std::string::npos) << what;
  }
  EXPECT_EQ(s, copy);
}

TEST(Engine, EpisodeIsDeterministic) {
  const Engine engine(default_config());
  const PolicySet policies{Policy(PolicySpec::random(5))};
  const EpisodeLog a = engine.run_episode(policies, 42, true, {0, true, nullptr});
  for (int k = 0; k < 2; ++k) {
    EXPECT_EQ(a, engine.run_episode(policies, 42, true, {0, true, nullptr}));
  }
  EXPECT_NE(a, engine.run_episode(policies, 43, true, {0, true, nullptr}));
}

TEST(Engine, ZeroPolicyIgnoresNegotiation) {
  const Engine engine(default_config());
  const PolicySet zero{Policy(PolicySpec::zero())};
  EXPECT_EQ(engine.run_episode(zero, 1, false), engine.run_episode(zero, 1, true));
}

TEST(Engine, FloorsRaiseMitigation) {
  const Engine engine = small_engine(3);
  const PolicySet agreeable{
      Policy(PolicySpec::fixed(0.1, 0.2, 0.0, 0.0, 0.0, 0.0, 0.5, true))};
  const EpisodeLog on = engine.run_episode(agreeable, 1, true, {0, true, nullptr});
  const EpisodeLog off = engine.run_episode(agreeable, 1, false);
  ASSERT_EQ(on.negotiation.size(), 20u);
  for (const RegionStepRecord& r : on.records) {
    EXPECT_DOUBLE_EQ(r.mitigation, 0.5);
    EXPECT_DOUBLE_EQ(r.floor, 0.5);
  }
  EXPECT_LT(on.temperature_increase, off.temperature_increase);
}

TEST(Engine, HigherMitigationCoolsTheEnd) {
  const Engine engine(default_config());
  const auto high = engine.run_episode(PolicySet{Policy(PolicySpec::fixed(0.9, 0.2))}, 1, false);
  const auto none = engine.run_episode(PolicySet{Policy(PolicySpec::fixed(0.0, 0.2))}, 1, false);
  EXPECT_LT(high.globals.back().temp_atmosphere, none.globals.back().temp_atmosphere);
}

TEST(Engine, VerboseStreamsOneLinePerStep) {
  const Engine engine = small_engine(2);
  std::ostringstream out;
  engine.run_episode(PolicySet{Policy(PolicySpec::random(1))}, 1, true, {0, false, &out});
  const std::string text = out.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 20);
  EXPECT_NE(text.find("\"negotiation\""), std::string::npos);
}

TEST(EpisodeLog, RewardsAreSums) {
  EpisodeLog log;
  log.num_regions = 2;
  log.num_steps = 2;
  log.records.resize(4);
  log.records[0].utility = 1;  // step 0, region 0
  log.records[1].utility = 3;  // step 0, region 1
  log.records[2].utility = 2;
  log.records[3].utility = 4;
  log.globals.resize(2);
  const EpisodeRewards r = episode_rewards(log);
  EXPECT_EQ(r.regional, (std::vector<double>{3.0, 7.0}));
  EXPECT_EQ(r.collective, 10.0);
}

TEST(EpisodeLog, IncompleteLogRejected) {
  EpisodeLog log;
  log.num_regions = 2;
  log.num_steps = 3;
  log.records.resize(4);
  log.globals.resize(2);
  EXPECT_THROW(episode_rewards(log), ValidationError);
  EXPECT_THROW(log.finalize(), ValidationError);
}

TEST(EpisodeLog, AllZeroUtilities) {
  EpisodeLog log;
  log.num_regions = 3;
  log.num_steps = 2;
  log.records.resize(6);
  log.globals.resize(2);
  const EpisodeRewards r = episode_rewards(log);
  EXPECT_EQ(r.regional, std::vector<double>(3, 0.0));
  EXPECT_EQ(r.collective, 0.0);
}

}  // namespace
}  // namespace rice
