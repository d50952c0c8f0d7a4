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
#include <iosfwd>
#include <optional>
#include <span>
#include <vector>

#include "rice/climate.hpp"
#include "rice/config.hpp"
#include "rice/econ.hpp"
#include "rice/negotiation.hpp"
#include "rice/observation.hpp"
#include "rice/policy.hpp"

namespace rice {

// Global means of the five action fields over all regions in one step.
struct ActionMeans {
  double mitigation = 0.0;
  double savings = 0.0;
  double export_cap = 0.0;
  double imports = 0.0;  // mean over partners of import bids
  double tariffs = 0.0;  // mean over partners of tariffs

  friend bool operator==(const ActionMeans&, const ActionMeans&) = default;
};

struct WorldState {
  int step_index = 0;
  std::vector<RegionState> regions;
  ClimateState climate;
  std::optional<NegotiationState> negotiation;
  ActionMeans previous_actions;
  std::uint64_t seed = 0;
  std::uint64_t episode = 0;

  friend bool operator==(const WorldState&, const WorldState&) = default;
};

// What one region did and experienced during one step. Stocks (labor,
// technology, capital, sigma) are the values entering the step.
struct RegionStepRecord {
  double utility = 0.0;
  double labor = 0.0;
  double technology = 0.0;
  double capital = 0.0;
  double sigma = 0.0;
  double production = 0.0;
  double gross_output = 0.0;
  double domestic_consumption = 0.0;
  double consumption = 0.0;
  double exports = 0.0;
  double emissions = 0.0;
  double mitigation = 0.0;  // after masking
  double savings = 0.0;
  double export_cap = 0.0;
  double mean_imports = 0.0;
  double mean_tariffs = 0.0;
  double floor = 0.0;

  friend bool operator==(const RegionStepRecord&, const RegionStepRecord&) = default;
};

// Climate after the step's update.
struct GlobalStepRecord {
  double temp_atmosphere = 0.0;
  double temp_ocean = 0.0;
  double mass_atmosphere = 0.0;
  double emissions = 0.0;

  friend bool operator==(const GlobalStepRecord&, const GlobalStepRecord&) = default;
};

struct EpisodeLog {
  std::size_t num_regions = 0;
  int num_steps = 0;  // expected length of a complete episode
  double initial_temp_atmosphere = 0.0;
  std::vector<RegionStepRecord> records;  // step-major: records[t * N + i]
  std::vector<GlobalStepRecord> globals;  // one per step
  std::vector<NegotiationState> negotiation;  // filled only when recording

  // Summary, filled by finalize().
  std::vector<double> region_rewards;
  double collective_reward = 0.0;
  double temperature_increase = 0.0;

  int steps_recorded() const { return static_cast<int>(globals.size()); }
  bool complete() const { return steps_recorded() == num_steps; }
  const RegionStepRecord& at(int step, std::size_t region) const {
    return records[static_cast<std::size_t>(step) * num_regions + region];
  }

  // Computes the summary; throws ValidationError on an incomplete log.
  void finalize();

  // Mean of each action field over all steps and regions.
  ActionMeans action_means() const;

  friend bool operator==(const EpisodeLog&, const EpisodeLog&) = default;
};

struct EpisodeRewards {
  std::vector<double> regional;  // u_i
  double collective = 0.0;       // u
};

// u_i = sum over steps of step utilities, u = sum of u_i.
EpisodeRewards episode_rewards(const EpisodeLog& log);

// Final minus initial atmospheric temperature.
double temperature_increase(const EpisodeLog& log);

struct StepResult {
  WorldState state;
  std::vector<double> rewards;
  std::vector<RegionStepRecord> records;
  GlobalStepRecord global;
};

struct EpisodeOptions {
  std::uint64_t episode = 0;
  bool record_negotiation = false;
  std::ostream* verbose = nullptr;  // line-delimited JSON per step when set
};

// Owns a validated config and runs the step pipeline:
//   negotiation -> actions -> masking -> trade -> economy -> emissions ->
//   climate -> rewards -> logging.
// An Engine is immutable; one instance can drive any number of concurrent
// episodes.
class Engine {
 public:
  explicit Engine(SimConfig config);

  const SimConfig& config() const { return config_; }
  std::size_t num_regions() const { return config_.regions.size(); }
  int num_steps() const { return config_.econ.num_steps; }

  WorldState reset(std::uint64_t seed, std::uint64_t episode = 0) const;

  // Pure step. Actions are sanitized and masked with the state's negotiated
  // floors. Throws NumericError naming step, region and field on NaN/Inf.
  StepResult step(const WorldState& state, std::span<const ActionVector> actions) const;

  Observation build_observation(const WorldState& state, std::size_t region) const;

  EpisodeLog run_episode(const PolicySet& policies, std::uint64_t seed, bool negotiation_on,
                         const EpisodeOptions& options = {}) const;

  // Scratch buffers reused across steps of one episode.
  struct Workspace {
    std::vector<ActionVector> actions;
    std::vector<double> production;
    std::vector<double> gross_output;
    std::vector<RegionState> next_regions;
    std::vector<RegionStepRecord> records;
    TradeOutcome trade;
  };

  // In-place step used by run_episode. The state is only modified after every
  // value has been computed and checked, so a throw leaves it untouched.
  void advance(WorldState& state, std::span<const ActionVector> actions, Workspace& ws,
               GlobalStepRecord& global) const;

 private:
  SimConfig config_;
};

}  // namespace rice
