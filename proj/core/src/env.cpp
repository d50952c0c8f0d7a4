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

#include "rice/env.hpp"

#include <string>

#include "rice/error.hpp"

namespace rice {

Environment::Environment(SimConfig config) : engine_(std::in_place, std::move(config)) {}

Environment Environment::from_file(const std::filesystem::path& path) {
  return Environment(load_config(path));
}

Environment Environment::from_text(std::string_view json, const std::filesystem::path& base_dir) {
  return Environment(parse_config(json, base_dir));
}

const Engine& Environment::engine() const {
  if (!engine_) throw ValidationError("environment is closed");
  return *engine_;
}

std::size_t Environment::num_regions() const { return engine().num_regions(); }
std::size_t Environment::observation_size() const { return obs::size(num_regions()); }
int Environment::num_steps() const { return engine().num_steps(); }
const SimConfig& Environment::config() const { return engine().config(); }

std::vector<Observation> Environment::observe() const {
  std::vector<Observation> out;
  out.reserve(num_regions());
  for (std::size_t i = 0; i < num_regions(); ++i) {
    out.push_back(engine_->build_observation(*state_, i));
  }
  return out;
}

std::vector<Observation> Environment::reset(std::uint64_t seed) {
  const Engine& e = engine();
  state_ = e.reset(seed);
  log_ = EpisodeLog{};
  log_.num_regions = e.num_regions();
  log_.num_steps = e.num_steps();
  log_.initial_temp_atmosphere = state_->climate.temp_atmosphere;
  return observe();
}

EnvStep Environment::step(std::span<const ActionVector> actions) {
  const Engine& e = engine();
  if (!state_) throw ValidationError("step: call reset first");
  if (done()) throw ValidationError("step: episode is done, call reset");
  const std::size_t n = e.num_regions();
  if (actions.size() != n) {
    throw ValidationError("step: expected " + std::to_string(n) + " actions, got " +
                          std::to_string(actions.size()));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (actions[i].import_bids.size() != n || actions[i].tariffs.size() != n) {
      throw ValidationError("step: region " + std::to_string(i) +
                            " partner vectors must have length " + std::to_string(n));
    }
  }

  StepResult result = e.step(*state_, actions);
  state_ = std::move(result.state);
  log_.records.insert(log_.records.end(), result.records.begin(), result.records.end());
  log_.globals.push_back(result.global);

  EnvStep out;
  out.rewards = std::move(result.rewards);
  out.records = std::move(result.records);
  out.global = result.global;
  out.done = done();
  if (out.done) log_.finalize();
  out.observations = observe();
  return out;
}

bool Environment::done() const {
  return state_ && state_->step_index >= engine().num_steps();
}

int Environment::step_index() const { return state_ ? state_->step_index : 0; }

const WorldState& Environment::state() const {
  engine();
  if (!state_) throw ValidationError("environment has not been reset");
  return *state_;
}

const EpisodeLog& Environment::log() const {
  engine();
  return log_;
}

void Environment::close() {
  engine_.reset();
  state_.reset();
}

}  // namespace rice
