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

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rice/engine.hpp"

namespace rice {

struct EnvStep {
  std::vector<Observation> observations;
  std::vector<double> rewards;
  bool done = false;
  std::vector<RegionStepRecord> records;  // per-region info
  GlobalStepRecord global;
};

// Stateful reset/step wrapper around Engine for host-language bindings.
// One episode in flight per environment. Actions are supplied by the caller,
// so no negotiation runs and floors stay at zero.
class Environment {
 public:
  explicit Environment(SimConfig config);
  static Environment from_file(const std::filesystem::path& path);
  static Environment from_text(std::string_view json, const std::filesystem::path& base_dir = {});

  std::size_t num_regions() const;
  std::size_t observation_size() const;
  int num_steps() const;
  const SimConfig& config() const;

  std::vector<Observation> reset(std::uint64_t seed);

  // Shapes are checked before any state changes: one action per region,
  // import_bids and tariffs of length N. Throws ValidationError on a bad
  // shape, before reset, after done or after close.
  EnvStep step(std::span<const ActionVector> actions);

  bool done() const;
  int step_index() const;
  const WorldState& state() const;

  // Log of the current episode so far; finalized once done.
  const EpisodeLog& log() const;

  void close();
  bool closed() const { return !engine_.has_value(); }

 private:
  const Engine& engine() const;
  std::vector<Observation> observe() const;

  std::optional<Engine> engine_;
  std::optional<WorldState> state_;
  EpisodeLog log_;
};

}  // namespace rice
