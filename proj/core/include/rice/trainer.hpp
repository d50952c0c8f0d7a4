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
#include <vector>

#include "rice/config.hpp"
#include "rice/engine.hpp"
#include "rice/policy.hpp"

namespace rice {

struct TrainingResult {
  std::vector<PolicySpec> policies;  // one when shared, N when per-region
  double initial_fitness = 0.0;      // template fitness
  double best_fitness = 0.0;
  std::vector<double> best_history;  // best-so-far after each iteration
  std::int64_t episodes = 0;         // episodes simulated, template included

  PolicySet policy_set() const;
};

// Cross-entropy search over linear-policy weights. Fitness is the mean
// regional episode reward of one deterministic episode. Each iteration draws
// `population` Gaussian candidates around the current mean, refits mean and
// spread to the top elite_fraction, and keeps the best candidate seen so far
// (the template included), so best_history never decreases.
//
// In per-region mode every region owns a weight vector and elites are picked
// region by region on that region's own episode reward.
//
// Candidates are evaluated on `settings.threads` workers; sampling and
// reduction are sequential, so results do not depend on the thread count.
TrainingResult train_cem(const Engine& engine, const PolicySpec& policy_template,
                         const TrainingConfig& settings, bool negotiation_on,
                         std::uint64_t seed);

}  // namespace rice
