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

#include "rice/trainer.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <string>

#include "rice/error.hpp"
#include "rice/parallel.hpp"

namespace rice {

namespace {

// Regional episode rewards of one joint candidate.
std::vector<double> evaluate(const Engine& engine, const std::vector<PolicySpec>& specs,
                             bool negotiation_on, std::uint64_t seed) {
  std::vector<Policy> policies;
  policies.reserve(specs.size());
  for (const PolicySpec& spec : specs) policies.emplace_back(spec);
  const EpisodeLog log = engine.run_episode(PolicySet(std::move(policies)), seed, negotiation_on);
  return log.region_rewards;
}

double mean_of(const std::vector<double>& values) {
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

void check_fitness(double fitness, int iteration, std::size_t candidate) {
  if (!std::isfinite(fitness)) {
    throw NumericError("train_cem: iteration " + std::to_string(iteration) + ", candidate " +
                       std::to_string(candidate) + " produced non-finite fitness");
  }
}

}  // namespace

PolicySet TrainingResult::policy_set() const {
  std::vector<Policy> out;
  out.reserve(policies.size());
  for (const PolicySpec& spec : policies) out.emplace_back(spec);
  return PolicySet(std::move(out));
}

TrainingResult train_cem(const Engine& engine, const PolicySpec& policy_template,
                         const TrainingConfig& settings, bool negotiation_on,
                         std::uint64_t seed) {
  const std::size_t n = engine.num_regions();
  if (policy_template.kind != PolicyKind::kLinear) {
    throw ValidationError("train_cem: template must be a linear-cem policy");
  }
  policy_template.validate();
  if (policy_template.num_regions != n) {
    throw ValidationError("train_cem: template built for " +
                          std::to_string(policy_template.num_regions) + " regions, engine has " +
                          std::to_string(n));
  }
  if (settings.population < 4) throw ValidationError("train_cem: population must be >= 4");
  if (!(settings.elite_fraction > 0.0 && settings.elite_fraction <= 0.5)) {
    throw ValidationError("train_cem: elite_fraction must be in (0, 0.5]");
  }
  if (settings.iterations < 0) throw ValidationError("train_cem: iterations must be >= 0");

  const std::size_t groups = settings.per_region ? n : 1;
  const std::size_t dim = policy_template.parameters.size();
  const auto population = static_cast<std::size_t>(settings.population);
  const auto elites = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(settings.elite_fraction * settings.population)));

  TrainingResult result;
  result.policies.assign(groups, policy_template);
  {
    const auto rewards = evaluate(engine, result.policies, negotiation_on, seed);
    result.initial_fitness = mean_of(rewards);
    check_fitness(result.initial_fitness, -1, 0);
  }
  result.best_fitness = result.initial_fitness;
  result.episodes = 1;

  // Per-group search distribution.
  std::vector<std::vector<double>> mean(groups, policy_template.parameters);
  std::vector<std::vector<double>> spread(groups, std::vector<double>(dim, settings.initial_std));

  // candidates[k][g] is group g's weight vector in candidate k.
  std::vector<std::vector<PolicySpec>> candidates(population,
                                                  std::vector<PolicySpec>(groups, policy_template));
  std::vector<std::vector<double>> rewards(population);
  std::vector<std::size_t> order(population);

  for (int it = 0; it < settings.iterations; ++it) {
    RngStream rng(StreamKey{seed, static_cast<std::uint64_t>(it), 0, 0, StreamPurpose::kTraining});
    std::normal_distribution<double> normal(0.0, 1.0);
    for (std::size_t k = 0; k < population; ++k) {
      for (std::size_t g = 0; g < groups; ++g) {
        auto& w = candidates[k][g].parameters;
        for (std::size_t d = 0; d < dim; ++d) w[d] = mean[g][d] + spread[g][d] * normal(rng);
      }
    }

    parallel_for(population, settings.threads, [&](std::size_t k) {
      rewards[k] = evaluate(engine, candidates[k], negotiation_on, seed);
    });
    result.episodes += static_cast<std::int64_t>(population);

    std::vector<double> fitness(population);
    for (std::size_t k = 0; k < population; ++k) {
      fitness[k] = mean_of(rewards[k]);
      check_fitness(fitness[k], it, k);
    }

    for (std::size_t g = 0; g < groups; ++g) {
      std::iota(order.begin(), order.end(), 0);
      // Shared mode ranks on the mean reward, per-region mode on the group's own.
      auto score = [&](std::size_t k) { return groups == 1 ? fitness[k] : rewards[k][g]; };
      std::stable_sort(order.begin(), order.end(),
                       [&](std::size_t a, std::size_t b) { return score(a) > score(b); });
      for (std::size_t d = 0; d < dim; ++d) {
        double m = 0.0;
        for (std::size_t e = 0; e < elites; ++e) m += candidates[order[e]][g].parameters[d];
        m /= static_cast<double>(elites);
        double var = 0.0;
        for (std::size_t e = 0; e < elites; ++e) {
          const double diff = candidates[order[e]][g].parameters[d] - m;
          var += diff * diff;
        }
        var /= static_cast<double>(elites);
        mean[g][d] = m;
        spread[g][d] = std::sqrt(var) + settings.min_std;
      }
    }

    const auto best_k = static_cast<std::size_t>(
        std::max_element(fitness.begin(), fitness.end()) - fitness.begin());
    if (fitness[best_k] > result.best_fitness) {
      result.best_fitness = fitness[best_k];
      result.policies = candidates[best_k];
    }
    result.best_history.push_back(result.best_fitness);
  }
  return result;
}

}  // namespace rice
