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

#include "rice/timing.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <vector>

#include "rice/error.hpp"
#include "rice/rng.hpp"

namespace rice {

EpisodeTiming time_episodes(std::size_t num_regions, int repeats, std::uint64_t seed) {
  if (repeats < 1) throw ValidationError("time_episodes: repeats must be >= 1");
  const Engine engine(with_regions(default_config(), tiled_default_regions(num_regions)));

  PolicySpec spec = PolicySpec::linear(num_regions);
  RngStream rng(StreamKey{seed, 0, 0, 0, StreamPurpose::kTraining});
  std::normal_distribution<double> noise(0.0, 0.5);
  for (double& w : spec.parameters) w = noise(rng);
  const PolicySet policies{Policy(spec)};

  engine.run_episode(policies, seed, true);  // warm-up
  std::vector<double> ms;
  ms.reserve(static_cast<std::size_t>(repeats));
  for (int r = 0; r < repeats; ++r) {
    const auto start = std::chrono::steady_clock::now();
    const EpisodeLog log = engine.run_episode(policies, seed, true);
    ms.push_back(
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count());
  }
  std::sort(ms.begin(), ms.end());
  return {num_regions, repeats, ms[ms.size() / 2], ms.front(), ms.back()};
}

}  // namespace rice
