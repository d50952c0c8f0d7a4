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

#include <cstddef>
#include <cstdint>

#include "rice/engine.hpp"

namespace rice {

struct EpisodeTiming {
  std::size_t num_regions = 0;
  int repeats = 0;
  double median_ms = 0.0;
  double min_ms = 0.0;
  double max_ms = 0.0;
};

// Wall time of full single-threaded episodes of a linear policy with seeded
// random weights and negotiation on, the most expensive configuration.
EpisodeTiming time_episodes(std::size_t num_regions, int repeats, std::uint64_t seed = 1);

}  // namespace rice
