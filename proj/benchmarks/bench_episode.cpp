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

#include <benchmark/benchmark.h>

#include <random>

#include "rice/engine.hpp"
#include "rice/rng.hpp"

namespace {

using namespace rice;

PolicySet random_linear(std::size_t n) {
  PolicySpec spec = PolicySpec::linear(n);
  RngStream rng(StreamKey{1, 0, 0, 0, StreamPurpose::kTraining});
  std::normal_distribution<double> noise(0.0, 0.5);
  for (double& w : spec.parameters) w = noise(rng);
  return PolicySet{Policy(spec)};
}

void BM_Episode(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const bool negotiation = state.range(1) != 0;
  const Engine engine(with_regions(default_config(), tiled_default_regions(n)));
  const PolicySet policies = random_linear(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(engine.run_episode(policies, 1, negotiation));
  }
  state.SetLabel(negotiation ? "nego" : "no-nego");
}

}  // namespace

BENCHMARK(BM_Episode)
    ->ArgsProduct({{27, 200}, {0, 1}})
    ->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
