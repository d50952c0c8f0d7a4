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

#include "rice/error.hpp"
#include "rice/config.hpp"
#include "rice/engine.hpp"
#include "rice/policy.hpp"

namespace rice {
namespace {

Observation sample_observation(std::size_t n = 3, std::size_t region = 1) {
  const Engine engine(with_regions(default_config(), tiled_default_regions(n)));
  return engine.build_observation(engine.reset(1), region);
}

TEST(Policy, KindNamesRoundTrip) {
  for (PolicyKind k : {PolicyKind::kZero, PolicyKind::kFixed, PolicyKind::kRandom,
                       PolicyKind::kLinear}) {
    EXPECT_EQ(policy_kind_from_string(to_string(k)), k);
  }
  EXPECT_THROW(policy_kind_from_string("ppo"), ValidationError);
}

TEST(Policy, LinearWeightCount) {
  const std::size_t d = obs::size(27);
  EXPECT_EQ(linear_weight_count(27), 8 * (d + 1) + 2);
  EXPECT_EQ(PolicySpec::linear(27).parameters.size(), linear_weight_count(27));
}

TEST(Policy, ZeroActsZero) {
  RngStream rng(StreamKey{1});
  const ActionVector a = Policy(PolicySpec::zero()).act(sample_observation(), rng);
  EXPECT_EQ(a.mitigation_rate, 0.0);
  EXPECT_EQ(a.savings_rate, 0.0);
  EXPECT_EQ(a.export_cap, 0.0);
  EXPECT_EQ(a.import_bids, std::vector<double>(3, 0.0));
}

TEST(Policy, FixedScalesTradeByProduction) {
  const Observation o = sample_observation();
  RngStream rng(StreamKey{1});
  const ActionVector a = Policy(PolicySpec::fixed(0.3, 0.25, 0.1, 0.2, 0.05)).act(o, rng);
  const double production = o[obs::kProduction];
  EXPECT_DOUBLE_EQ(a.mitigation_rate, 0.3);
  EXPECT_DOUBLE_EQ(a.savings_rate, 0.25);
  EXPECT_DOUBLE_EQ(a.export_cap, 0.1 * production);
  EXPECT_EQ(a.import_bids[1], 0.0);
  EXPECT_DOUBLE_EQ(a.import_bids[0], 0.2 * production / 2.0);
  EXPECT_DOUBLE_EQ(a.tariffs[2], 0.05);
  EXPECT_EQ(a.tariffs[1], 0.0);
}

TEST(Policy, RandomIsDeterministicPerStream) {
  const Observation o = sample_observation();
  const Policy p(PolicySpec::random(9));
  RngStream a(StreamKey{4, 0, 2, 1}), b(StreamKey{4, 0, 2, 1}), c(StreamKey{4, 0, 3, 1});
  EXPECT_EQ(p.act(o, a), p.act(o, b));
  EXPECT_NE(p.act(o, b), p.act(o, c));
}

TEST(Policy, LinearHeadsAreClamped) {
  PolicySpec spec = PolicySpec::linear(3);
  const std::size_t d = obs::size(3);
  spec.parameters[linear_head::kMitigation * (d + 1) + d] = 5.0;  // bias
  spec.parameters[linear_head::kSavings * (d + 1) + d] = -5.0;
  RngStream rng(StreamKey{1});
  const ActionVector a = Policy(spec).act(sample_observation(), rng);
  EXPECT_EQ(a.mitigation_rate, 1.0);
  EXPECT_EQ(a.savings_rate, 0.0);
}

TEST(Policy, LinearAcceptsOnPositiveScore) {
  const std::size_t n = 3;
  const std::size_t d = obs::size(n);
  PolicySpec spec = PolicySpec::linear(n);
  // Accept iff 0.5 - request > 0.
  spec.parameters[linear_head::kCount * (d + 1) + d] = 0.5;
  spec.parameters[(linear_head::kCount + 1) * (d + 1) + 1] = -1.0;
  const Policy p(spec);
  const Observation o = sample_observation(n, 0);
  std::vector<Proposal> proposals(n * (n - 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      proposals[negotiation::proposal_index(i, j, n)] = {static_cast<int>(i), static_cast<int>(j),
                                                         0.0, i == 1 ? 0.2 : 0.8};
    }
  }
  std::vector<std::uint8_t> acc(proposals.size(), 0);
  RngStream rng(StreamKey{1});
  p.respond(o, proposals, rng, acc);
  EXPECT_EQ(acc[negotiation::proposal_index(1, 0, n)], 1);
  EXPECT_EQ(acc[negotiation::proposal_index(2, 0, n)], 0);
}

TEST(Policy, Quantization) {
  PolicySpec spec = PolicySpec::fixed(0.33, 0.5);
  spec.quantize_levels = 11;
  RngStream rng(StreamKey{1});
  const ActionVector a = Policy(spec).act(sample_observation(), rng);
  EXPECT_DOUBLE_EQ(a.mitigation_rate, 0.3);
  EXPECT_DOUBLE_EQ(a.savings_rate, 0.5);
}

TEST(Policy, SpecValidation) {
  PolicySpec spec = PolicySpec::linear(3);
  spec.parameters.pop_back();
  EXPECT_THROW(spec.validate(), ValidationError);
  PolicySpec fixed = PolicySpec::fixed(0.1, 0.1);
  fixed.parameters.resize(3);
  EXPECT_THROW(fixed.validate(), ValidationError);
}

TEST(PolicySet, SharedOrPerRegion) {
  const PolicySet shared{Policy(PolicySpec::zero())};
  EXPECT_NO_THROW(shared.validate(27));
  std::vector<Policy> two(2, Policy(PolicySpec::zero()));
  const PolicySet per_region{two};
  EXPECT_NO_THROW(per_region.validate(2));
  EXPECT_THROW(per_region.validate(3), ValidationError);
  const PolicySet linear{Policy(PolicySpec::linear(3))};
  EXPECT_THROW(linear.validate(4), ValidationError);
}

TEST(Rng, StreamsAreIndependentAndReproducible) {
  RngStream a(StreamKey{1, 2, 3, 4, StreamPurpose::kAction});
  RngStream b(StreamKey{1, 2, 3, 4, StreamPurpose::kAction});
  RngStream c(StreamKey{1, 2, 3, 4, StreamPurpose::kProposal});
  for (int k = 0; k < 100; ++k) {
    const auto x = a();
    EXPECT_EQ(x, b());
    EXPECT_NE(x, c());
  }
  RngStream u(StreamKey{9});
  for (int k = 0; k < 1000; ++k) {
    const double v = u.uniform();
    EXPECT_GE(v, 0.0);
    EXPECT_LT(v, 1.0);
  }
}

}  // namespace
}  // namespace rice
