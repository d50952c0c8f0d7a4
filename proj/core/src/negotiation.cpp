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

#include "rice/negotiation.hpp"

#include <algorithm>

#include "rice/error.hpp"
#include "rice/policy.hpp"

namespace rice::negotiation {

namespace {

double clamp01(double x) { return x > 0.0 ? (x < 1.0 ? x : 1.0) : 0.0; }

// Random policies mix their own seed into the episode seed.
RngStream stream_for(const StreamKey& step_key, const Policy& policy, std::size_t region,
                     StreamPurpose purpose) {
  StreamKey key = step_key;
  key.seed = hash_combine(step_key.seed, policy.spec().seed);
  key.region = region;
  key.purpose = purpose;
  return RngStream(key);
}

}  // namespace

std::vector<double> compute_floors(std::span<const Proposal> proposals,
                                   std::span<const std::uint8_t> acceptances,
                                   std::size_t num_regions) {
  if (acceptances.size() != proposals.size()) {
    throw ValidationError("compute_floors: one acceptance per proposal required");
  }
  std::vector<double> floors(num_regions, 0.0);
  for (std::size_t k = 0; k < proposals.size(); ++k) {
    if (!acceptances[k]) continue;
    const Proposal& p = proposals[k];
    const auto proposer = static_cast<std::size_t>(p.proposer);
    const auto recipient = static_cast<std::size_t>(p.recipient);
    if (proposer >= num_regions || recipient >= num_regions) {
      throw ValidationError("compute_floors: proposal references an unknown region");
    }
    floors[recipient] = std::max(floors[recipient], clamp01(p.request));
    floors[proposer] = std::max(floors[proposer], clamp01(p.promise));
  }
  return floors;
}

std::vector<Proposal> collect_proposals(const PolicySet& policies,
                                        std::span<const Observation> observations,
                                        const StreamKey& step_key) {
  const std::size_t n = observations.size();
  std::vector<Proposal> proposals(n > 1 ? n * (n - 1) : 0);
  for (std::size_t i = 0; i < n && n > 1; ++i) {
    const Policy& policy = policies.for_region(i);
    RngStream rng = stream_for(step_key, policy, i, StreamPurpose::kProposal);
    std::span<Proposal> slice(proposals.data() + i * (n - 1), n - 1);
    policy.propose(observations[i], rng, slice);
  }
  return proposals;
}

std::vector<std::uint8_t> collect_acceptances(const PolicySet& policies,
                                              std::span<const Observation> observations,
                                              std::span<const Proposal> proposals,
                                              const StreamKey& step_key) {
  const std::size_t n = observations.size();
  std::vector<std::uint8_t> acceptances(proposals.size(), 0);
  for (std::size_t j = 0; j < n && n > 1; ++j) {
    const Policy& policy = policies.for_region(j);
    RngStream rng = stream_for(step_key, policy, j, StreamPurpose::kResponse);
    policy.respond(observations[j], proposals, rng, acceptances);
  }
  return acceptances;
}

NegotiationState negotiate(const PolicySet& policies, std::span<const Observation> observations,
                           const StreamKey& step_key) {
  NegotiationState state;
  state.proposals = collect_proposals(policies, observations, step_key);
  state.acceptances = collect_acceptances(policies, observations, state.proposals, step_key);
  state.floors = compute_floors(state.proposals, state.acceptances, observations.size());
  return state;
}

ActionVector mask_action(ActionVector action, double floor) {
  action.mitigation_rate = std::max(action.mitigation_rate, floor);
  return action;
}

}  // namespace rice::negotiation
