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
#include <span>
#include <vector>

#include "rice/econ.hpp"
#include "rice/observation.hpp"
#include "rice/rng.hpp"

namespace rice {

class PolicySet;

struct Proposal {
  int proposer = 0;
  int recipient = 0;
  double promise = 0.0;  // mitigation the proposer commits to
  double request = 0.0;  // mitigation demanded of the recipient

  friend bool operator==(const Proposal&, const Proposal&) = default;
};

struct NegotiationState {
  std::vector<Proposal> proposals;
  std::vector<std::uint8_t> acceptances;  // parallel to proposals, 1 = accepted
  std::vector<double> floors;             // minimum mitigation per region

  friend bool operator==(const NegotiationState&, const NegotiationState&) = default;
};

namespace negotiation {

// Position of the (proposer, recipient) proposal in the canonical ordering:
// proposer-major, recipient ascending, self skipped.
constexpr std::size_t proposal_index(std::size_t proposer, std::size_t recipient,
                                     std::size_t num_regions) {
  return proposer * (num_regions - 1) + (recipient < proposer ? recipient : recipient - 1);
}

// An accepted proposal binds the recipient to `request` and the proposer to
// `promise`; each floor is the largest bound on that region, 0 if unbound.
std::vector<double> compute_floors(std::span<const Proposal> proposals,
                                   std::span<const std::uint8_t> acceptances,
                                   std::size_t num_regions);

// One proposal per ordered pair (i, j), i != j, in proposal_index order.
// Each proposer draws from the kProposal stream of (seed, episode, step, i).
std::vector<Proposal> collect_proposals(const PolicySet& policies,
                                        std::span<const Observation> observations,
                                        const StreamKey& step_key);

std::vector<std::uint8_t> collect_acceptances(const PolicySet& policies,
                                              std::span<const Observation> observations,
                                              std::span<const Proposal> proposals,
                                              const StreamKey& step_key);

// Proposal and evaluation stages followed by compute_floors.
NegotiationState negotiate(const PolicySet& policies, std::span<const Observation> observations,
                           const StreamKey& step_key);

ActionVector mask_action(ActionVector action, double floor);

}  // namespace negotiation

}  // namespace rice
