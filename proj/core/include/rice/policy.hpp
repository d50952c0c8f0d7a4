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
#include <string>
#include <string_view>
#include <vector>

#include "rice/econ.hpp"
#include "rice/negotiation.hpp"
#include "rice/observation.hpp"
#include "rice/rng.hpp"

namespace rice {

enum class PolicyKind { kZero, kFixed, kRandom, kLinear };

std::string_view to_string(PolicyKind kind);
PolicyKind policy_kind_from_string(std::string_view name);

// Parameter layout of a fixed policy.
namespace fixed_param {
inline constexpr std::size_t kMitigation = 0;
inline constexpr std::size_t kSavings = 1;
inline constexpr std::size_t kExportFraction = 2;
inline constexpr std::size_t kImportFraction = 3;
inline constexpr std::size_t kTariff = 4;
inline constexpr std::size_t kPromise = 5;
inline constexpr std::size_t kRequest = 6;
inline constexpr std::size_t kAccept = 7;  // >= 0.5 accepts every proposal
inline constexpr std::size_t kCount = 8;
}  // namespace fixed_param

// A linear policy has one row of obs_dim + 1 weights (trailing bias) per
// output head, followed by the acceptance row: obs_dim + 1 weights plus one
// weight each on the incoming promise and request. Heads are clamped to
// [0, 1]; a proposal is accepted when the acceptance score is positive.
namespace linear_head {
inline constexpr std::size_t kMitigation = 0;
inline constexpr std::size_t kSavings = 1;
inline constexpr std::size_t kExportFraction = 2;
inline constexpr std::size_t kImportFraction = 3;
inline constexpr std::size_t kTariff = 4;
inline constexpr std::size_t kPromise = 5;
inline constexpr std::size_t kRequest = 6;
inline constexpr std::size_t kCount = 7;
}  // namespace linear_head

std::size_t linear_weight_count(std::size_t num_regions);

struct PolicySpec {
  PolicyKind kind = PolicyKind::kZero;
  std::vector<double> parameters;  // fixed: fixed_param layout; linear: weights
  std::uint64_t seed = 0;          // random only
  std::size_t num_regions = 0;     // linear only; fixes the observation size
  int quantize_levels = 0;         // 0 keeps fractions continuous

  static PolicySpec zero();
  static PolicySpec fixed(double mitigation, double savings, double export_fraction = 0.0,
                          double import_fraction = 0.0, double tariff = 0.0,
                          double promise = 0.0, double request = 0.0, bool accept = false);
  static PolicySpec random(std::uint64_t seed);
  // All-zero weights: behaves like the zero policy and rejects everything.
  static PolicySpec linear(std::size_t num_regions);

  // Throws ValidationError when the parameters do not fit the kind.
  void validate() const;

  friend bool operator==(const PolicySpec&, const PolicySpec&) = default;
};

// Immutable decision-maker built from a validated spec. Fractions produced by
// heads are turned into quantities with the observed production: the export
// cap is export_fraction * production and each import bid is
// import_fraction * production / (N - 1).
class Policy {
 public:
  explicit Policy(PolicySpec spec);

  const PolicySpec& spec() const { return spec_; }

  // `out` keeps its buffers across calls.
  void act(const Observation& obs, RngStream& rng, ActionVector& out) const;
  ActionVector act(const Observation& obs, RngStream& rng) const;

  // Fills the N - 1 proposals from obs.region, recipients ascending.
  void propose(const Observation& obs, RngStream& rng, std::span<Proposal> out) const;

  // Decides every proposal addressed to obs.region; `acceptances` is indexed
  // like `proposals` (negotiation::proposal_index).
  void respond(const Observation& obs, std::span<const Proposal> proposals, RngStream& rng,
               std::span<std::uint8_t> acceptances) const;

 private:
  double head(std::size_t index, const Observation& obs) const;
  double quantize(double fraction) const;

  PolicySpec spec_;
  std::size_t obs_dim_ = 0;
};

// One policy shared by every region, or one per region.
class PolicySet {
 public:
  PolicySet() = default;
  explicit PolicySet(Policy shared) { policies_.push_back(std::move(shared)); }
  explicit PolicySet(std::vector<Policy> per_region) : policies_(std::move(per_region)) {}

  const Policy& for_region(std::size_t region) const {
    return policies_.size() == 1 ? policies_.front() : policies_.at(region);
  }
  std::size_t size() const { return policies_.size(); }
  bool shared() const { return policies_.size() == 1; }

  // Throws ValidationError unless shared or exactly one policy per region.
  void validate(std::size_t num_regions) const;

 private:
  std::vector<Policy> policies_;
};

}  // namespace rice
