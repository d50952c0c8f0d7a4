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
#include <vector>

namespace rice {

// Flat observation seen by one region. Layout (index: meaning):
//
//    0  step_fraction        t / T
//    1  temp_atmosphere      degC above preindustrial
//    2  carbon_mass_atm      atmospheric carbon, 1000 GtC
//    3  labor                billions (millions / 1000)
//    4  technology
//    5  capital
//    6  sigma                carbon intensity
//    7  production           A K^gamma (L/1000)^(1-gamma) at the current state
//    8  floor                negotiated minimum mitigation, 0 without negotiation
//    9  mean_mitigation      previous-step global means of the five action
//   10  mean_savings         fields, 0 at step 0
//   11  mean_export_cap
//   12  mean_imports
//   13  mean_tariffs
//   14.. one-hot region id   length N
//
// The layout is versioned with the policy record schema; any change bumps it.
namespace obs {
inline constexpr std::size_t kStepFraction = 0;
inline constexpr std::size_t kTempAtmosphere = 1;
inline constexpr std::size_t kCarbonMassAtm = 2;
inline constexpr std::size_t kLabor = 3;
inline constexpr std::size_t kTechnology = 4;
inline constexpr std::size_t kCapital = 5;
inline constexpr std::size_t kSigma = 6;
inline constexpr std::size_t kProduction = 7;
inline constexpr std::size_t kFloor = 8;
inline constexpr std::size_t kMeanMitigation = 9;
inline constexpr std::size_t kMeanSavings = 10;
inline constexpr std::size_t kMeanExportCap = 11;
inline constexpr std::size_t kMeanImports = 12;
inline constexpr std::size_t kMeanTariffs = 13;
inline constexpr std::size_t kRegionOneHot = 14;
inline constexpr std::size_t kSharedFeatures = 14;

constexpr std::size_t size(std::size_t num_regions) { return kSharedFeatures + num_regions; }
}  // namespace obs

struct Observation {
  std::size_t region = 0;
  std::size_t num_regions = 0;
  std::vector<double> features;

  double operator[](std::size_t i) const { return features[i]; }

  // Throws ValidationError when the layout does not match num_regions, the
  // region is out of range, or a feature is non-finite.
  void validate() const;

  friend bool operator==(const Observation&, const Observation&) = default;
};

}  // namespace rice
