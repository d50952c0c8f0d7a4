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

#include <array>

#include "rice/params.hpp"

namespace rice {

struct ClimateState {
  std::array<double, 3> masses = {851.0, 460.0, 1740.0};  // GtC: atm, upper, lower ocean
  double temp_atmosphere = 0.85;  // degC above preindustrial
  double temp_ocean = 0.0068;
  double cumulative_emissions = 0.0;

  friend bool operator==(const ClimateState&, const ClimateState&) = default;
};

namespace climate {

// sigma * (1 - mu) * production * delta_step, in GtC per step.
double emissions(double sigma, double mitigation_rate, double production, double delta_step);

double radiative_forcing(double atmospheric_mass, int step_index, const ClimateParams& params);

// Advance carbon reservoirs by one step, add this step's emissions to the
// atmosphere, then update both temperature layers with the forcing of the new
// atmospheric mass.
ClimateState step_climate(const ClimateState& state, double total_emissions, int step_index,
                          const ClimateParams& params);

// Preindustrial reservoirs implied by the transfer matrix's stationary
// distribution scaled to m_preindustrial in the atmosphere.
ClimateState preindustrial_equilibrium(const ClimateParams& params);

}  // namespace climate

}  // namespace rice
