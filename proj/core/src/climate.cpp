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

#include "rice/climate.hpp"

#include <cmath>

namespace rice::climate {

double emissions(double sigma, double mitigation_rate, double production, double delta_step) {
  return sigma * (1.0 - mitigation_rate) * production * delta_step;
}

double radiative_forcing(double atmospheric_mass, int step_index, const ClimateParams& params) {
  return params.f2x * std::log2(atmospheric_mass / params.m_preindustrial) +
         params.exogenous_forcing(step_index);
}

ClimateState step_climate(const ClimateState& state, double total_emissions, int step_index,
                          const ClimateParams& params) {
  ClimateState next = state;
  const auto& b = params.carbon_transfer;
  for (int row = 0; row < 3; ++row) {
    next.masses[row] = b[row][0] * state.masses[0] + b[row][1] * state.masses[1] +
                       b[row][2] * state.masses[2];
  }
  next.masses[0] += total_emissions;
  next.cumulative_emissions += total_emissions;

  const double forcing = radiative_forcing(next.masses[0], step_index, params);
  const double feedback = params.f2x / params.t2x;
  next.temp_atmosphere =
      state.temp_atmosphere +
      params.heat_c1 * (forcing - feedback * state.temp_atmosphere -
                        params.heat_c3 * (state.temp_atmosphere - state.temp_ocean));
  next.temp_ocean =
      state.temp_ocean + params.heat_c4 * (state.temp_atmosphere - state.temp_ocean);
  return next;
}

ClimateState preindustrial_equilibrium(const ClimateParams& params) {
  const auto& b = params.carbon_transfer;
  const double m0 = params.m_preindustrial;
  // Fix the atmosphere and solve the two ocean balance rows.
  const double a11 = b[1][1] - 1.0, a12 = b[1][2], r1 = -b[1][0] * m0;
  const double a21 = b[2][1], a22 = b[2][2] - 1.0, r2 = -b[2][0] * m0;
  const double det = a11 * a22 - a12 * a21;
  ClimateState eq;
  eq.masses = {m0, (r1 * a22 - a12 * r2) / det, (a11 * r2 - r1 * a21) / det};
  eq.temp_atmosphere = 0.0;
  eq.temp_ocean = 0.0;
  eq.cumulative_emissions = 0.0;
  return eq;
}

}  // namespace rice::climate
