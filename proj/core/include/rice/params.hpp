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
#include <cstddef>
#include <vector>

namespace rice {

// Economy-wide constants shared by every region. Defaults are calibration
// knobs, not measured values; every field is overridable from the config.
struct GlobalEconParams {
  double alpha = 0.5;         // utility curvature, must differ from 1
  double epsilon = 1e-5;      // utility smoothing, > 0
  double gamma = 0.3;         // capital elasticity of production
  double delta_step = 5.0;    // years per step
  int num_steps = 20;         // steps per episode
  double sub_rate = 0.5;      // CES substitution exponent in (0, 1]
  double dom_pref = 0.5;      // weight on domestic consumption
  std::vector<double> for_pref;  // weight on goods from each region; length N
  double theta2 = 2.6;        // abatement cost exponent
  double backstop_price = 550.0;
  double delta_k = 0.1;       // annual capital depreciation
  double g_sigma = 0.01;      // annual carbon-intensity decline

  // Uniform foreign weights 0.5 / (N - 1); empty for a single region.
  static std::vector<double> uniform_foreign_preferences(std::size_t num_regions,
                                                         double total = 0.5);

  // (1 - delta_k)^delta_step
  double capital_depreciation() const;

  friend bool operator==(const GlobalEconParams&, const GlobalEconParams&) = default;
};

// Static calibration of one region. Column names follow the shipped region
// table (xA_0, xK_0, ...).
struct RegionParams {
  int region_id = 0;
  double a0 = 1.0;       // xA_0, initial technology
  double k0 = 1.0;       // xK_0, initial capital
  double l0 = 1000.0;    // xL_0, initial labor (millions)
  double l_a = 1000.0;   // xL_a, long-term population (millions)
  double delta_a = 0.0;  // xdelta_A, technology growth decay
  double g_a = 0.0;      // xg_A, initial technology growth
  double l_g = 0.0;      // xl_g, labor convergence speed
  double sigma0 = 0.0;   // xsigma_0, initial carbon intensity
  double damage_a1 = 0.0;
  double damage_a2 = 0.00236;
  double damage_a3 = 2.0;

  friend bool operator==(const RegionParams&, const RegionParams&) = default;
};

using Matrix3 = std::array<std::array<double, 3>, 3>;

// Three-reservoir carbon cycle (atmosphere, upper ocean, lower ocean) and a
// two-layer temperature model, one application per step. Defaults are the
// DICE-2016 five-year coefficients.
struct ClimateParams {
  // masses' = carbon_transfer * masses; columns sum to one.
  Matrix3 carbon_transfer = {{
      {0.88, 0.196, 0.0},
      {0.12, 0.797, 0.001465116279069767},
      {0.0, 0.007, 0.998534883720930233},
  }};
  double m_preindustrial = 588.0;  // GtC
  double f2x = 3.6813;             // W/m^2 at CO2 doubling
  double t2x = 3.1;                // equilibrium sensitivity, degC
  // T_at' = T_at + c1 (F - (f2x/t2x) T_at - c3 (T_at - T_lo))
  // T_lo' = T_lo + c4 (T_at - T_lo)
  double heat_c1 = 0.1005;
  double heat_c3 = 0.088;
  double heat_c4 = 0.025;
  double f_exo_0 = 0.5;          // W/m^2 at step 0
  double f_exo_slope = 0.5 / 17.0;  // W/m^2 per step

  double exogenous_forcing(int step_index) const {
    return f_exo_0 + f_exo_slope * static_cast<double>(step_index);
  }

  friend bool operator==(const ClimateParams&, const ClimateParams&) = default;
};

}  // namespace rice
