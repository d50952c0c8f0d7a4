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
#include "rice/climate.hpp"
#include "rice/config.hpp"

namespace rice {
namespace {

TEST(Emissions, Formula) {
  EXPECT_DOUBLE_EQ(climate::emissions(0.5, 0.2, 3.0, 5.0), 0.5 * 0.8 * 3.0 * 5.0);
  EXPECT_EQ(climate::emissions(0.5, 1.0, 3.0, 5.0), 0.0);
}

TEST(Emissions, DecreaseWithMitigation) {
  double prev = climate::emissions(0.4, 0.0, 2.0, 5.0);
  for (double mu = 0.1; mu <= 1.0; mu += 0.1) {
    const double e = climate::emissions(0.4, mu, 2.0, 5.0);
    EXPECT_LT(e, prev);
    prev = e;
  }
}

TEST(Carbon, TransferColumnsSumToOne) {
  const ClimateParams p;
  for (int col = 0; col < 3; ++col) {
    double sum = 0.0;
    for (int row = 0; row < 3; ++row) sum += p.carbon_transfer[row][col];
    EXPECT_NEAR(sum, 1.0, 1e-15);
  }
}

TEST(Carbon, MassIncreasesByEmissions) {
  const ClimateParams p;
  ClimateState s;
  for (int t = 0; t < 20; ++t) {
    const double before = s.masses[0] + s.masses[1] + s.masses[2];
    const ClimateState next = climate::step_climate(s, 12.5, t, p);
    const double after = next.masses[0] + next.masses[1] + next.masses[2];
    EXPECT_NEAR(after - before, 12.5, 1e-9);
    EXPECT_DOUBLE_EQ(next.cumulative_emissions, s.cumulative_emissions + 12.5);
    s = next;
  }
}

TEST(Climate, EquilibriumIsStationary) {
  ClimateParams p;
  p.f_exo_0 = 0.0;
  p.f_exo_slope = 0.0;
  ClimateState s = climate::preindustrial_equilibrium(p);
  EXPECT_DOUBLE_EQ(s.masses[0], p.m_preindustrial);
  for (int t = 0; t < 50; ++t) {
    const ClimateState next = climate::step_climate(s, 0.0, t, p);
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(next.masses[k], s.masses[k], 1e-9 * s.masses[k]);
    EXPECT_NEAR(next.temp_atmosphere, 0.0, 1e-12);
    EXPECT_NEAR(next.temp_ocean, 0.0, 1e-12);
    s = next;
  }
}

TEST(Climate, ForcingAtDoubling) {
  ClimateParams p;
  p.f_exo_0 = 0.0;
  p.f_exo_slope = 0.0;
  EXPECT_DOUBLE_EQ(climate::radiative_forcing(2.0 * p.m_preindustrial, 0, p), p.f2x);
  EXPECT_DOUBLE_EQ(climate::radiative_forcing(p.m_preindustrial, 0, p), 0.0);
}

TEST(Climate, ExogenousForcingSchedule) {
  const ClimateParams p;
  EXPECT_DOUBLE_EQ(p.exogenous_forcing(0), 0.5);
  EXPECT_DOUBLE_EQ(p.exogenous_forcing(17), 1.0);
}

TEST(Climate, DoubledCarbonApproachesSensitivity) {
  ClimateParams p;
  p.f_exo_0 = 0.0;
  p.f_exo_slope = 0.0;
  ClimateState s = climate::preindustrial_equilibrium(p);
  for (int t = 0; t < 500; ++t) {
    const auto& b = p.carbon_transfer;
    const double carried =
        b[0][0] * s.masses[0] + b[0][1] * s.masses[1] + b[0][2] * s.masses[2];
    // Emit exactly enough to hold the atmosphere at twice preindustrial.
    s = climate::step_climate(s, 2.0 * p.m_preindustrial - carried, t, p);
    EXPECT_NEAR(s.masses[0], 2.0 * p.m_preindustrial, 1e-9);
  }
  EXPECT_NEAR(s.temp_atmosphere, p.t2x, 0.05 * p.t2x);
}

TEST(Climate, WarmsUnderPositiveForcing) {
  const ClimateParams p;
  const ClimateState s;
  const ClimateState next = climate::step_climate(s, 50.0, 0, p);
  EXPECT_GT(next.temp_atmosphere, s.temp_atmosphere);
  EXPECT_GT(next.temp_ocean, s.temp_ocean);
}

}  // namespace
}  // namespace rice
