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
#include <span>
#include <vector>

#include "rice/params.hpp"

namespace rice {

// Time-varying economy of one region.
struct RegionState {
  double labor = 0.0;       // millions
  double technology = 0.0;  // total factor productivity
  double capital = 0.0;
  double sigma = 0.0;       // carbon intensity
  double consumption = 0.0;
  double step_utility = 0.0;
  double cumulative_utility = 0.0;

  friend bool operator==(const RegionState&, const RegionState&) = default;
};

// One region's decisions for a step. import_bids[j] and tariffs[j] refer to
// goods coming from region j; the entries for the acting region are zero.
struct ActionVector {
  double savings_rate = 0.0;
  double mitigation_rate = 0.0;
  double export_cap = 0.0;
  std::vector<double> import_bids;
  std::vector<double> tariffs;

  // Clamp fractions to [0, 1], quantities to >= 0 and zero the self entries.
  // Never throws; learned policies routinely emit out-of-range values.
  void sanitize(std::size_t self);

  friend bool operator==(const ActionVector&, const ActionVector&) = default;
};

// Row-major N x N matrices: shipments[i * N + j] is what i ships to j,
// foreign_consumption[j * N + i] is what j consumes of i's goods after
// tariffs.
struct TradeOutcome {
  std::size_t num_regions = 0;
  std::vector<double> shipments;
  std::vector<double> foreign_consumption;

  double shipped(std::size_t from, std::size_t to) const {
    return shipments[from * num_regions + to];
  }
  double received(std::size_t to, std::size_t from) const {
    return foreign_consumption[to * num_regions + from];
  }
  double total_exports(std::size_t from) const;
  std::span<const double> received_row(std::size_t to) const {
    return {foreign_consumption.data() + to * num_regions, num_regions};
  }
};

namespace econ {

// (l/1000) * ((c / (l/1000) + eps)^(1-alpha) - 1) / (1 - alpha)
double step_utility(double labor, double consumption, const GlobalEconParams& params);

// l * ((1 + l_a) / (1 + l))^l_g
double update_labor(double labor, const RegionParams& region);

// step_index is one-based: the first update uses decay exponent zero.
double update_technology(double technology, int step_index, const RegionParams& region,
                         const GlobalEconParams& params);

double update_capital(double capital, double gross_output, double savings_rate,
                      const GlobalEconParams& params);

double production(double technology, double capital, double labor, double gamma);

double damages_factor(double temp_atmosphere, const RegionParams& region);

// (backstop / (1000 theta2)) * sigma * mu^theta2, kept strictly below one.
double abatement_cost(double mitigation_rate, double sigma, const GlobalEconParams& params);

double gross_output(double damages, double abatement_cost, double production);

double domestic_consumption(double gross_output, double savings_rate, double total_exports);

// CES aggregate of domestic and imported goods. received[j] is the flow from
// region j; the entry for `self` is ignored.
double aggregate_consumption(double domestic, std::span<const double> received,
                             std::size_t self, const GlobalEconParams& params);

double update_carbon_intensity(double sigma, const GlobalEconParams& params);

// Proportional rationing of import bids against each exporter's capacity
// min(export_cap, gross_output * (1 - savings_rate)). Tariffed goods vanish.
TradeOutcome clear_trade(std::span<const ActionVector> actions,
                         std::span<const double> gross_outputs);

// Allocation-free variant used by the engine's hot loop; `out` is resized.
void clear_trade(std::span<const ActionVector> actions, std::span<const double> gross_outputs,
                 TradeOutcome& out);

}  // namespace econ

}  // namespace rice
