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

#include "rice/econ.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

namespace rice {

namespace {

double clamp01(double x) {
  if (!(x > 0.0)) return 0.0;  // also maps NaN to 0
  return x < 1.0 ? x : 1.0;
}

double non_negative(double x) { return x > 0.0 ? x : 0.0; }

}  // namespace

std::vector<double> GlobalEconParams::uniform_foreign_preferences(std::size_t num_regions,
                                                                  double total) {
  if (num_regions < 2) return std::vector<double>(num_regions, 0.0);
  return std::vector<double>(num_regions, total / static_cast<double>(num_regions - 1));
}

double GlobalEconParams::capital_depreciation() const {
  return std::pow(1.0 - delta_k, delta_step);
}

void ActionVector::sanitize(std::size_t self) {
  savings_rate = clamp01(savings_rate);
  mitigation_rate = clamp01(mitigation_rate);
  export_cap = std::isfinite(export_cap) ? non_negative(export_cap) : 0.0;
  for (double& bid : import_bids) bid = std::isfinite(bid) ? non_negative(bid) : 0.0;
  for (double& tariff : tariffs) tariff = clamp01(tariff);
  if (self < import_bids.size()) import_bids[self] = 0.0;
  if (self < tariffs.size()) tariffs[self] = 0.0;
}

double TradeOutcome::total_exports(std::size_t from) const {
  const double* row = shipments.data() + from * num_regions;
  return std::accumulate(row, row + num_regions, 0.0);
}

namespace econ {

double step_utility(double labor, double consumption, const GlobalEconParams& params) {
  const double scaled_labor = labor / 1000.0;
  const double one_minus_alpha = 1.0 - params.alpha;
  const double per_capita = consumption / scaled_labor + params.epsilon;
  return scaled_labor * (std::pow(per_capita, one_minus_alpha) - 1.0) / one_minus_alpha;
}

double update_labor(double labor, const RegionParams& region) {
  return labor * std::pow((1.0 + region.l_a) / (1.0 + labor), region.l_g);
}

double update_technology(double technology, int step_index, const RegionParams& region,
                         const GlobalEconParams& params) {
  const double decay =
      std::exp(-region.delta_a * params.delta_step * static_cast<double>(step_index - 1));
  return (std::exp(0.0033) + region.g_a * decay) * technology;
}

double update_capital(double capital, double gross_output, double savings_rate,
                      const GlobalEconParams& params) {
  return params.capital_depreciation() * capital +
         params.delta_step * (savings_rate * gross_output);
}

double production(double technology, double capital, double labor, double gamma) {
  return technology * std::pow(capital, gamma) * std::pow(labor / 1000.0, 1.0 - gamma);
}

double damages_factor(double temp_atmosphere, const RegionParams& region) {
  return 1.0 / (1.0 + region.damage_a1 * temp_atmosphere +
                region.damage_a2 * std::pow(temp_atmosphere, region.damage_a3));
}

double abatement_cost(double mitigation_rate, double sigma, const GlobalEconParams& params) {
  const double cost = (params.backstop_price / (1000.0 * params.theta2)) * sigma *
                      std::pow(mitigation_rate, params.theta2);
  // Keeps (1 - cost) strictly positive.
  return std::min(cost, std::nextafter(1.0, 0.0));
}

double gross_output(double damages, double abatement_cost, double production) {
  return damages * (1.0 - abatement_cost) * production;
}

double domestic_consumption(double gross_output, double savings_rate, double total_exports) {
  const double investment = savings_rate * gross_output;
  return std::max(0.0, gross_output - investment - total_exports);
}

double aggregate_consumption(double domestic, std::span<const double> received,
                             std::size_t self, const GlobalEconParams& params) {
  const double s = params.sub_rate;
  double total = params.dom_pref * std::pow(domestic, s);
  const std::size_t n = std::min(received.size(), params.for_pref.size());
  for (std::size_t j = 0; j < n; ++j) {
    if (j == self || received[j] <= 0.0) continue;
    total += params.for_pref[j] * std::pow(received[j], s);
  }
  return std::pow(total, 1.0 / s);
}

double update_carbon_intensity(double sigma, const GlobalEconParams& params) {
  return sigma * std::exp(-params.g_sigma * params.delta_step);
}

void clear_trade(std::span<const ActionVector> actions, std::span<const double> gross_outputs,
                 TradeOutcome& out) {
  const std::size_t n = actions.size();
  assert(gross_outputs.size() == n);
  out.num_regions = n;
  out.shipments.assign(n * n, 0.0);
  out.foreign_consumption.assign(n * n, 0.0);

  for (std::size_t exporter = 0; exporter < n; ++exporter) {
    const ActionVector& ex = actions[exporter];
    const double surplus = std::max(0.0, gross_outputs[exporter] * (1.0 - ex.savings_rate));
    const double capacity = std::min(ex.export_cap, surplus);

    double demand = 0.0;
    for (std::size_t importer = 0; importer < n; ++importer) {
      if (importer == exporter) continue;
      const auto& bids = actions[importer].import_bids;
      if (exporter < bids.size()) demand += bids[exporter];
    }
    if (demand <= 0.0 || capacity <= 0.0) continue;

    const double scale = demand > capacity ? capacity / demand : 1.0;
    for (std::size_t importer = 0; importer < n; ++importer) {
      if (importer == exporter) continue;
      const ActionVector& im = actions[importer];
      if (exporter >= im.import_bids.size()) continue;
      const double shipped = im.import_bids[exporter] * scale;
      if (shipped <= 0.0) continue;
      const double tariff = exporter < im.tariffs.size() ? im.tariffs[exporter] : 0.0;
      out.shipments[exporter * n + importer] = shipped;
      out.foreign_consumption[importer * n + exporter] = shipped * (1.0 - tariff);
    }
  }
}

TradeOutcome clear_trade(std::span<const ActionVector> actions,
                         std::span<const double> gross_outputs) {
  TradeOutcome out;
  clear_trade(actions, gross_outputs, out);
  return out;
}

}  // namespace econ

}  // namespace rice
