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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <string>

#include "rice/error.hpp"
#include "rice/experiments.hpp"

namespace rice {

namespace {

bool on_grid(double delta) {
  return std::any_of(kLtcSteps.begin(), kLtcSteps.end(),
                     [&](double step) { return std::abs(step - delta) < 1e-12; });
}

std::string signed_percent(double fraction) {
  const long pct = std::lround(fraction * 100.0);
  return (pct > 0 ? "+" : "") + std::to_string(pct) + "%";
}

}  // namespace

Stat aggregate_stats(std::span<const double> samples) {
  if (samples.empty()) throw ValidationError("aggregate_stats: no samples");
  const double n = static_cast<double>(samples.size());
  const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
  double var = 0.0;
  for (double x : samples) var += (x - mean) * (x - mean);
  return {mean, std::sqrt(var / n)};
}

std::vector<int> rank_regions(std::span<const double> utilities) {
  std::vector<std::size_t> order(utilities.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return utilities[a] > utilities[b];
  });
  std::vector<int> ranks(utilities.size());
  for (std::size_t r = 0; r < order.size(); ++r) ranks[order[r]] = static_cast<int>(r);
  return ranks;
}

std::optional<double> gain_ratio(double u_nego, double u_no_nego) {
  if (u_no_nego == 0.0) return std::nullopt;
  return u_nego / u_no_nego;
}

double spearman_correlation(std::span<const int> ranks_a, std::span<const int> ranks_b) {
  if (ranks_a.size() != ranks_b.size()) {
    throw ValidationError("spearman_correlation: rank vectors differ in length");
  }
  const std::size_t n = ranks_a.size();
  if (n < 2) return 1.0;
  double d2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = static_cast<double>(ranks_a[i] - ranks_b[i]);
    d2 += d * d;
  }
  const double nn = static_cast<double>(n);
  return 1.0 - 6.0 * d2 / (nn * (nn * nn - 1.0));
}

std::string LTC::label() const {
  return "la" + signed_percent(labor_delta) + "_ga" + signed_percent(tech_delta);
}

std::vector<LTC> ltc_grid() {
  std::vector<LTC> grid;
  for (double labor : kLtcSteps) {
    for (double tech : kLtcSteps) grid.push_back({labor, tech});
  }
  return grid;
}

RegionParams apply_ltc(RegionParams params, const LTC& ltc) {
  if (!on_grid(ltc.labor_delta) || !on_grid(ltc.tech_delta)) {
    throw ValidationError("apply_ltc: deltas must be one of -10%, 0%, +10%");
  }
  params.l_a *= 1.0 + ltc.labor_delta;
  params.g_a *= 1.0 + ltc.tech_delta;
  return params;
}

std::string format_gain(double gain) {
  // The nudge keeps exact quotients such as 0.86 from truncating to 0.85.
  const double hundredths = std::trunc(gain * 100.0 + (gain < 0.0 ? -1e-9 : 1e-9));
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", hundredths / 100.0);
  return buf;
}

std::string format_percent(std::optional<double> fraction) {
  if (!fraction) return "undefined";
  return signed_percent(*fraction);
}

}  // namespace rice
