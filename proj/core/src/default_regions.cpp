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

#include <array>

#include "rice/config.hpp"

namespace rice {

namespace {

struct Row {
  int id;
  double a0, k0, l0, l_a, delta_a, g_a, l_g, sigma0;
};

// Columns: region_id, xA_0, xK_0, xL_0, xL_a, xdelta_A, xg_A, xl_g, xsigma_0.
constexpr std::array<Row, 27> kRows = {{
    {0, 1.872, 0.239, 476.878, 669.594, 0.139, 0.122, 0.034, 0.456},
    {1, 8.405, 3.304, 68.395, 93.497, 0.188, 0.103, 0.058, 0.529},
    {2, 3.558, 0.109, 64.122, 135.074, 0.161, 0.127, 0.026, 0.816},
    {3, 1.927, 1.424, 284.699, 465.308, 0.244, 0.134, 0.024, 1.221},
    {4, 8.111, 0.268, 28.141, 23.574, 0.163, 0.106, -0.057, 0.290},
    {5, 4.217, 3.184, 548.754, 560.054, 0.170, 0.095, 0.080, 0.302},
    {6, 2.491, 0.044, 46.489, 59.988, 0.058, 0.049, 0.037, 0.420},
    {7, 2.525, 1.080, 69.194, 100.016, 0.346, 0.079, 0.029, 1.010},
    {8, 2.460, 0.184, 513.737, 1867.771, 1.839, 0.462, 0.017, 0.310},
    {9, 12.158, 2.642, 38.101, 56.990, 0.131, 0.063, 0.020, 0.350},
    {10, 0.993, 0.160, 522.482, 1830.325, 0.086, 0.065, 0.019, 0.235},
    {11, 5.000, 2.289, 165.293, 230.191, 0.183, 0.071, 0.027, 0.419},
    {12, 29.854, 2.020, 165.751, 216.927, 0.088, 0.075, -0.002, 0.254},
    {13, 23.315, 3.039, 109.395, 143.172, 0.088, 0.075, -0.002, 0.254},
    {14, 29.854, 0.687, 56.355, 73.755, 0.088, 0.075, -0.002, 0.254},
    {15, 10.922, 0.606, 705.465, 532.497, 0.096, 0.168, -0.016, 0.781},
    {16, 9.634, 0.608, 465.607, 351.448, 0.096, 0.168, -0.016, 0.781},
    {17, 8.621, 0.453, 239.858, 181.049, 0.096, 0.168, -0.016, 0.781},
    {18, 3.190, 0.129, 690.002, 723.513, 0.054, 0.068, -0.013, 0.949},
    {19, 2.034, 0.381, 455.401, 477.518, 0.054, 0.068, -0.013, 0.949},
    {20, 13.220, 16.295, 502.410, 445.861, 0.252, 0.074, -0.033, 0.170},
    {21, 3.190, 0.044, 234.601, 245.994, 0.054, 0.068, -0.013, 0.949},
    {22, 6.387, 1.094, 317.880, 287.533, 0.194, 0.237, -0.053, 0.840},
    {23, 2.481, 0.090, 94.484, 102.997, 0.203, 0.201, 0.037, 1.665},
    {24, 10.853, 17.554, 222.891, 168.351, 0.005, -0.000, -0.012, 0.285},
    {25, 4.135, 1.002, 103.294, 87.418, 0.158, 0.123, -0.063, 0.601},
    {26, 2.716, 1.034, 573.818, 681.210, 0.097, 0.101, 0.043, 0.638},
}};

}  // namespace

std::vector<RegionParams> default_regions() {
  std::vector<RegionParams> regions;
  regions.reserve(kRows.size());
  for (const Row& row : kRows) {
    RegionParams p;
    p.region_id = row.id;
    p.a0 = row.a0;
    p.k0 = row.k0;
    p.l0 = row.l0;
    p.l_a = row.l_a;
    p.delta_a = row.delta_a;
    p.g_a = row.g_a;
    p.l_g = row.l_g;
    p.sigma0 = row.sigma0;
    regions.push_back(p);
  }
  return regions;
}

}  // namespace rice
