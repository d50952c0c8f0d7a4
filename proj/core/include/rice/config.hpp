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

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rice/climate.hpp"
#include "rice/params.hpp"

namespace rice {

inline constexpr std::string_view kConfigSchema = "rice-config/1";

// Cross-entropy trainer settings.
struct TrainingConfig {
  int iterations = 500;
  int population = 64;
  double elite_fraction = 0.125;
  double initial_std = 0.5;
  double min_std = 0.01;  // noise floor added to the elite spread
  bool per_region = true;  // independent weights per region; false shares one weight set
  int threads = 1;

  friend bool operator==(const TrainingConfig&, const TrainingConfig&) = default;
};

struct SimConfig {
  GlobalEconParams econ;
  ClimateParams climate;
  ClimateState initial_climate;
  std::vector<RegionParams> regions;
  bool negotiation_on = false;
  TrainingConfig training;
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  std::string output_dir = "out";

  std::size_t num_regions() const { return regions.size(); }

  // Throws ValidationError naming the offending field (and region).
  void validate() const;

  friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

// The 27-region calibration table shipped with the library.
std::vector<RegionParams> default_regions();

// Default config over the shipped regions, foreign preferences sized to N.
SimConfig default_config();

// Same globals as `base`, region table replaced; foreign preferences are
// reset to the uniform default for the new N.
SimConfig with_regions(SimConfig base, std::vector<RegionParams> regions);

// First n rows of the default table, or the table tiled (row i takes the
// calibration of row i mod 27) when n > 27.
std::vector<RegionParams> tiled_default_regions(std::size_t n);

// Delimited region table: header
//   region_id,xA_0,xK_0,xL_0,xL_a,xdelta_A,xg_A,xl_g,xsigma_0
// with optional trailing damage_a1,damage_a2,damage_a3 columns. Lines
// starting with '#' are comments.
std::vector<RegionParams> parse_region_table(std::string_view text,
                                             std::string_view source = "<memory>");
std::vector<RegionParams> load_region_config(const std::filesystem::path& path);
std::string format_region_table(const std::vector<RegionParams>& regions);

// Structured config (JSON). Omitted fields keep their defaults; unknown keys
// are rejected. A relative regions_file resolves against `base_dir`.
SimConfig parse_config(std::string_view text, const std::filesystem::path& base_dir = {});
SimConfig load_config(const std::filesystem::path& path);

// Self-contained serialization: the region table is embedded inline, so the
// output parses back to an equal SimConfig without touching the filesystem.
std::string serialize_config(const SimConfig& config);

// 16 hex digits of FNV-1a over serialize_config.
std::string config_hash(const SimConfig& config);

std::string build_id();

}  // namespace rice
