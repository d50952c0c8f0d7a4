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

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rice/experiments.hpp"
#include "rice/trainer.hpp"

namespace rice {

enum class ReportFormat {
  kDelimited,   // line-keyed CSV
  kStructured,  // JSON
};

ReportFormat report_format_from_string(std::string_view name);

// Lossless serialization: parse_report(serialize_report(r, f), f) == r.
// Throws ValidationError for a result without records.
std::string serialize_report(const ExperimentResult& result, ReportFormat format);
ExperimentResult parse_report(std::string_view text, ReportFormat format);

// Throws IoError naming the path on failure. Nothing is written for an
// empty result.
void write_report(const ExperimentResult& result, ReportFormat format,
                  const std::filesystem::path& path);
ExperimentResult read_report(const std::filesystem::path& path);

// Tables laid out like the published ones, as CSV text.
std::string table1_csv(const ExperimentResult& exp1);  // temperature, collective reward
std::string table2_csv(const Experiment1Summary& summary);  // N rows + totals row
std::string table3_csv(const ExperimentResult& exp1);  // five action means
std::string table4_csv(const std::vector<RegionalAverageRow>& rows);
// One row per Experiment-2 subtest, ready for plotting.
std::string subtest_data_csv(const ExperimentResult& exp2);

// Writes the tables that apply to the result's experiment into `dir` and
// returns the written paths.
std::vector<std::filesystem::path> write_tables(const ExperimentResult& result,
                                                const std::filesystem::path& dir);

inline constexpr std::string_view kPolicySchema = "rice-policy/1";
inline constexpr std::string_view kEpisodeSchema = "rice-episode/1";

// Trained policies plus the inputs that produced them.
struct PolicyRecord {
  std::string config_hash;
  std::string build_id;
  std::uint64_t seed = 0;
  bool negotiation = false;
  TrainingConfig training;
  double initial_fitness = 0.0;
  double best_fitness = 0.0;
  std::vector<PolicySpec> policies;  // one when shared, N when per-region

  PolicySet policy_set() const;

  friend bool operator==(const PolicyRecord&, const PolicyRecord&) = default;
};

std::string serialize_policy_record(const PolicyRecord& record);
PolicyRecord parse_policy_record(std::string_view text);
void write_policy_record(const PolicyRecord& record, const std::filesystem::path& path);
PolicyRecord read_policy_record(const std::filesystem::path& path);

// Full per-step episode log as JSON, tagged with the config hash.
std::string serialize_episode(const EpisodeLog& log, std::string_view config_hash,
                              std::uint64_t seed, bool negotiation);

// Writes `text` to `path`, creating parent directories. Throws IoError.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace rice
