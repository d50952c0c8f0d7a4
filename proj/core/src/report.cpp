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

#include "rice/report.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rice/error.hpp"

namespace rice {

using nlohmann::json;

namespace {

std::string num(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

std::string fixed(double v, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
  return buf;
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

// --- structured ---------------------------------------------------------

json stat_json(const Stat& s) { return json::array({s.mean, s.std}); }
Stat stat_from(const json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

json stats_json(const std::vector<Stat>& v) {
  json out = json::array();
  for (const Stat& s : v) out.push_back(stat_json(s));
  return out;
}

std::vector<Stat> stats_from(const json& j) {
  std::vector<Stat> out;
  for (const json& s : j) out.push_back(stat_from(s));
  return out;
}

json training_json(const TrainingConfig& t) {
  return {{"iterations", t.iterations},   {"population", t.population},
          {"elite_fraction", t.elite_fraction}, {"initial_std", t.initial_std},
          {"min_std", t.min_std},         {"per_region", t.per_region},
          {"threads", t.threads}};
}

TrainingConfig training_from(const json& j) {
  TrainingConfig t;
  t.iterations = j.at("iterations").get<int>();
  t.population = j.at("population").get<int>();
  t.elite_fraction = j.at("elite_fraction").get<double>();
  t.initial_std = j.at("initial_std").get<double>();
  t.min_std = j.at("min_std").get<double>();
  t.per_region = j.at("per_region").get<bool>();
  t.threads = j.at("threads").get<int>();
  return t;
}

json record_json(const SubtestRecord& r) {
  return {{"test", r.test},
          {"target", r.target},
          {"negotiation", r.negotiation},
          {"ltc", {r.ltc.labor_delta, r.ltc.tech_delta}},
          {"config_hash", r.config_hash},
          {"seeds", r.seeds},
          {"temperature_increase", stat_json(r.temperature_increase)},
          {"collective_reward", stat_json(r.collective_reward)},
          {"region_reward", stats_json(r.region_reward)},
          {"region_rank", stats_json(r.region_rank)},
          {"actions",
           {{"mitigation_rate", stat_json(r.mitigation)},
            {"saving_rate", stat_json(r.savings)},
            {"max_export", stat_json(r.export_cap)},
            {"mean_imports", stat_json(r.imports)},
            {"mean_tariffs", stat_json(r.tariffs)}}},
          {"seed_temperature_increase", r.seed_temperature_increase},
          {"seed_collective_reward", r.seed_collective_reward},
          {"seed_region_reward", r.seed_region_reward},
          {"episodes", r.episodes},
          {"wall_seconds", r.wall_seconds}};
}

SubtestRecord record_from(const json& j) {
  SubtestRecord r;
  r.test = j.at("test").get<std::string>();
  r.target = j.at("target").get<std::string>();
  r.negotiation = j.at("negotiation").get<bool>();
  r.ltc = {j.at("ltc").at(0).get<double>(), j.at("ltc").at(1).get<double>()};
  r.config_hash = j.at("config_hash").get<std::string>();
  r.seeds = j.at("seeds").get<std::vector<std::uint64_t>>();
  r.temperature_increase = stat_from(j.at("temperature_increase"));
  r.collective_reward = stat_from(j.at("collective_reward"));
  r.region_reward = stats_from(j.at("region_reward"));
  r.region_rank = stats_from(j.at("region_rank"));
  const json& a = j.at("actions");
  r.mitigation = stat_from(a.at("mitigation_rate"));
  r.savings = stat_from(a.at("saving_rate"));
  r.export_cap = stat_from(a.at("max_export"));
  r.imports = stat_from(a.at("mean_imports"));
  r.tariffs = stat_from(a.at("mean_tariffs"));
  r.seed_temperature_increase = j.at("seed_temperature_increase").get<std::vector<double>>();
  r.seed_collective_reward = j.at("seed_collective_reward").get<std::vector<double>>();
  r.seed_region_reward =
      j.at("seed_region_reward").get<std::vector<std::vector<double>>>();
  r.episodes = j.at("episodes").get<std::int64_t>();
  r.wall_seconds = j.at("wall_seconds").get<double>();
  return r;
}

std::string to_structured(const ExperimentResult& result) {
  json root;
  root["schema"] = std::string(kResultSchema);
  root["experiment"] = result.experiment;
  root["config_hash"] = result.config_hash;
  root["build_id"] = result.build_id;
  root["training"] = training_json(result.training);
  root["region_ids"] = result.region_ids;
  json records = json::array();
  for (const SubtestRecord& r : result.records) records.push_back(record_json(r));
  root["records"] = std::move(records);
  return root.dump(2) + "\n";
}

ExperimentResult from_structured(std::string_view text) {
  try {
    const json root = json::parse(text);
    require(root.at("schema") == std::string(kResultSchema),
            "result: unsupported schema " + root.at("schema").dump());
    ExperimentResult result;
    result.experiment = root.at("experiment").get<std::string>();
    result.config_hash = root.at("config_hash").get<std::string>();
    result.build_id = root.at("build_id").get<std::string>();
    result.training = training_from(root.at("training"));
    result.region_ids = root.at("region_ids").get<std::vector<int>>();
    for (const json& r : root.at("records")) result.records.push_back(record_from(r));
    return result;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("result: ") + e.what());
  }
}

// --- delimited ----------------------------------------------------------
//
// One keyed line per field. A `record` line opens a subtest; the lines that
// follow up to the next `record` belong to it.

template <typename T>
void join(std::ostringstream& out, const std::vector<T>& values) {
  for (const T& v : values) {
    if constexpr (std::is_floating_point_v<T>) {
      out << ',' << num(v);
    } else {
      out << ',' << v;
    }
  }
}

void stat_line(std::ostringstream& out, const char* key, const Stat& s) {
  out << "stat," << key << ',' << num(s.mean) << ',' << num(s.std) << '\n';
}

void stats_line(std::ostringstream& out, const char* key, const std::vector<Stat>& stats) {
  out << key;
  for (const Stat& s : stats) out << ',' << num(s.mean) << ',' << num(s.std);
  out << '\n';
}

std::string to_delimited(const ExperimentResult& result) {
  std::ostringstream out;
  out << "schema," << kResultSchema << '\n';
  out << "experiment," << result.experiment << '\n';
  out << "config_hash," << result.config_hash << '\n';
  out << "build_id," << result.build_id << '\n';
  const auto& t = result.training;
  out << "training," << t.iterations << ',' << t.population << ',' << num(t.elite_fraction)
      << ',' << num(t.initial_std) << ',' << num(t.min_std) << ',' << (t.per_region ? 1 : 0)
      << ',' << t.threads << '\n';
  out << "region_ids";
  join(out, result.region_ids);
  out << '\n';
  for (const SubtestRecord& r : result.records) {
    out << "record," << r.test << ',' << r.target << ',' << (r.negotiation ? 1 : 0) << ','
        << num(r.ltc.labor_delta) << ',' << num(r.ltc.tech_delta) << ',' << r.config_hash
        << ',' << r.episodes << ',' << num(r.wall_seconds) << '\n';
    out << "seeds";
    join(out, r.seeds);
    out << '\n';
    stat_line(out, "temperature_increase", r.temperature_increase);
    stat_line(out, "collective_reward", r.collective_reward);
    stat_line(out, "mitigation_rate", r.mitigation);
    stat_line(out, "saving_rate", r.savings);
    stat_line(out, "max_export", r.export_cap);
    stat_line(out, "mean_imports", r.imports);
    stat_line(out, "mean_tariffs", r.tariffs);
    stats_line(out, "region_reward", r.region_reward);
    stats_line(out, "region_rank", r.region_rank);
    out << "seed_temperature_increase";
    join(out, r.seed_temperature_increase);
    out << "\nseed_collective_reward";
    join(out, r.seed_collective_reward);
    out << '\n';
    for (const auto& rewards : r.seed_region_reward) {
      out << "seed_region_reward";
      join(out, rewards);
      out << '\n';
    }
  }
  return out.str();
}

std::vector<std::string> split(std::string_view line) {
  std::vector<std::string> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(',', start);
    cells.emplace_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cells;
}

template <typename T>
T parse_cell(const std::string& cell, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
  require(ec == std::errc() && ptr == cell.data() + cell.size() && !cell.empty(),
          "result line " + std::to_string(line_no) + ": bad number '" + cell + "'");
  return value;
}

template <typename T>
std::vector<T> parse_tail(const std::vector<std::string>& cells, std::size_t from,
                          std::size_t line_no) {
  std::vector<T> out;
  for (std::size_t i = from; i < cells.size(); ++i) out.push_back(parse_cell<T>(cells[i], line_no));
  return out;
}

std::vector<Stat> parse_stats(const std::vector<std::string>& cells, std::size_t line_no) {
  const auto values = parse_tail<double>(cells, 1, line_no);
  require(values.size() % 2 == 0, "result line " + std::to_string(line_no) + ": odd stat list");
  std::vector<Stat> out;
  for (std::size_t i = 0; i < values.size(); i += 2) out.push_back({values[i], values[i + 1]});
  return out;
}

ExperimentResult from_delimited(std::string_view text) {
  ExperimentResult result;
  SubtestRecord* current = nullptr;
  std::size_t line_no = 0;
  std::size_t start = 0;
  bool schema_seen = false;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (line.empty()) continue;
    const auto cells = split(line);
    const std::string& key = cells[0];
    const std::string at = "result line " + std::to_string(line_no);
    auto need = [&](std::size_t count) {
      require(cells.size() == count, at + ": expected " + std::to_string(count) + " cells");
    };

    if (key == "schema") {
      need(2);
      require(cells[1] == kResultSchema, at + ": unsupported schema " + cells[1]);
      schema_seen = true;
    } else if (key == "experiment") {
      need(2);
      result.experiment = cells[1];
    } else if (key == "config_hash") {
      need(2);
      result.config_hash = cells[1];
    } else if (key == "build_id") {
      need(2);
      result.build_id = cells[1];
    } else if (key == "training") {
      need(8);
      auto& t = result.training;
      t.iterations = parse_cell<int>(cells[1], line_no);
      t.population = parse_cell<int>(cells[2], line_no);
      t.elite_fraction = parse_cell<double>(cells[3], line_no);
      t.initial_std = parse_cell<double>(cells[4], line_no);
      t.min_std = parse_cell<double>(cells[5], line_no);
      t.per_region = parse_cell<int>(cells[6], line_no) != 0;
      t.threads = parse_cell<int>(cells[7], line_no);
    } else if (key == "region_ids") {
      result.region_ids = parse_tail<int>(cells, 1, line_no);
    } else if (key == "record") {
      need(9);
      SubtestRecord& r = result.records.emplace_back();
      r.test = cells[1];
      r.target = cells[2];
      r.negotiation = parse_cell<int>(cells[3], line_no) != 0;
      r.ltc = {parse_cell<double>(cells[4], line_no), parse_cell<double>(cells[5], line_no)};
      r.config_hash = cells[6];
      r.episodes = parse_cell<std::int64_t>(cells[7], line_no);
      r.wall_seconds = parse_cell<double>(cells[8], line_no);
      current = &r;
    } else {
      require(current != nullptr, at + ": '" + key + "' outside a record");
      SubtestRecord& r = *current;
      if (key == "seeds") {
        r.seeds = parse_tail<std::uint64_t>(cells, 1, line_no);
      } else if (key == "stat") {
        need(4);
        const Stat s{parse_cell<double>(cells[2], line_no), parse_cell<double>(cells[3], line_no)};
        const std::string& name = cells[1];
        if (name == "temperature_increase") r.temperature_increase = s;
        else if (name == "collective_reward") r.collective_reward = s;
        else if (name == "mitigation_rate") r.mitigation = s;
        else if (name == "saving_rate") r.savings = s;
        else if (name == "max_export") r.export_cap = s;
        else if (name == "mean_imports") r.imports = s;
        else if (name == "mean_tariffs") r.tariffs = s;
        else throw ValidationError(at + ": unknown stat '" + name + "'");
      } else if (key == "region_reward") {
        r.region_reward = parse_stats(cells, line_no);
      } else if (key == "region_rank") {
        r.region_rank = parse_stats(cells, line_no);
      } else if (key == "seed_temperature_increase") {
        r.seed_temperature_increase = parse_tail<double>(cells, 1, line_no);
      } else if (key == "seed_collective_reward") {
        r.seed_collective_reward = parse_tail<double>(cells, 1, line_no);
      } else if (key == "seed_region_reward") {
        r.seed_region_reward.push_back(parse_tail<double>(cells, 1, line_no));
      } else {
        throw ValidationError(at + ": unknown key '" + key + "'");
      }
    }
  }
  require(schema_seen, "result: missing schema line");
  return result;
}

json region_record_json(const RegionStepRecord& r) {
  return {{"utility", r.utility},
          {"labor", r.labor},
          {"technology", r.technology},
          {"capital", r.capital},
          {"sigma", r.sigma},
          {"production", r.production},
          {"gross_output", r.gross_output},
          {"domestic_consumption", r.domestic_consumption},
          {"consumption", r.consumption},
          {"exports", r.exports},
          {"emissions", r.emissions},
          {"mitigation_rate", r.mitigation},
          {"saving_rate", r.savings},
          {"max_export", r.export_cap},
          {"mean_imports", r.mean_imports},
          {"mean_tariffs", r.mean_tariffs},
          {"floor", r.floor}};
}

std::string read_text(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
    if (ec) throw IoError("cannot create directory '" + path.parent_path().string() + "'");
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << text;
  out.flush();
  if (!out) throw IoError("write to '" + path.string() + "' failed");
}

std::string stat_cells(const Stat& s) { return num(s.mean) + "," + num(s.std); }

}  // namespace

ReportFormat report_format_from_string(std::string_view name) {
  if (name == "csv" || name == "delimited" || name == "delimited-text") {
    return ReportFormat::kDelimited;
  }
  if (name == "json" || name == "structured" || name == "structured-record") {
    return ReportFormat::kStructured;
  }
  throw ValidationError("unknown report format '" + std::string(name) + "'");
}

std::string serialize_report(const ExperimentResult& result, ReportFormat format) {
  require(!result.records.empty(), "refusing to serialize an empty result");
  return format == ReportFormat::kStructured ? to_structured(result) : to_delimited(result);
}

ExperimentResult parse_report(std::string_view text, ReportFormat format) {
  return format == ReportFormat::kStructured ? from_structured(text) : from_delimited(text);
}

void write_report(const ExperimentResult& result, ReportFormat format,
                  const std::filesystem::path& path) {
  write_text(path, serialize_report(result, format));
}

ExperimentResult read_report(const std::filesystem::path& path) {
  const std::string text = read_text(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool structured = first != std::string::npos && text[first] == '{';
  return parse_report(text, structured ? ReportFormat::kStructured : ReportFormat::kDelimited);
}

std::string table1_csv(const ExperimentResult& exp1) {
  std::ostringstream out;
  out << "test,global_temperature_increase_mean,global_temperature_increase_std,"
         "collective_episode_reward_mean,collective_episode_reward_std\n";
  for (const char* test : {"test-1-no-nego", "test-1-nego"}) {
    const SubtestRecord& r = exp1.find(test);
    out << test << ',' << stat_cells(r.temperature_increase) << ','
        << stat_cells(r.collective_reward) << '\n';
  }
  return out.str();
}

std::string table2_csv(const Experiment1Summary& summary) {
  std::ostringstream out;
  out << "region_id,u_i_no_nego,rank_no_nego,u_i_nego,rank_nego,gain,rank_delta\n";
  for (const RegionComparison& r : summary.regions) {
    out << r.region_id << ',' << fixed(r.u_no_nego, 3) << ',' << r.rank_no_nego << ','
        << fixed(r.u_nego, 3) << ',' << r.rank_nego << ','
        << (r.gain ? format_gain(*r.gain) : std::string("undefined")) << ',' << r.rank_delta
        << '\n';
  }
  out << "u," << fixed(summary.total_no_nego, 3) << ",," << fixed(summary.total_nego, 3)
      << ",,,\n";
  return out.str();
}

std::string table3_csv(const ExperimentResult& exp1) {
  const SubtestRecord& off = exp1.find("test-1-no-nego");
  const SubtestRecord& on = exp1.find("test-1-nego");
  std::ostringstream out;
  out << "action,no_nego_mean,no_nego_std,nego_mean,nego_std\n";
  out << "mitigation rate," << stat_cells(off.mitigation) << ',' << stat_cells(on.mitigation)
      << '\n';
  out << "saving rate," << stat_cells(off.savings) << ',' << stat_cells(on.savings) << '\n';
  out << "max export," << stat_cells(off.export_cap) << ',' << stat_cells(on.export_cap)
      << '\n';
  out << "mean imports," << stat_cells(off.imports) << ',' << stat_cells(on.imports) << '\n';
  out << "mean tariffs," << stat_cells(off.tariffs) << ',' << stat_cells(on.tariffs) << '\n';
  return out.str();
}

std::string table4_csv(const std::vector<RegionalAverageRow>& rows) {
  std::ostringstream out;
  out << "region,ltc,u_i_no_nego,u_i_nego,difference\n";
  for (const RegionalAverageRow& r : rows) {
    out << r.target << ',' << r.ltc << ',' << fixed(r.u_no_nego, 3) << ','
        << fixed(r.u_nego, 3) << ',' << format_percent(r.difference) << '\n';
  }
  return out.str();
}

std::string subtest_data_csv(const ExperimentResult& exp2) {
  std::ostringstream out;
  out << "test,target,negotiation,labor_delta,tech_delta,temperature_increase_mean,"
         "temperature_increase_std,collective_reward_mean,collective_reward_std,"
         "target_reward_mean,target_reward_std,mitigation_mean,savings_mean\n";
  for (const SubtestRecord& r : exp2.records) {
    Stat target{};
    if (r.target == "all") {
      double total = 0.0;
      for (const Stat& s : r.region_reward) total += s.mean;
      target.mean = total / static_cast<double>(r.region_reward.size());
    } else {
      target = r.region_reward.at(exp2.index_of(std::stoi(r.target)));
    }
    out << r.test << ',' << r.target << ',' << (r.negotiation ? 1 : 0) << ','
        << num(r.ltc.labor_delta) << ',' << num(r.ltc.tech_delta) << ','
        << stat_cells(r.temperature_increase) << ',' << stat_cells(r.collective_reward) << ','
        << stat_cells(target) << ',' << num(r.mitigation.mean) << ',' << num(r.savings.mean)
        << '\n';
  }
  return out.str();
}

std::vector<std::filesystem::path> write_tables(const ExperimentResult& result,
                                                const std::filesystem::path& dir) {
  require(!result.records.empty(), "refusing to write tables for an empty result");
  std::vector<std::filesystem::path> written;
  auto emit = [&](const char* name, const std::string& text) {
    const auto path = dir / name;
    write_text(path, "# config_hash=" + result.config_hash + " build_id=" + result.build_id +
                         "\n" + text);
    written.push_back(path);
  };
  if (result.experiment == "exp1") {
    const Experiment1Summary summary = summarize_experiment1(result);
    emit("table1.csv", table1_csv(result));
    emit("table2.csv", table2_csv(summary));
    emit("table3.csv", table3_csv(result));
    emit("ranking.csv", "spearman_rank_correlation\n" + fixed(summary.spearman, 4) + "\n");
  } else if (result.experiment == "exp2") {
    emit("table4.csv", table4_csv(summarize_experiment2(result)));
    emit("subtests.csv", subtest_data_csv(result));
  } else {
    throw ValidationError("write_tables: unknown experiment '" + result.experiment + "'");
  }
  return written;
}

PolicySet PolicyRecord::policy_set() const {
  if (policies.size() == 1) return PolicySet(Policy(policies.front()));
  std::vector<Policy> out;
  out.reserve(policies.size());
  for (const PolicySpec& spec : policies) out.emplace_back(spec);
  return PolicySet(std::move(out));
}

std::string serialize_policy_record(const PolicyRecord& record) {
  require(!record.policies.empty(), "refusing to serialize a policy record without policies");
  json policies = json::array();
  for (const PolicySpec& p : record.policies) {
    policies.push_back({{"kind", std::string(to_string(p.kind))},
                        {"parameters", p.parameters},
                        {"seed", p.seed},
                        {"num_regions", p.num_regions},
                        {"quantize_levels", p.quantize_levels}});
  }
  json root = {{"schema", std::string(kPolicySchema)},
               {"config_hash", record.config_hash},
               {"build_id", record.build_id},
               {"seed", record.seed},
               {"negotiation", record.negotiation},
               {"training", training_json(record.training)},
               {"initial_fitness", record.initial_fitness},
               {"best_fitness", record.best_fitness},
               {"policies", std::move(policies)}};
  return root.dump(2) + "\n";
}

PolicyRecord parse_policy_record(std::string_view text) {
  try {
    const json root = json::parse(text);
    require(root.at("schema") == std::string(kPolicySchema),
            "policy: unsupported schema " + root.at("schema").dump());
    PolicyRecord record;
    record.config_hash = root.at("config_hash").get<std::string>();
    record.build_id = root.at("build_id").get<std::string>();
    record.seed = root.at("seed").get<std::uint64_t>();
    record.negotiation = root.at("negotiation").get<bool>();
    record.training = training_from(root.at("training"));
    record.initial_fitness = root.at("initial_fitness").get<double>();
    record.best_fitness = root.at("best_fitness").get<double>();
    for (const json& p : root.at("policies")) {
      PolicySpec spec;
      spec.kind = policy_kind_from_string(p.at("kind").get<std::string>());
      spec.parameters = p.at("parameters").get<std::vector<double>>();
      spec.seed = p.at("seed").get<std::uint64_t>();
      spec.num_regions = p.at("num_regions").get<std::size_t>();
      spec.quantize_levels = p.at("quantize_levels").get<int>();
      spec.validate();
      record.policies.push_back(std::move(spec));
    }
    require(!record.policies.empty(), "policy: no policies");
    return record;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("policy: ") + e.what());
  }
}

void write_policy_record(const PolicyRecord& record, const std::filesystem::path& path) {
  write_text(path, serialize_policy_record(record));
}

PolicyRecord read_policy_record(const std::filesystem::path& path) {
  return parse_policy_record(read_text(path));
}

std::string serialize_episode(const EpisodeLog& log, std::string_view config_hash,
                              std::uint64_t seed, bool negotiation) {
  json steps = json::array();
  for (int t = 0; t < log.steps_recorded(); ++t) {
    const GlobalStepRecord& g = log.globals[static_cast<std::size_t>(t)];
    json regions = json::array();
    for (std::size_t i = 0; i < log.num_regions; ++i) {
      regions.push_back(region_record_json(log.at(t, i)));
    }
    steps.push_back({{"step", t},
                     {"temp_atmosphere", g.temp_atmosphere},
                     {"temp_ocean", g.temp_ocean},
                     {"mass_atmosphere", g.mass_atmosphere},
                     {"emissions", g.emissions},
                     {"regions", std::move(regions)}});
  }
  const ActionMeans means = log.action_means();
  json root = {{"schema", std::string(kEpisodeSchema)},
               {"config_hash", std::string(config_hash)},
               {"build_id", build_id()},
               {"seed", seed},
               {"negotiation", negotiation},
               {"num_regions", log.num_regions},
               {"initial_temp_atmosphere", log.initial_temp_atmosphere},
               {"temperature_increase", log.temperature_increase},
               {"collective_reward", log.collective_reward},
               {"region_rewards", log.region_rewards},
               {"action_means",
                {{"mitigation_rate", means.mitigation},
                 {"saving_rate", means.savings},
                 {"max_export", means.export_cap},
                 {"mean_imports", means.imports},
                 {"mean_tariffs", means.tariffs}}},
               {"steps", std::move(steps)}};
  return root.dump(2) + "\n";
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  write_text(path, text);
}

}  // namespace rice
