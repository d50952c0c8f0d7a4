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

#include "rice/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"
#include "rice/error.hpp"

#ifndef RICE_BUILD_ID
#define RICE_BUILD_ID "unknown"
#endif

namespace rice {

using nlohmann::json;

namespace {

constexpr std::string_view kRequiredColumns[] = {"region_id", "xA_0",     "xK_0",
                                                 "xL_0",      "xL_a",     "xdelta_A",
                                                 "xg_A",      "xl_g",     "xsigma_0"};
constexpr std::string_view kDamageColumns[] = {"damage_a1", "damage_a2", "damage_a3"};

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> cells;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    cells.push_back(trim(line.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return cells;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, end);
}

void require(bool ok, const std::string& message) {
  if (!ok) throw ValidationError(message);
}

bool finite_all(std::initializer_list<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Rejects keys that are not in `allowed`; keys starting with '_' are comments.
void check_keys(const json& object, std::initializer_list<std::string_view> allowed,
                std::string_view where) {
  if (!object.is_object()) {
    throw ValidationError(std::string(where) + ": expected an object");
  }
  for (const auto& [key, value] : object.items()) {
    if (!key.empty() && key.front() == '_') continue;
    bool known = false;
    for (std::string_view a : allowed) known = known || key == a;
    if (!known) {
      throw ValidationError(std::string(where) + ": unknown key '" + key + "'");
    }
  }
}

template <typename T>
void read_field(const json& object, const char* key, T& target, std::string_view where) {
  auto it = object.find(key);
  if (it == object.end()) return;
  try {
    target = it->get<T>();
  } catch (const json::exception&) {
    throw ValidationError(std::string(where) + "." + key + ": wrong type");
  }
}

json region_to_json(const RegionParams& r) {
  return json{{"region_id", r.region_id}, {"xA_0", r.a0},          {"xK_0", r.k0},
              {"xL_0", r.l0},             {"xL_a", r.l_a},         {"xdelta_A", r.delta_a},
              {"xg_A", r.g_a},            {"xl_g", r.l_g},         {"xsigma_0", r.sigma0},
              {"damage_a1", r.damage_a1}, {"damage_a2", r.damage_a2},
              {"damage_a3", r.damage_a3}};
}

RegionParams region_from_json(const json& j, std::size_t index) {
  const std::string where = "regions[" + std::to_string(index) + "]";
  check_keys(j,
             {"region_id", "xA_0", "xK_0", "xL_0", "xL_a", "xdelta_A", "xg_A", "xl_g",
              "xsigma_0", "damage_a1", "damage_a2", "damage_a3"},
             where);
  for (std::string_view col : kRequiredColumns) {
    require(j.contains(std::string(col)), where + ": missing '" + std::string(col) + "'");
  }
  RegionParams r;
  read_field(j, "region_id", r.region_id, where);
  read_field(j, "xA_0", r.a0, where);
  read_field(j, "xK_0", r.k0, where);
  read_field(j, "xL_0", r.l0, where);
  read_field(j, "xL_a", r.l_a, where);
  read_field(j, "xdelta_A", r.delta_a, where);
  read_field(j, "xg_A", r.g_a, where);
  read_field(j, "xl_g", r.l_g, where);
  read_field(j, "xsigma_0", r.sigma0, where);
  read_field(j, "damage_a1", r.damage_a1, where);
  read_field(j, "damage_a2", r.damage_a2, where);
  read_field(j, "damage_a3", r.damage_a3, where);
  return r;
}

}  // namespace

void SimConfig::validate() const {
  const auto& e = econ;
  require(finite_all({e.alpha, e.epsilon, e.gamma, e.delta_step, e.sub_rate, e.dom_pref,
                      e.theta2, e.backstop_price, e.delta_k, e.g_sigma}),
          "econ: all parameters must be finite");
  require(e.alpha != 1.0, "econ.alpha must differ from 1");
  require(e.epsilon > 0.0, "econ.epsilon must be > 0");
  require(e.gamma > 0.0 && e.gamma < 1.0, "econ.gamma must be in (0, 1)");
  require(e.delta_step > 0.0, "econ.delta_step must be > 0");
  require(e.num_steps > 0, "econ.num_steps must be > 0");
  require(e.sub_rate > 0.0 && e.sub_rate <= 1.0, "econ.sub_rate must be in (0, 1]");
  require(e.dom_pref >= 0.0, "econ.dom_pref must be >= 0");
  require(e.theta2 > 1.0, "econ.theta2 must be > 1");
  require(e.backstop_price >= 0.0, "econ.backstop_price must be >= 0");
  require(e.delta_k >= 0.0 && e.delta_k < 1.0, "econ.delta_k must be in [0, 1)");

  require(!regions.empty(), "regions: at least one region required");
  require(e.for_pref.size() == regions.size(),
          "econ.for_pref has " + std::to_string(e.for_pref.size()) + " entries for " +
              std::to_string(regions.size()) + " regions");
  double pref_total = e.dom_pref;
  for (std::size_t j = 0; j < e.for_pref.size(); ++j) {
    require(std::isfinite(e.for_pref[j]) && e.for_pref[j] >= 0.0,
            "econ.for_pref[" + std::to_string(j) + "] must be finite and >= 0");
    pref_total += e.for_pref[j];
  }
  require(pref_total > 0.0, "econ: dom_pref + sum(for_pref) must be > 0");

  std::set<int> ids;
  for (std::size_t i = 0; i < regions.size(); ++i) {
    const RegionParams& r = regions[i];
    const std::string where = "region " + std::to_string(r.region_id) + " (row " +
                              std::to_string(i) + ")";
    require(finite_all({r.a0, r.k0, r.l0, r.l_a, r.delta_a, r.g_a, r.l_g, r.sigma0,
                        r.damage_a1, r.damage_a2, r.damage_a3}),
            where + ": non-finite parameter");
    require(ids.insert(r.region_id).second, where + ": duplicate region_id");
    require(r.a0 > 0.0, where + ": xA_0 must be > 0");
    require(r.k0 >= 0.0, where + ": xK_0 must be >= 0");
    require(r.l0 > 0.0, where + ": xL_0 must be > 0");
    require(r.l_a > 0.0, where + ": xL_a must be > 0");
    require(r.sigma0 >= 0.0, where + ": xsigma_0 must be >= 0");
    require(r.damage_a2 >= 0.0, where + ": damage_a2 must be >= 0");
  }

  const auto& c = climate;
  for (int col = 0; col < 3; ++col) {
    double sum = 0.0;
    for (int row = 0; row < 3; ++row) {
      require(std::isfinite(c.carbon_transfer[row][col]) && c.carbon_transfer[row][col] >= 0.0,
              "climate.carbon_transfer entries must be finite and >= 0");
      sum += c.carbon_transfer[row][col];
    }
    require(std::abs(sum - 1.0) < 1e-9,
            "climate.carbon_transfer column " + std::to_string(col) + " must sum to 1");
  }
  require(finite_all({c.m_preindustrial, c.f2x, c.t2x, c.heat_c1, c.heat_c3, c.heat_c4,
                      c.f_exo_0, c.f_exo_slope}),
          "climate: all parameters must be finite");
  require(c.m_preindustrial > 0.0, "climate.m_preindustrial must be > 0");
  require(c.f2x > 0.0, "climate.f2x must be > 0");
  require(c.t2x > 0.0, "climate.t2x must be > 0");
  const auto& init = initial_climate;
  require(init.masses[0] > 0.0 && init.masses[1] >= 0.0 && init.masses[2] >= 0.0,
          "climate.initial.masses must be >= 0 (atmosphere > 0)");
  require(finite_all({init.temp_atmosphere, init.temp_ocean}),
          "climate.initial temperatures must be finite");

  const auto& t = training;
  require(t.iterations >= 0, "training.iterations must be >= 0");
  require(t.population >= 4, "training.population must be >= 4");
  require(t.elite_fraction > 0.0 && t.elite_fraction <= 0.5,
          "training.elite_fraction must be in (0, 0.5]");
  require(t.initial_std > 0.0, "training.initial_std must be > 0");
  require(t.min_std >= 0.0, "training.min_std must be >= 0");
  require(t.threads >= 1, "training.threads must be >= 1");
  require(!seeds.empty(), "seeds: at least one seed required");
}

SimConfig default_config() { return with_regions(SimConfig{}, default_regions()); }

SimConfig with_regions(SimConfig base, std::vector<RegionParams> regions) {
  base.econ.for_pref = GlobalEconParams::uniform_foreign_preferences(regions.size());
  base.regions = std::move(regions);
  return base;
}

std::vector<RegionParams> tiled_default_regions(std::size_t n) {
  const std::vector<RegionParams> table = default_regions();
  std::vector<RegionParams> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    RegionParams r = table[i % table.size()];
    r.region_id = static_cast<int>(i);
    out.push_back(r);
  }
  return out;
}

std::vector<RegionParams> parse_region_table(std::string_view text, std::string_view source) {
  const std::string src(source);
  std::vector<std::string_view> header;
  std::map<std::string_view, std::size_t> column;
  std::vector<RegionParams> regions;
  std::set<int> ids;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = trim(text.substr(start, end - start));
    start = end == std::string_view::npos ? text.size() + 1 : end + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    auto cells = split(line, ',');
    const std::string at = src + ":" + std::to_string(line_no);
    if (header.empty()) {
      header = cells;
      for (std::size_t c = 0; c < header.size(); ++c) {
        bool known = false;
        for (auto name : kRequiredColumns) known = known || header[c] == name;
        for (auto name : kDamageColumns) known = known || header[c] == name;
        require(known, at + ": unknown column '" + std::string(header[c]) + "'");
        require(column.emplace(header[c], c).second,
                at + ": duplicate column '" + std::string(header[c]) + "'");
      }
      for (auto name : kRequiredColumns) {
        require(column.count(name) == 1, at + ": missing column '" + std::string(name) + "'");
      }
      continue;
    }

    require(cells.size() == header.size(),
            at + ": expected " + std::to_string(header.size()) + " cells, got " +
                std::to_string(cells.size()));
    auto number = [&](std::string_view name) {
      const std::string_view cell = cells[column.at(name)];
      double value = 0.0;
      auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), value);
      require(ec == std::errc() && ptr == cell.data() + cell.size() && !cell.empty() &&
                  std::isfinite(value),
              at + ", column '" + std::string(name) + "': not a number: '" +
                  std::string(cell) + "'");
      return value;
    };

    RegionParams r;
    const std::string_view id_cell = cells[column.at("region_id")];
    auto [ptr, ec] = std::from_chars(id_cell.data(), id_cell.data() + id_cell.size(),
                                     r.region_id);
    require(ec == std::errc() && ptr == id_cell.data() + id_cell.size() && !id_cell.empty(),
            at + ", column 'region_id': not an integer: '" + std::string(id_cell) + "'");
    require(ids.insert(r.region_id).second,
            at + ": duplicate region_id " + std::to_string(r.region_id));
    r.a0 = number("xA_0");
    r.k0 = number("xK_0");
    r.l0 = number("xL_0");
    r.l_a = number("xL_a");
    r.delta_a = number("xdelta_A");
    r.g_a = number("xg_A");
    r.l_g = number("xl_g");
    r.sigma0 = number("xsigma_0");
    if (column.count("damage_a1")) r.damage_a1 = number("damage_a1");
    if (column.count("damage_a2")) r.damage_a2 = number("damage_a2");
    if (column.count("damage_a3")) r.damage_a3 = number("damage_a3");

    require(r.l0 > 0.0, at + ", column 'xL_0': must be > 0");
    require(r.l_a > 0.0, at + ", column 'xL_a': must be > 0");
    require(r.a0 > 0.0, at + ", column 'xA_0': must be > 0");
    require(r.k0 >= 0.0, at + ", column 'xK_0': must be >= 0");
    require(r.sigma0 >= 0.0, at + ", column 'xsigma_0': must be >= 0");
    require(r.damage_a2 >= 0.0, at + ", column 'damage_a2': must be >= 0");
    regions.push_back(r);
  }
  require(!header.empty(), src + ": missing header row");
  require(!regions.empty(), src + ": no region rows");
  return regions;
}

std::vector<RegionParams> load_region_config(const std::filesystem::path& path) {
  return parse_region_table(read_file(path), path.string());
}

std::string format_region_table(const std::vector<RegionParams>& regions) {
  std::ostringstream out;
  out << "region_id,xA_0,xK_0,xL_0,xL_a,xdelta_A,xg_A,xl_g,xsigma_0,damage_a1,damage_a2,"
         "damage_a3\n";
  for (const RegionParams& r : regions) {
    out << r.region_id;
    for (double v : {r.a0, r.k0, r.l0, r.l_a, r.delta_a, r.g_a, r.l_g, r.sigma0, r.damage_a1,
                     r.damage_a2, r.damage_a3}) {
      out << ',' << format_double(v);
    }
    out << '\n';
  }
  return out.str();
}

SimConfig parse_config(std::string_view text, const std::filesystem::path& base_dir) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("config: ") + e.what());
  }
  check_keys(root,
             {"schema", "regions_file", "regions", "negotiation_on", "econ", "climate",
              "training", "seeds", "output_dir"},
             "config");
  if (root.contains("schema")) {
    require(root["schema"] == std::string(kConfigSchema),
            "config.schema: expected '" + std::string(kConfigSchema) + "'");
  }

  SimConfig cfg;
  read_field(root, "negotiation_on", cfg.negotiation_on, "config");
  read_field(root, "output_dir", cfg.output_dir, "config");
  read_field(root, "seeds", cfg.seeds, "config");

  require(root.contains("regions") != root.contains("regions_file"),
          "config: exactly one of 'regions' or 'regions_file' is required");
  if (root.contains("regions_file")) {
    std::string regions_file;
    read_field(root, "regions_file", regions_file, "config");
    std::filesystem::path path(regions_file);
    if (path.is_relative() && !base_dir.empty()) path = base_dir / path;
    cfg.regions = load_region_config(path);
  } else {
    const json& rows = root["regions"];
    require(rows.is_array(), "config.regions: expected an array");
    for (std::size_t i = 0; i < rows.size(); ++i) {
      cfg.regions.push_back(region_from_json(rows[i], i));
    }
  }
  require(cfg.regions.size() >= 2, "config: at least two regions required");

  bool for_pref_given = false;
  if (root.contains("econ")) {
    const json& e = root["econ"];
    check_keys(e,
               {"alpha", "epsilon", "gamma", "delta_step", "num_steps", "sub_rate", "dom_pref",
                "for_pref", "theta2", "backstop_price", "delta_k", "g_sigma"},
               "econ");
    auto& p = cfg.econ;
    read_field(e, "alpha", p.alpha, "econ");
    read_field(e, "epsilon", p.epsilon, "econ");
    read_field(e, "gamma", p.gamma, "econ");
    read_field(e, "delta_step", p.delta_step, "econ");
    read_field(e, "num_steps", p.num_steps, "econ");
    read_field(e, "sub_rate", p.sub_rate, "econ");
    read_field(e, "dom_pref", p.dom_pref, "econ");
    read_field(e, "theta2", p.theta2, "econ");
    read_field(e, "backstop_price", p.backstop_price, "econ");
    read_field(e, "delta_k", p.delta_k, "econ");
    read_field(e, "g_sigma", p.g_sigma, "econ");
    for_pref_given = e.contains("for_pref");
    read_field(e, "for_pref", p.for_pref, "econ");
  }
  if (!for_pref_given) {
    cfg.econ.for_pref = GlobalEconParams::uniform_foreign_preferences(cfg.regions.size());
  }

  if (root.contains("climate")) {
    const json& c = root["climate"];
    check_keys(c,
               {"carbon_transfer", "m_preindustrial", "f2x", "t2x", "heat_c1", "heat_c3",
                "heat_c4", "f_exo_0", "f_exo_slope", "initial"},
               "climate");
    auto& p = cfg.climate;
    read_field(c, "carbon_transfer", p.carbon_transfer, "climate");
    read_field(c, "m_preindustrial", p.m_preindustrial, "climate");
    read_field(c, "f2x", p.f2x, "climate");
    read_field(c, "t2x", p.t2x, "climate");
    read_field(c, "heat_c1", p.heat_c1, "climate");
    read_field(c, "heat_c3", p.heat_c3, "climate");
    read_field(c, "heat_c4", p.heat_c4, "climate");
    read_field(c, "f_exo_0", p.f_exo_0, "climate");
    read_field(c, "f_exo_slope", p.f_exo_slope, "climate");
    if (c.contains("initial")) {
      const json& i = c["initial"];
      check_keys(i, {"masses", "temp_atmosphere", "temp_ocean", "cumulative_emissions"},
                 "climate.initial");
      read_field(i, "masses", cfg.initial_climate.masses, "climate.initial");
      read_field(i, "temp_atmosphere", cfg.initial_climate.temp_atmosphere, "climate.initial");
      read_field(i, "temp_ocean", cfg.initial_climate.temp_ocean, "climate.initial");
      read_field(i, "cumulative_emissions", cfg.initial_climate.cumulative_emissions,
                 "climate.initial");
    }
  }

  if (root.contains("training")) {
    const json& t = root["training"];
    check_keys(t,
               {"iterations", "population", "elite_fraction", "initial_std", "min_std",
                "per_region", "threads"},
               "training");
    auto& p = cfg.training;
    read_field(t, "iterations", p.iterations, "training");
    read_field(t, "population", p.population, "training");
    read_field(t, "elite_fraction", p.elite_fraction, "training");
    read_field(t, "initial_std", p.initial_std, "training");
    read_field(t, "min_std", p.min_std, "training");
    read_field(t, "per_region", p.per_region, "training");
    read_field(t, "threads", p.threads, "training");
  }

  cfg.validate();
  return cfg;
}

SimConfig load_config(const std::filesystem::path& path) {
  return parse_config(read_file(path), path.parent_path());
}

std::string serialize_config(const SimConfig& cfg) {
  json root;
  root["schema"] = std::string(kConfigSchema);
  root["negotiation_on"] = cfg.negotiation_on;
  root["output_dir"] = cfg.output_dir;
  root["seeds"] = cfg.seeds;
  json regions = json::array();
  for (const RegionParams& r : cfg.regions) regions.push_back(region_to_json(r));
  root["regions"] = std::move(regions);
  const auto& e = cfg.econ;
  root["econ"] = {{"alpha", e.alpha},
                  {"epsilon", e.epsilon},
                  {"gamma", e.gamma},
                  {"delta_step", e.delta_step},
                  {"num_steps", e.num_steps},
                  {"sub_rate", e.sub_rate},
                  {"dom_pref", e.dom_pref},
                  {"for_pref", e.for_pref},
                  {"theta2", e.theta2},
                  {"backstop_price", e.backstop_price},
                  {"delta_k", e.delta_k},
                  {"g_sigma", e.g_sigma}};
  const auto& c = cfg.climate;
  root["climate"] = {{"carbon_transfer", c.carbon_transfer},
                     {"m_preindustrial", c.m_preindustrial},
                     {"f2x", c.f2x},
                     {"t2x", c.t2x},
                     {"heat_c1", c.heat_c1},
                     {"heat_c3", c.heat_c3},
                     {"heat_c4", c.heat_c4},
                     {"f_exo_0", c.f_exo_0},
                     {"f_exo_slope", c.f_exo_slope},
                     {"initial",
                      {{"masses", cfg.initial_climate.masses},
                       {"temp_atmosphere", cfg.initial_climate.temp_atmosphere},
                       {"temp_ocean", cfg.initial_climate.temp_ocean},
                       {"cumulative_emissions", cfg.initial_climate.cumulative_emissions}}}};
  const auto& t = cfg.training;
  root["training"] = {{"iterations", t.iterations},
                      {"population", t.population},
                      {"elite_fraction", t.elite_fraction},
                      {"initial_std", t.initial_std},
                      {"min_std", t.min_std},
                      {"per_region", t.per_region},
                      {"threads", t.threads}};
  return root.dump(2) + "\n";
}

std::string config_hash(const SimConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : serialize_config(config)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string build_id() { return RICE_BUILD_ID; }

}  // namespace rice
