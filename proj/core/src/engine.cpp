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

#include "rice/engine.hpp"

#include <cmath>
#include <numeric>
#include <ostream>
#include <string>

#include "json.hpp"
#include "rice/error.hpp"

namespace rice {

namespace {

void check_finite(double value, int step, int region_id, const char* field) {
  if (!std::isfinite(value)) {
    throw NumericError("step " + std::to_string(step) + ", region " +
                       std::to_string(region_id) + ": " + field + " is not finite (" +
                       std::to_string(value) + ")");
  }
}

void check_finite_global(double value, int step, const char* field) {
  if (!std::isfinite(value)) {
    throw NumericError("step " + std::to_string(step) + ": " + field + " is not finite (" +
                       std::to_string(value) + ")");
  }
}

double partner_mean(const std::vector<double>& values, std::size_t self) {
  const std::size_t n = values.size();
  if (n < 2) return 0.0;
  const double total = std::accumulate(values.begin(), values.end(), 0.0) - values[self];
  return total / static_cast<double>(n - 1);
}

void fill_observation(const SimConfig& config, const WorldState& state, std::size_t region,
                      Observation& obs) {
  const std::size_t n = config.regions.size();
  const RegionState& r = state.regions[region];
  obs.region = region;
  obs.num_regions = n;
  obs.features.assign(obs::size(n), 0.0);
  auto& f = obs.features;
  f[obs::kStepFraction] =
      static_cast<double>(state.step_index) / static_cast<double>(config.econ.num_steps);
  f[obs::kTempAtmosphere] = state.climate.temp_atmosphere;
  f[obs::kCarbonMassAtm] = state.climate.masses[0] / 1000.0;
  f[obs::kLabor] = r.labor / 1000.0;
  f[obs::kTechnology] = r.technology;
  f[obs::kCapital] = r.capital;
  f[obs::kSigma] = r.sigma;
  f[obs::kProduction] = econ::production(r.technology, r.capital, r.labor, config.econ.gamma);
  f[obs::kFloor] = state.negotiation ? state.negotiation->floors[region] : 0.0;
  f[obs::kMeanMitigation] = state.previous_actions.mitigation;
  f[obs::kMeanSavings] = state.previous_actions.savings;
  f[obs::kMeanExportCap] = state.previous_actions.export_cap;
  f[obs::kMeanImports] = state.previous_actions.imports;
  f[obs::kMeanTariffs] = state.previous_actions.tariffs;
  f[obs::kRegionOneHot + region] = 1.0;
}

StreamKey policy_key(std::uint64_t seed, std::uint64_t episode, int step, std::size_t region,
                     StreamPurpose purpose) {
  return StreamKey{seed, episode, static_cast<std::uint64_t>(step), region, purpose};
}

void write_verbose(std::ostream& out, int step, const GlobalStepRecord& g,
                   std::span<const RegionStepRecord> records,
                   const std::optional<NegotiationState>& nego) {
  nlohmann::json line;
  line["step"] = step;
  line["temp_atmosphere"] = g.temp_atmosphere;
  line["temp_ocean"] = g.temp_ocean;
  line["mass_atmosphere"] = g.mass_atmosphere;
  line["emissions"] = g.emissions;
  auto& regions = line["regions"] = nlohmann::json::array();
  for (const RegionStepRecord& r : records) {
    regions.push_back({{"utility", r.utility},
                       {"labor", r.labor},
                       {"technology", r.technology},
                       {"capital", r.capital},
                       {"consumption", r.consumption},
                       {"gross_output", r.gross_output},
                       {"mitigation", r.mitigation},
                       {"savings", r.savings},
                       {"export_cap", r.export_cap},
                       {"mean_imports", r.mean_imports},
                       {"mean_tariffs", r.mean_tariffs},
                       {"floor", r.floor}});
  }
  if (nego) {
    auto& n = line["negotiation"];
    n["floors"] = nego->floors;
    auto& props = n["proposals"] = nlohmann::json::array();
    for (std::size_t k = 0; k < nego->proposals.size(); ++k) {
      const Proposal& p = nego->proposals[k];
      props.push_back({p.proposer, p.recipient, p.promise, p.request,
                       static_cast<bool>(nego->acceptances[k])});
    }
  }
  out << line.dump() << '\n';
}

}  // namespace

void EpisodeLog::finalize() {
  const EpisodeRewards rewards = episode_rewards(*this);
  region_rewards = rewards.regional;
  collective_reward = rewards.collective;
  temperature_increase = rice::temperature_increase(*this);
}

ActionMeans EpisodeLog::action_means() const {
  ActionMeans m;
  if (records.empty()) return m;
  for (const RegionStepRecord& r : records) {
    m.mitigation += r.mitigation;
    m.savings += r.savings;
    m.export_cap += r.export_cap;
    m.imports += r.mean_imports;
    m.tariffs += r.mean_tariffs;
  }
  const double count = static_cast<double>(records.size());
  m.mitigation /= count;
  m.savings /= count;
  m.export_cap /= count;
  m.imports /= count;
  m.tariffs /= count;
  return m;
}

EpisodeRewards episode_rewards(const EpisodeLog& log) {
  if (!log.complete() || log.records.size() != log.num_regions * log.globals.size()) {
    throw ValidationError("episode_rewards: log has " + std::to_string(log.steps_recorded()) +
                          " of " + std::to_string(log.num_steps) + " steps");
  }
  EpisodeRewards out;
  out.regional.assign(log.num_regions, 0.0);
  for (int t = 0; t < log.num_steps; ++t) {
    for (std::size_t i = 0; i < log.num_regions; ++i) out.regional[i] += log.at(t, i).utility;
  }
  out.collective = std::accumulate(out.regional.begin(), out.regional.end(), 0.0);
  return out;
}

double temperature_increase(const EpisodeLog& log) {
  if (!log.complete() || log.globals.empty()) {
    throw ValidationError("temperature_increase: incomplete log");
  }
  return log.globals.back().temp_atmosphere - log.initial_temp_atmosphere;
}

Engine::Engine(SimConfig config) : config_(std::move(config)) { config_.validate(); }

WorldState Engine::reset(std::uint64_t seed, std::uint64_t episode) const {
  WorldState state;
  state.seed = seed;
  state.episode = episode;
  state.climate = config_.initial_climate;
  state.regions.reserve(config_.regions.size());
  for (const RegionParams& p : config_.regions) {
    RegionState r;
    r.labor = p.l0;
    r.technology = p.a0;
    r.capital = p.k0;
    r.sigma = p.sigma0;
    state.regions.push_back(r);
  }
  return state;
}

Observation Engine::build_observation(const WorldState& state, std::size_t region) const {
  if (region >= state.regions.size()) {
    throw ValidationError("build_observation: region " + std::to_string(region) +
                          " out of range");
  }
  Observation obs;
  fill_observation(config_, state, region, obs);
  return obs;
}

void Engine::advance(WorldState& state, std::span<const ActionVector> actions, Workspace& ws,
                     GlobalStepRecord& global) const {
  const std::size_t n = config_.regions.size();
  const int t = state.step_index;
  const auto& econ = config_.econ;
  if (t >= econ.num_steps) {
    throw ValidationError("step: episode already finished (" + std::to_string(t) + " steps)");
  }
  if (actions.size() != n) {
    throw ValidationError("step: expected " + std::to_string(n) + " actions, got " +
                          std::to_string(actions.size()));
  }
  if (state.regions.size() != n) throw ValidationError("step: state/config region mismatch");

  ws.actions.resize(n);
  ws.production.resize(n);
  ws.gross_output.resize(n);
  ws.next_regions.resize(n);
  ws.records.resize(n);

  const double temp = state.climate.temp_atmosphere;
  for (std::size_t i = 0; i < n; ++i) {
    ActionVector& a = ws.actions[i];
    a = actions[i];
    for (auto* field : {&a.import_bids, &a.tariffs}) {
      if (field->empty()) {
        field->assign(n, 0.0);
      } else if (field->size() != n) {
        throw ValidationError("step: region " + std::to_string(i) +
                              " action has a partner vector of length " +
                              std::to_string(field->size()) + ", expected " +
                              std::to_string(n));
      }
    }
    a.sanitize(i);
    const double floor = state.negotiation ? state.negotiation->floors[i] : 0.0;
    a.mitigation_rate = std::max(a.mitigation_rate, floor);

    const RegionParams& p = config_.regions[i];
    const RegionState& r = state.regions[i];
    ws.production[i] = econ::production(r.technology, r.capital, r.labor, econ.gamma);
    const double damages = econ::damages_factor(temp, p);
    const double cost = econ::abatement_cost(a.mitigation_rate, r.sigma, econ);
    ws.gross_output[i] = econ::gross_output(damages, cost, ws.production[i]);

    RegionStepRecord& rec = ws.records[i];
    rec.labor = r.labor;
    rec.technology = r.technology;
    rec.capital = r.capital;
    rec.sigma = r.sigma;
    rec.production = ws.production[i];
    rec.gross_output = ws.gross_output[i];
    rec.mitigation = a.mitigation_rate;
    rec.savings = a.savings_rate;
    rec.export_cap = a.export_cap;
    rec.mean_imports = partner_mean(a.import_bids, i);
    rec.mean_tariffs = partner_mean(a.tariffs, i);
    rec.floor = floor;
  }

  econ::clear_trade(ws.actions, ws.gross_output, ws.trade);

  ActionMeans means;
  double total_emissions = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const ActionVector& a = ws.actions[i];
    const RegionParams& p = config_.regions[i];
    const RegionState& r = state.regions[i];
    RegionStepRecord& rec = ws.records[i];
    const int id = p.region_id;

    rec.exports = ws.trade.total_exports(i);
    rec.domestic_consumption =
        econ::domestic_consumption(ws.gross_output[i], a.savings_rate, rec.exports);
    rec.consumption =
        econ::aggregate_consumption(rec.domestic_consumption, ws.trade.received_row(i), i, econ);
    rec.utility = econ::step_utility(r.labor, rec.consumption, econ);
    rec.emissions =
        climate::emissions(r.sigma, a.mitigation_rate, ws.production[i], econ.delta_step);
    total_emissions += rec.emissions;

    RegionState& next = ws.next_regions[i];
    next.labor = econ::update_labor(r.labor, p);
    next.technology = econ::update_technology(r.technology, t + 1, p, econ);
    next.capital = econ::update_capital(r.capital, ws.gross_output[i], a.savings_rate, econ);
    next.sigma = econ::update_carbon_intensity(r.sigma, econ);
    next.consumption = rec.consumption;
    next.step_utility = rec.utility;
    next.cumulative_utility = r.cumulative_utility + rec.utility;

    check_finite(rec.production, t, id, "production");
    check_finite(rec.gross_output, t, id, "gross_output");
    check_finite(rec.consumption, t, id, "consumption");
    check_finite(rec.utility, t, id, "utility");
    check_finite(rec.emissions, t, id, "emissions");
    check_finite(next.labor, t, id, "labor");
    check_finite(next.technology, t, id, "technology");
    check_finite(next.capital, t, id, "capital");
    check_finite(next.sigma, t, id, "sigma");

    means.mitigation += rec.mitigation;
    means.savings += rec.savings;
    means.export_cap += rec.export_cap;
    means.imports += rec.mean_imports;
    means.tariffs += rec.mean_tariffs;
  }

  ClimateState next_climate =
      climate::step_climate(state.climate, total_emissions, t, config_.climate);
  check_finite_global(next_climate.masses[0], t, "atmospheric carbon");
  check_finite_global(next_climate.temp_atmosphere, t, "temp_atmosphere");
  check_finite_global(next_climate.temp_ocean, t, "temp_ocean");

  const double count = static_cast<double>(n);
  means.mitigation /= count;
  means.savings /= count;
  means.export_cap /= count;
  means.imports /= count;
  means.tariffs /= count;

  global.temp_atmosphere = next_climate.temp_atmosphere;
  global.temp_ocean = next_climate.temp_ocean;
  global.mass_atmosphere = next_climate.masses[0];
  global.emissions = total_emissions;

  // Commit.
  state.regions.swap(ws.next_regions);
  state.climate = next_climate;
  state.previous_actions = means;
  state.step_index = t + 1;
}

StepResult Engine::step(const WorldState& state, std::span<const ActionVector> actions) const {
  StepResult result;
  result.state = state;
  Workspace ws;
  advance(result.state, actions, ws, result.global);
  result.records = std::move(ws.records);
  result.rewards.reserve(result.records.size());
  for (const RegionStepRecord& r : result.records) result.rewards.push_back(r.utility);
  return result;
}

EpisodeLog Engine::run_episode(const PolicySet& policies, std::uint64_t seed,
                               bool negotiation_on, const EpisodeOptions& options) const {
  const std::size_t n = num_regions();
  policies.validate(n);

  WorldState state = reset(seed, options.episode);
  EpisodeLog log;
  log.num_regions = n;
  log.num_steps = num_steps();
  log.initial_temp_atmosphere = state.climate.temp_atmosphere;
  log.records.reserve(n * static_cast<std::size_t>(num_steps()));
  log.globals.reserve(static_cast<std::size_t>(num_steps()));

  Workspace ws;
  std::vector<Observation> observations(n);
  std::vector<ActionVector> actions(n);
  GlobalStepRecord global;

  for (int t = 0; t < num_steps(); ++t) {
    state.negotiation.reset();
    for (std::size_t i = 0; i < n; ++i) fill_observation(config_, state, i, observations[i]);

    if (negotiation_on) {
      const StreamKey step_key = policy_key(seed, options.episode, t, 0, StreamPurpose::kProposal);
      NegotiationState nego = negotiation::negotiate(policies, observations, step_key);
      for (std::size_t i = 0; i < n; ++i) observations[i].features[obs::kFloor] = nego.floors[i];
      state.negotiation = std::move(nego);
    }

    for (std::size_t i = 0; i < n; ++i) {
      const Policy& policy = policies.for_region(i);
      StreamKey key = policy_key(seed, options.episode, t, i, StreamPurpose::kAction);
      key.seed = hash_combine(key.seed, policy.spec().seed);
      RngStream rng(key);
      policy.act(observations[i], rng, actions[i]);
    }

    advance(state, actions, ws, global);
    log.records.insert(log.records.end(), ws.records.begin(), ws.records.end());
    log.globals.push_back(global);
    if (options.record_negotiation && state.negotiation) {
      log.negotiation.push_back(*state.negotiation);
    }
    if (options.verbose) write_verbose(*options.verbose, t, global, ws.records, state.negotiation);
  }

  log.finalize();
  return log;
}

}  // namespace rice
