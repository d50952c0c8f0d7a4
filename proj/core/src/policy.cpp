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

#include "rice/policy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "rice/error.hpp"

namespace rice {

namespace {

double clamp01(double x) {
  if (!(x > 0.0)) return 0.0;
  return x < 1.0 ? x : 1.0;
}

void fill_trade_fields(ActionVector& out, std::size_t self, std::size_t n, double bid,
                       double tariff) {
  out.import_bids.assign(n, bid);
  out.tariffs.assign(n, tariff);
  if (self < n) {
    out.import_bids[self] = 0.0;
    out.tariffs[self] = 0.0;
  }
}

double per_partner(double fraction, double production, std::size_t n) {
  return n > 1 ? fraction * production / static_cast<double>(n - 1) : 0.0;
}

}  // namespace

std::string_view to_string(PolicyKind kind) {
  switch (kind) {
    case PolicyKind::kZero:
      return "zero";
    case PolicyKind::kFixed:
      return "fixed";
    case PolicyKind::kRandom:
      return "random";
    case PolicyKind::kLinear:
      return "linear-cem";
  }
  return "unknown";
}

PolicyKind policy_kind_from_string(std::string_view name) {
  if (name == "zero") return PolicyKind::kZero;
  if (name == "fixed") return PolicyKind::kFixed;
  if (name == "random") return PolicyKind::kRandom;
  if (name == "linear-cem" || name == "linear") return PolicyKind::kLinear;
  throw ValidationError("unknown policy kind '" + std::string(name) + "'");
}

std::size_t linear_weight_count(std::size_t num_regions) {
  const std::size_t row = obs::size(num_regions) + 1;
  return (linear_head::kCount + 1) * row + 2;
}

PolicySpec PolicySpec::zero() { return {}; }

PolicySpec PolicySpec::fixed(double mitigation, double savings, double export_fraction,
                             double import_fraction, double tariff, double promise,
                             double request, bool accept) {
  PolicySpec spec;
  spec.kind = PolicyKind::kFixed;
  spec.parameters = {mitigation, savings,  export_fraction,   import_fraction,
                     tariff,     promise,  request,           accept ? 1.0 : 0.0};
  return spec;
}

PolicySpec PolicySpec::random(std::uint64_t seed) {
  PolicySpec spec;
  spec.kind = PolicyKind::kRandom;
  spec.seed = seed;
  return spec;
}

PolicySpec PolicySpec::linear(std::size_t num_regions) {
  PolicySpec spec;
  spec.kind = PolicyKind::kLinear;
  spec.num_regions = num_regions;
  spec.parameters.assign(linear_weight_count(num_regions), 0.0);
  return spec;
}

void PolicySpec::validate() const {
  const std::string name(to_string(kind));
  if (quantize_levels < 0 || quantize_levels == 1) {
    throw ValidationError(name + " policy: quantize_levels must be 0 or >= 2");
  }
  for (double p : parameters) {
    if (!std::isfinite(p)) throw ValidationError(name + " policy: non-finite parameter");
  }
  switch (kind) {
    case PolicyKind::kZero:
    case PolicyKind::kRandom:
      if (!parameters.empty()) {
        throw ValidationError(name + " policy takes no parameters");
      }
      break;
    case PolicyKind::kFixed:
      if (parameters.size() != fixed_param::kCount) {
        throw ValidationError("fixed policy expects " + std::to_string(fixed_param::kCount) +
                              " parameters, got " + std::to_string(parameters.size()));
      }
      for (std::size_t i = 0; i < fixed_param::kCount; ++i) {
        if (i == fixed_param::kAccept) continue;
        if (parameters[i] < 0.0 || parameters[i] > 1.0) {
          throw ValidationError("fixed policy parameter " + std::to_string(i) +
                                " outside [0, 1]");
        }
      }
      break;
    case PolicyKind::kLinear:
      if (num_regions == 0) throw ValidationError("linear policy: num_regions must be > 0");
      if (parameters.size() != linear_weight_count(num_regions)) {
        throw ValidationError("linear policy for " + std::to_string(num_regions) +
                              " regions expects " +
                              std::to_string(linear_weight_count(num_regions)) +
                              " weights, got " + std::to_string(parameters.size()));
      }
      break;
  }
}

void PolicySet::validate(std::size_t num_regions) const {
  if (policies_.empty()) throw ValidationError("policy set is empty");
  if (policies_.size() != 1 && policies_.size() != num_regions) {
    throw ValidationError("policy set has " + std::to_string(policies_.size()) +
                          " policies for " + std::to_string(num_regions) + " regions");
  }
  for (const Policy& p : policies_) {
    if (p.spec().kind == PolicyKind::kLinear && p.spec().num_regions != num_regions) {
      throw ValidationError("linear policy was built for " +
                            std::to_string(p.spec().num_regions) + " regions, config has " +
                            std::to_string(num_regions));
    }
  }
}

void Observation::validate() const {
  if (features.size() != obs::size(num_regions)) {
    throw ValidationError("observation has " + std::to_string(features.size()) +
                          " features, expected " + std::to_string(obs::size(num_regions)));
  }
  if (region >= num_regions) throw ValidationError("observation region out of range");
  for (std::size_t i = 0; i < features.size(); ++i) {
    if (!std::isfinite(features[i])) {
      throw ValidationError("observation feature " + std::to_string(i) + " is not finite");
    }
  }
}

Policy::Policy(PolicySpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  if (spec_.kind == PolicyKind::kLinear) obs_dim_ = obs::size(spec_.num_regions);
}

double Policy::quantize(double fraction) const {
  fraction = clamp01(fraction);
  if (spec_.quantize_levels < 2) return fraction;
  const double steps = static_cast<double>(spec_.quantize_levels - 1);
  return std::round(fraction * steps) / steps;
}

double Policy::head(std::size_t index, const Observation& obs) const {
  const double* w = spec_.parameters.data() + index * (obs_dim_ + 1);
  return std::inner_product(obs.features.begin(), obs.features.end(), w, w[obs_dim_]);
}

void Policy::act(const Observation& obs, RngStream& rng, ActionVector& out) const {
  const std::size_t n = obs.num_regions;
  const std::size_t self = obs.region;
  const double production = obs.features.size() > obs::kProduction
                                ? std::max(0.0, obs.features[obs::kProduction])
                                : 0.0;
  switch (spec_.kind) {
    case PolicyKind::kZero:
      out.savings_rate = out.mitigation_rate = out.export_cap = 0.0;
      fill_trade_fields(out, self, n, 0.0, 0.0);
      break;
    case PolicyKind::kFixed: {
      const auto& p = spec_.parameters;
      out.mitigation_rate = quantize(p[fixed_param::kMitigation]);
      out.savings_rate = quantize(p[fixed_param::kSavings]);
      out.export_cap = quantize(p[fixed_param::kExportFraction]) * production;
      fill_trade_fields(out, self, n,
                        per_partner(quantize(p[fixed_param::kImportFraction]), production, n),
                        quantize(p[fixed_param::kTariff]));
      break;
    }
    case PolicyKind::kRandom:
      out.mitigation_rate = quantize(rng.uniform());
      out.savings_rate = quantize(rng.uniform());
      out.export_cap = quantize(rng.uniform()) * production;
      out.import_bids.assign(n, 0.0);
      out.tariffs.assign(n, 0.0);
      for (std::size_t j = 0; j < n; ++j) {
        if (j == self) continue;
        out.import_bids[j] = per_partner(quantize(rng.uniform()), production, n);
        out.tariffs[j] = quantize(rng.uniform());
      }
      break;
    case PolicyKind::kLinear:
      obs.validate();
      out.mitigation_rate = quantize(head(linear_head::kMitigation, obs));
      out.savings_rate = quantize(head(linear_head::kSavings, obs));
      out.export_cap = quantize(head(linear_head::kExportFraction, obs)) * production;
      fill_trade_fields(
          out, self, n,
          per_partner(quantize(head(linear_head::kImportFraction, obs)), production, n),
          quantize(head(linear_head::kTariff, obs)));
      break;
  }
}

ActionVector Policy::act(const Observation& obs, RngStream& rng) const {
  ActionVector out;
  act(obs, rng, out);
  return out;
}

void Policy::propose(const Observation& obs, RngStream& rng, std::span<Proposal> out) const {
  const std::size_t n = obs.num_regions;
  if (out.size() + 1 != n) throw ValidationError("propose: expected N - 1 proposal slots");
  double promise = 0.0;
  double request = 0.0;
  if (spec_.kind == PolicyKind::kFixed) {
    promise = quantize(spec_.parameters[fixed_param::kPromise]);
    request = quantize(spec_.parameters[fixed_param::kRequest]);
  } else if (spec_.kind == PolicyKind::kLinear) {
    obs.validate();
    promise = quantize(head(linear_head::kPromise, obs));
    request = quantize(head(linear_head::kRequest, obs));
  }
  std::size_t k = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (j == obs.region) continue;
    Proposal& p = out[k++];
    p.proposer = static_cast<int>(obs.region);
    p.recipient = static_cast<int>(j);
    if (spec_.kind == PolicyKind::kRandom) {
      p.promise = quantize(rng.uniform());
      p.request = quantize(rng.uniform());
    } else {
      p.promise = promise;
      p.request = request;
    }
  }
}

void Policy::respond(const Observation& obs, std::span<const Proposal> proposals,
                     RngStream& rng, std::span<std::uint8_t> acceptances) const {
  const std::size_t n = obs.num_regions;
  const std::size_t self = obs.region;
  if (proposals.size() != n * (n - 1) || acceptances.size() != proposals.size()) {
    throw ValidationError("respond: expected N (N - 1) proposals and acceptance slots");
  }
  double base = 0.0;
  double w_promise = 0.0;
  double w_request = 0.0;
  if (spec_.kind == PolicyKind::kLinear) {
    obs.validate();
    base = head(linear_head::kCount, obs);
    const double* tail = spec_.parameters.data() + (linear_head::kCount + 1) * (obs_dim_ + 1);
    w_promise = tail[0];
    w_request = tail[1];
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (i == self) continue;
    const std::size_t k = negotiation::proposal_index(i, self, n);
    const Proposal& p = proposals[k];
    bool accept = false;
    switch (spec_.kind) {
      case PolicyKind::kZero:
        break;
      case PolicyKind::kFixed:
        accept = spec_.parameters[fixed_param::kAccept] >= 0.5;
        break;
      case PolicyKind::kRandom:
        accept = rng.uniform() < 0.5;
        break;
      case PolicyKind::kLinear:
        accept = base + w_promise * p.promise + w_request * p.request > 0.0;
        break;
    }
    acceptances[k] = accept ? 1 : 0;
  }
}

}  // namespace rice
