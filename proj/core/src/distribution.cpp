// Copyright 2026 The ileak Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ileak/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace ileak {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNonNormalized: return "NonNormalized";
    case ErrorCode::kNegativeProb: return "NegativeProb";
    case ErrorCode::kDuplicateLabel: return "DuplicateLabel";
    case ErrorCode::kZeroEvidence: return "ZeroEvidence";
    case ErrorCode::kZeroPrior: return "ZeroPrior";
    case ErrorCode::kMismatchedSpaces: return "MismatchedSpaces";
    case ErrorCode::kUnknownQuery: return "UnknownQuery";
    case ErrorCode::kUnknownLabel: return "UnknownLabel";
    case ErrorCode::kEnumerationTooLarge: return "EnumerationTooLarge";
    case ErrorCode::kSafetySetAssumptionViolated: return "SafetySetAssumptionViolated";
    case ErrorCode::kInvalidParams: return "InvalidParams";
    case ErrorCode::kZeroBaselineUtility: return "ZeroBaselineUtility";
    case ErrorCode::kParseFailure: return "ParseFailure";
    case ErrorCode::kBackendUnavailable: return "BackendUnavailable";
    case ErrorCode::kNonFiniteLogprob: return "NonFiniteLogprob";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kInsufficientData: return "InsufficientData";
    case ErrorCode::kEmptyInput: return "EmptyInput";
    case ErrorCode::kConfigError: return "ConfigError";
    case ErrorCode::kIoError: return "IoError";
  }
  return "Unknown";
}

namespace {

void check_invariants(const std::vector<std::string>& outcomes,
                      const std::vector<double>& probs) {
  if (outcomes.size() != probs.size()) {
    throw Error(ErrorCode::kInvalidParams,
                "outcome and probability lists differ in length");
  }
  if (outcomes.empty()) {
    throw Error(ErrorCode::kInvalidParams, "empty outcome set");
  }
  std::unordered_set<std::string> seen;
  for (const auto& label : outcomes) {
    if (!seen.insert(label).second) {
      throw Error(ErrorCode::kDuplicateLabel, "duplicate outcome label '" + label + "'");
    }
  }
  detail::KahanSum total;
  for (double p : probs) {
    if (!(p >= 0.0)) {  // catches negatives and NaN
      throw Error(ErrorCode::kNegativeProb,
                  "probability " + std::to_string(p) + " is negative or non-finite");
    }
    total.add(p);
  }
  if (std::abs(total.value() - 1.0) > kProbTolerance) {
    throw Error(ErrorCode::kNonNormalized,
                "probabilities sum to " + std::to_string(total.value()));
  }
}

}  // namespace

FiniteDistribution::FiniteDistribution(std::vector<std::string> outcomes,
                                       std::vector<double> probs)
    : outcomes_(std::move(outcomes)), probs_(std::move(probs)) {
  check_invariants(outcomes_, probs_);
}

FiniteDistribution FiniteDistribution::uniform(std::vector<std::string> outcomes) {
  std::vector<double> probs(outcomes.size(),
                            outcomes.empty() ? 0.0 : 1.0 / outcomes.size());
  return FiniteDistribution(std::move(outcomes), std::move(probs));
}

FiniteDistribution FiniteDistribution::point_mass(std::vector<std::string> outcomes,
                                                  const std::string& at) {
  std::vector<double> probs(outcomes.size(), 0.0);
  auto it = std::find(outcomes.begin(), outcomes.end(), at);
  if (it == outcomes.end()) {
    throw Error(ErrorCode::kUnknownLabel, "point mass label '" + at + "' not in outcomes");
  }
  probs[static_cast<std::size_t>(it - outcomes.begin())] = 1.0;
  return FiniteDistribution(std::move(outcomes), std::move(probs));
}

double FiniteDistribution::prob(const std::string& label) const {
  return probs_[index_of(label)];
}

std::size_t FiniteDistribution::index_of(const std::string& label) const {
  auto it = std::find(outcomes_.begin(), outcomes_.end(), label);
  if (it == outcomes_.end()) {
    throw Error(ErrorCode::kUnknownLabel, "label '" + label + "' not in outcome set");
  }
  return static_cast<std::size_t>(it - outcomes_.begin());
}

bool FiniteDistribution::has_outcome(const std::string& label) const {
  return std::find(outcomes_.begin(), outcomes_.end(), label) != outcomes_.end();
}

bool FiniteDistribution::same_outcomes(const FiniteDistribution& other) const {
  return outcomes_ == other.outcomes_;
}

bool FiniteDistribution::strictly_positive() const {
  return std::all_of(probs_.begin(), probs_.end(), [](double p) { return p > 0.0; });
}

const FiniteDistribution& validate(const FiniteDistribution& dist) {
  check_invariants(dist.outcomes(), dist.probs());
  return dist;
}

ImpermissibleSet::ImpermissibleSet(std::set<std::string> members)
    : members_(std::move(members)) {
  if (members_.empty()) {
    throw Error(ErrorCode::kInvalidParams, "impermissible set must be non-empty");
  }
}

void ImpermissibleSet::check_subset_of(const std::vector<std::string>& outcomes) const {
  for (const auto& member : members_) {
    if (std::find(outcomes.begin(), outcomes.end(), member) == outcomes.end()) {
      throw Error(ErrorCode::kMismatchedSpaces,
                  "impermissible member '" + member + "' not in outcome set");
    }
  }
}

ImpermissibleSet ImpermissibleSet::complement_within(
    const std::vector<std::string>& outcomes) const {
  check_subset_of(outcomes);
  std::set<std::string> rest;
  for (const auto& label : outcomes) {
    if (!contains(label)) rest.insert(label);
  }
  return ImpermissibleSet(std::move(rest));
}

FiniteDistribution bayes_update(const FiniteDistribution& prior,
                                const std::vector<double>& likelihood) {
  if (likelihood.size() != prior.size()) {
    throw Error(ErrorCode::kMismatchedSpaces,
                "likelihood length does not match prior outcome count");
  }
  if (!prior.strictly_positive()) {
    throw Error(ErrorCode::kZeroPrior, "prior has a zero entry");
  }
  std::vector<double> posterior(prior.size());
  detail::KahanSum evidence;
  for (std::size_t i = 0; i < prior.size(); ++i) {
    if (!(likelihood[i] >= 0.0)) {
      throw Error(ErrorCode::kInvalidParams, "likelihood value must be >= 0");
    }
    posterior[i] = prior.prob(i) * likelihood[i];
    evidence.add(posterior[i]);
  }
  double z = evidence.value();
  if (z <= 0.0) {
    throw Error(ErrorCode::kZeroEvidence, "all prior*likelihood products are zero");
  }
  for (double& p : posterior) p /= z;
  return FiniteDistribution(prior.outcomes(), std::move(posterior));
}

double iil(const FiniteDistribution& before, const FiniteDistribution& after,
           const ImpermissibleSet& imp) {
  if (!before.same_outcomes(after)) {
    throw Error(ErrorCode::kMismatchedSpaces,
                "before/after distributions have different outcome sets");
  }
  imp.check_subset_of(before.outcomes());
  detail::KahanSum sum;
  for (std::size_t i = 0; i < before.size(); ++i) {
    if (!imp.contains(before.outcomes()[i])) continue;
    double a = after.prob(i);
    if (a == 0.0) continue;  // 0*ln(0/p) = 0
    double b = before.prob(i);
    if (b <= 0.0) {
      throw Error(ErrorCode::kZeroPrior,
                  "zero prior mass on impermissible member '" + before.outcomes()[i] + "'");
    }
    sum.add(a * std::log(a / b));
  }
  return sum.value();
}

double impermissible_entropy(const FiniteDistribution& dist,
                             const ImpermissibleSet& imp) {
  imp.check_subset_of(dist.outcomes());
  detail::KahanSum sum;
  for (std::size_t i = 0; i < dist.size(); ++i) {
    if (!imp.contains(dist.outcomes()[i])) continue;
    double p = dist.prob(i);
    if (p > 0.0) sum.add(-p * std::log(p));
  }
  return sum.value();
}

double shannon_entropy(const FiniteDistribution& dist) {
  detail::KahanSum sum;
  for (double p : dist.probs()) {
    if (p > 0.0) sum.add(-p * std::log(p));
  }
  return sum.value();
}

int security_score(const SecurityTarget& target, const std::string& query,
                   const std::string& output) {
  auto it = target.target_sets.find(query);
  if (it == target.target_sets.end()) {
    throw Error(ErrorCode::kUnknownQuery, "query '" + query + "' has no target set");
  }
  return it->second.count(output) > 0 ? 1 : 0;
}

double nats_to_bits(double nats) { return nats / std::log(2.0); }

}  // namespace ileak
