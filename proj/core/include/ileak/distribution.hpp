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

#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "ileak/error.hpp"

namespace ileak {

// All probability mass checks use this absolute tolerance.
inline constexpr double kProbTolerance = 1e-9;

// Probability vector over a finite, ordered, uniquely-labeled outcome set.
// Immutable after construction; the constructor validates the invariants
// (mass sums to 1 within kProbTolerance, no negative entries, labels unique).
class FiniteDistribution {
 public:
  FiniteDistribution(std::vector<std::string> outcomes, std::vector<double> probs);

  static FiniteDistribution uniform(std::vector<std::string> outcomes);
  static FiniteDistribution point_mass(std::vector<std::string> outcomes,
                                       const std::string& at);

  const std::vector<std::string>& outcomes() const { return outcomes_; }
  const std::vector<double>& probs() const { return probs_; }
  std::size_t size() const { return outcomes_.size(); }

  double prob(std::size_t index) const { return probs_.at(index); }
  double prob(const std::string& label) const;
  // Throws kUnknownLabel when the label is not in the outcome set.
  std::size_t index_of(const std::string& label) const;
  bool has_outcome(const std::string& label) const;

  bool same_outcomes(const FiniteDistribution& other) const;
  // Every entry strictly greater than zero.
  bool strictly_positive() const;

  bool operator==(const FiniteDistribution& other) const = default;

 private:
  std::vector<std::string> outcomes_;
  std::vector<double> probs_;
};

// Re-checks the invariants; returns the distribution unchanged on success.
const FiniteDistribution& validate(const FiniteDistribution& dist);

// Subset of an answer space's outcome labels considered impermissible.
// Non-empty by construction; membership against a concrete outcome set is
// checked where the set is used.
class ImpermissibleSet {
 public:
  explicit ImpermissibleSet(std::set<std::string> members);

  const std::set<std::string>& members() const { return members_; }
  bool contains(const std::string& label) const { return members_.count(label) > 0; }

  // Throws kMismatchedSpaces unless every member appears in `outcomes`.
  void check_subset_of(const std::vector<std::string>& outcomes) const;

  // Members of `outcomes` not in this set, in outcome order.
  ImpermissibleSet complement_within(const std::vector<std::string>& outcomes) const;

 private:
  std::set<std::string> members_;
};

// Per-query target sets for the dichotomous security-adversary score.
// Target sets may be empty (a query with no forbidden outputs).
struct SecurityTarget {
  std::map<std::string, std::set<std::string>> target_sets;
};

// posterior(a) = prior(a) * likelihood(a) / sum of products.
// Throws kZeroPrior if the prior has a zero entry, kInvalidParams on a
// negative likelihood, kZeroEvidence if every product is zero.
FiniteDistribution bayes_update(const FiniteDistribution& prior,
                                const std::vector<double>& likelihood);

// Impermissible information leakage of one realized history:
//   sum over a in imp of after(a) * ln(after(a) / before(a)),  0*ln(0/p) = 0.
// Natural log. May be negative for a single history; only the expectation
// over histories is non-negative.
double iil(const FiniteDistribution& before, const FiniteDistribution& after,
           const ImpermissibleSet& imp);

// Partial-sum entropy restricted to imp: -sum over a in imp of p(a)*ln p(a),
// with 0*ln 0 = 0. Natural log.
double impermissible_entropy(const FiniteDistribution& dist,
                             const ImpermissibleSet& imp);

// Shannon entropy in nats; 0*ln 0 = 0.
double shannon_entropy(const FiniteDistribution& dist);

// 1 iff the output label is in the query's target set; throws kUnknownQuery
// if the query is not present in the target map.
int security_score(const SecurityTarget& target, const std::string& query,
                   const std::string& output);

// nats -> bits conversion for report-level output.
double nats_to_bits(double nats);

namespace detail {

// Compensated (Kahan) accumulator; keeps enumeration sums reproducible and
// accurate over up to ~1e6 terms.
class KahanSum {
 public:
  void add(double value) {
    double y = value - compensation_;
    double t = sum_ + y;
    compensation_ = (t - sum_) - y;
    sum_ = t;
  }
  double value() const { return sum_; }

 private:
  double sum_ = 0.0;
  double compensation_ = 0.0;
};

}  // namespace detail
}  // namespace ileak
