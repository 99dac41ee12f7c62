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
#include <string>
#include <vector>

#include "ileak/distribution.hpp"

namespace ileak {

struct World;

enum class MechanismKind { kIdentity, kRandomizedResponse, kCustomTable };

const char* mechanism_kind_name(MechanismKind kind);

// Censorship mechanism: a transform from (query, response distribution) to a
// response distribution.
//
// randomized-response passes the victim response with probability t and
// otherwise returns a uniform safe string from safe_set. custom-table pushes
// the response distribution through a per-label channel; all rows must share
// one outcome set and each row is itself a distribution.
struct Mechanism {
  MechanismKind kind = MechanismKind::kIdentity;
  double t = 1.0;
  std::vector<std::string> safe_set;
  std::map<std::string, FiniteDistribution> table;

  static Mechanism identity();
  static Mechanism randomized_response(double t, std::vector<std::string> safe_set);
  static Mechanism custom_table(std::map<std::string, FiniteDistribution> rows);
};

// Output mass under randomized response:
//   t * resp(y)                 for y outside the safe set
//   t * resp(s) + (1-t)/|S|     for each safe string s
// Safe strings missing from the response alphabet are appended with zero
// victim mass. Identity returns the input unchanged.
FiniteDistribution apply(const Mechanism& mech, const std::string& query,
                         const FiniteDistribution& resp);

struct WorstCaseResult {
  double value = 0.0;
  std::vector<std::string> queries;  // argmax tuple, lexicographically first
  std::size_t prior_index = 0;
  std::size_t witness_count = 0;     // cells within 1e-12 of the max
};

// Exhaustive sup of exp_iil over all priors in the world's family and all
// k-tuples of queries (with repetition). Ties keep the first cell in
// (prior index, lexicographic tuple) order.
WorstCaseResult worst_case_exp_iil(const World& world, const Mechanism& mech,
                                   std::size_t k, bool parallel = false);

struct CalibrationResult {
  double t_epsilon = 1.0;
  double worst_single_leakage = 0.0;  // L*, identity mechanism, k=1
  WorstCaseResult witness;
};

// Theorem-style calibration: t = min(eps / L*, 1), with t = 1 when L* = 0.
// Requires a non-empty safe set whose strings are uninformative under the
// world's response model (checked; throws kSafetySetAssumptionViolated).
CalibrationResult calibrate_t_epsilon(const World& world, double eps);

// Throws kSafetySetAssumptionViolated if any safe string's victim probability
// depends on the hidden answer (or latent) for some query.
void check_safe_set_assumption(const World& world);

// k*eps1 + sum over j in [2,k] of the conditional dependency term, where eps1
// is the mechanism's recomputed single-interaction worst case.
double composition_bound_rhs(const World& world, const Mechanism& mech,
                             const std::vector<std::string>& queries,
                             const FiniteDistribution& prior);

}  // namespace ileak
