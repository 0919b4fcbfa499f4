// Copyright 2026 The qsig authors
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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qsig/density_matrix.hpp"
#include "qsig/execute.hpp"
#include "qsig/protocol.hpp"

namespace qsig {

/// Which exact engine computes a distribution. The two are implemented
/// independently and cross-checked against each other.
enum class PathKind { StateVector, Density };

/// Exact meter-outcome distribution per branch for one decoder circuit under
/// one reading convention.
struct BranchTable {
  std::string circuit_id;
  Convention convention = Convention::GH;
  std::map<BranchState, OutcomeDistribution> rows;
};

BranchTable branch_table(int decoder, Convention convention,
                         PathKind path = PathKind::StateVector);

enum class Verdict { Match, Mismatch };

const char* to_string(Verdict verdict);

struct MatchEntry {
  BranchState branch = BranchState::Psi1;
  Verdict verdict = Verdict::Mismatch;
  /// Claimed outcome keys, translated to the meter alphabet of the simulated
  /// table ('+'/'-' read as '0'/'1' at computational meters).
  std::vector<std::string> claimed;
  OutcomeDistribution simulated;
  double mass_on_claimed = 0.0;
  double max_prob_outside_claimed = 0.0;
};

/// Match verdict per branch: Match iff the simulated distribution puts mass
/// >= 1 - 1e-12 on the claimed outcome set.
struct MatchReport {
  std::string circuit_id;
  Convention convention = Convention::GH;
  std::string provenance;
  std::vector<MatchEntry> entries;
};

MatchReport compare_claims(const BranchTable& table, const ClaimTable& claims);

/// Bob's exact joint meter distribution for one sent bit: the equal-weight
/// branch mixture, raised to a k-fold product for decoder 1.
OutcomeDistribution sent_bit_distribution(int decoder, Convention convention,
                                          int k, int sent, PathKind path);

/// Exact distribution of the decoded bit (keys "0"/"1") for one sent bit.
OutcomeDistribution decoded_distribution(int decoder, Convention convention,
                                         int k, int sent, PathKind path);

/// I(S;D) in bits for S uniform over {0,1} with P(D|S=s) given by d0/d1.
/// 0 log 0 reads as 0.
double mutual_information_bits(const OutcomeDistribution& d0,
                               const OutcomeDistribution& d1);

struct SignalingReport {
  std::string circuit_id;
  Convention convention = Convention::GH;
  int decoder = 1;
  int pairs_per_bit = 1;
  double tv_exact = 0.0;
  double mi_exact = 0.0;
  // Filled when shots > 0.
  bool has_empirical = false;
  std::uint64_t shots = 0;
  double tv_empirical = 0.0;
  double mi_empirical = 0.0;
  /// Sampling-noise allowance for tv_empirical: 3*sqrt(support/shots).
  double tv_bound = 0.0;
  bool within_bound = true;
};

/// Exact (and, with shots > 0, sampled) comparison of Bob's outcome
/// distributions between sent=0 and sent=1. k is the pair count for
/// decoder 1 and is ignored by decoder 2.
SignalingReport signaling_report(int decoder, Convention convention, int k,
                                 std::uint64_t shots = 0,
                                 std::uint64_t seed = 0, int threads = 1);

struct ReducedStateReport {
  DensityMatrix s1;
  DensityMatrix s2;
  double max_abs_diff = 0.0;
};

/// Bob's reduced state under Alice's two preparations; both equal I/2.
ReducedStateReport reduced_state_report();

/// Failure probability of unambiguous discrimination between two states:
/// |<a|b>|. Inputs must be normalized and of equal dimension.
double idp_failure_probability(const StateVector& a, const StateVector& b);

/// True when the states are linearly independent: |det Gram| > 1e-10.
bool linearly_independent(const std::vector<StateVector>& states);

}  // namespace qsig
