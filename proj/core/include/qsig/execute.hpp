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

#include <map>
#include <span>
#include <string>
#include <vector>

#include "qsig/circuit.hpp"
#include "qsig/density_matrix.hpp"
#include "qsig/distribution.hpp"
#include "qsig/rng.hpp"
#include "qsig/state_vector.hpp"

namespace qsig {

/// One fully resolved measurement history through a circuit.
struct PathRecord {
  /// One label character per meter, in program order.
  std::string outcomes;
  /// Product of the outcome probabilities along the path.
  double probability = 0.0;
  /// State after each op; at meters this is the renormalized collapsed state.
  /// states[i] corresponds to ops[i], so states.size() == ops.size().
  std::vector<StateVector> states;

  const StateVector& final_state() const { return states.back(); }
};

struct BranchTreeResult {
  /// Joint distribution over meter outcome tuples; sums to 1 within
  /// kIdentityTol.
  OutcomeDistribution joint;
  /// Every positive-probability path, in lexicographic outcome order.
  std::vector<PathRecord> paths;
};

/// Exact execution: each meter forks the state into all of its
/// positive-probability outcomes. Paths whose probability falls below
/// kProbabilityFloor are dropped.
BranchTreeResult run_exact(const Circuit& circuit, const StateVector& input);

/// Exact execution on the density-matrix side, written against measure_channel
/// rather than state collapse. Kept independent of run_exact so the two can
/// cross-check each other.
OutcomeDistribution run_exact_density(const Circuit& circuit,
                                      const DensityMatrix& rho);

/// One sampled shot through a circuit.
struct ShotResult {
  std::map<std::string, char> outcomes;  // meter label -> outcome
  std::string key;                       // outcomes in meter order
  StateVector final_state;
};

ShotResult run_sampled(const Circuit& circuit, const StateVector& input,
                       CounterRng& rng);

/// Applies a meter-free op sequence to a density matrix.
/// Throws std::invalid_argument if the segment contains a meter.
DensityMatrix evolve_unitary(DensityMatrix rho, std::span<const CircuitOp> ops);

}  // namespace qsig
