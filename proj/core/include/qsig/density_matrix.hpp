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
#include <string>
#include <vector>

#include "qsig/distribution.hpp"
#include "qsig/state_vector.hpp"

namespace qsig {

/// Weighted mixture of pure states of equal width.
struct Ensemble {
  struct Member {
    double probability;
    StateVector state;
  };
  std::vector<Member> members;

  /// Throws std::invalid_argument on empty/mismatched members or weights that
  /// are negative or do not sum to 1 within kIdentityTol.
  void validate() const;
};

/// The uniform {|0>, |1>} preparation.
Ensemble ensemble_s1();

/// The uniform {|+>, |->} preparation.
Ensemble ensemble_s2();

/// Dense Hermitian trace-one operator on n qubits, row-major.
///
/// This is the mixed-state side of the library and serves as the exact
/// cross-check for the pure-state path, so it favors directness over speed;
/// n is capped at kMaxQubits. Wire/index conventions match StateVector.
class DensityMatrix {
 public:
  static constexpr int kMaxQubits = 12;

  /// Zero matrix (a building block for accumulation, not a valid state).
  explicit DensityMatrix(int num_qubits);

  /// |psi><psi|.
  static DensityMatrix from_state(const StateVector& psi);

  /// sum_i p_i |psi_i><psi_i|. Validates the ensemble.
  static DensityMatrix from_ensemble(const Ensemble& ensemble);

  /// I / 2^n.
  static DensityMatrix maximally_mixed(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return dim_; }

  Amplitude entry(std::size_t row, std::size_t col) const;
  Amplitude& at(std::size_t row, std::size_t col);

  double trace_real() const;
  bool is_hermitian(double tol = kIdentityTol) const;

  /// this += weight * other.
  void accumulate(const DensityMatrix& other, double weight);

  /// rho -> U rho U+ for a single-qubit gate.
  void apply(GateKind gate, int wire);

  /// rho -> U rho U+ for a controlled-NOT.
  void apply_cnot(int control, int target);

  /// Throws InvariantViolation unless Hermitian within kIdentityTol, trace 1
  /// within kIdentityTol, and eigenvalues >= -1e-10.
  void validate() const;

  std::size_t wire_mask(int wire) const;

 private:
  void require_wire(int wire) const;

  int num_qubits_;
  std::size_t dim_;
  std::vector<Amplitude> a_;
};

/// Traces out every wire not listed in keep. Kept wires retain their relative
/// order. keep must be nonempty and duplicate-free.
DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep);

double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b);

struct MeasureChannelResult {
  OutcomeDistribution distribution;
  /// Post-measurement states on the full register, keyed by outcome labels.
  /// Outcomes with probability below kProbabilityFloor are omitted.
  std::map<std::string, DensityMatrix> post_states;
};

/// Projective measurement of the listed wires as a channel. Hadamard-basis
/// measurement rotates by H, projects, and rotates back, mirroring the
/// pure-state semantics.
MeasureChannelResult measure_channel(const DensityMatrix& rho,
                                     const std::vector<int>& wires,
                                     BasisKind basis);

/// Eigenvalues in ascending order, via a cyclic Jacobi solve on the real
/// symmetric embedding [[Re, -Im], [Im, Re]]. Intended for validity checks on
/// small matrices, not for performance.
std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho);

}  // namespace qsig
