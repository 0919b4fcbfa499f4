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

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qsig/distribution.hpp"
#include "qsig/rng.hpp"

namespace qsig {

using Amplitude = std::complex<double>;

inline constexpr double kInvSqrt2 = 0.70710678118654752440084436210485;

// Comparison tolerances used throughout the library: identities that hold
// exactly in the arithmetic are asserted to kIdentityTol, directly
// constructed constants to kConstantTol.
inline constexpr double kIdentityTol = 1e-12;
inline constexpr double kConstantTol = 1e-15;

// Probability below which a measurement outcome is treated as absent.
inline constexpr double kProbabilityFloor = 1e-14;

enum class GateKind { H, X, Z, I };

enum class BasisKind { Computational, Hadamard };

/// Frequently used one- and two-qubit states.
enum class NamedState { Ket0, Ket1, KetPlus, KetMinus, PhiPlus, PhiMinus, PsiPlus };

const char* to_string(GateKind gate);
const char* to_string(BasisKind basis);

/// Row-major 2x2 unitary of a single-qubit gate.
std::array<Amplitude, 4> gate_matrix(GateKind gate);

/// Outcome label character: '0'/'1' for the computational basis,
/// '+'/'-' for the Hadamard basis.
char outcome_label(BasisKind basis, int bit);

/// Inverse of outcome_label. Accepts '0', '1', '+', '-'.
int label_bit(char label);

/// Dense amplitude vector over the 2^n computational basis states.
///
/// Wire 0 is the top wire of a circuit diagram and the most significant bit
/// of the basis-state index: |q0 q1 ... q(n-1)> lives at index
/// q0*2^(n-1) + q1*2^(n-2) + ... + q(n-1).
///
/// Gate application mutates the amplitude buffer in place with strided
/// two-point kernels; no 2^n x 2^n matrix is ever formed. Results are
/// bitwise-deterministic for a fixed input.
class StateVector {
 public:
  static constexpr int kMaxQubits = 24;

  /// |0...0> on num_qubits wires. Throws std::invalid_argument outside
  /// [1, kMaxQubits].
  explicit StateVector(int num_qubits);

  /// Basis state |bits>, one '0'/'1' character per wire, wire 0 first.
  static StateVector basis_state(int num_qubits, std::string_view bits);

  static StateVector named(NamedState which);

  /// Wraps an explicit amplitude vector; amps.size() must be 2^num_qubits.
  /// No normalization is imposed.
  static StateVector from_amplitudes(int num_qubits, std::vector<Amplitude> amps);

  int num_qubits() const { return num_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Amplitude> amplitudes() const { return amps_; }
  Amplitude amplitude(std::size_t index) const;

  /// Applies a single-qubit gate to one wire.
  void apply(GateKind gate, int wire);

  /// Flips the target bit of every basis state whose control bit is set.
  void apply_cnot(int control, int target);

  double norm_squared() const;

  /// Throws InvariantViolation("state-norm") when the norm has drifted from 1
  /// by more than tol.
  void check_norm(double tol = kIdentityTol) const;

  /// Index mask selecting the given wire's bit.
  std::size_t wire_mask(int wire) const;

 private:
  void apply_one_qubit(const std::array<Amplitude, 4>& u, int wire);
  void require_wire(int wire) const;

  int num_qubits_;
  std::vector<Amplitude> amps_;
};

/// Kronecker product; a occupies the higher-order wires of the result.
StateVector tensor(const StateVector& a, const StateVector& b);

/// <a|b>, conjugate-linear in a. Dimensions must agree.
Amplitude inner_product(const StateVector& a, const StateVector& b);

double max_abs_diff(const StateVector& a, const StateVector& b);

/// True when a and b agree elementwise after factoring out one global phase.
bool equal_up_to_phase(const StateVector& a, const StateVector& b,
                       double tol = kIdentityTol);

/// Born-rule distribution of a joint measurement of the listed wires,
/// marginalizing all others. `wires` fixes label order within each key.
/// Outcomes with probability below kProbabilityFloor are omitted.
OutcomeDistribution exact_distribution(const StateVector& state,
                                       const std::vector<int>& wires,
                                       BasisKind basis);

/// Projects the state onto one joint outcome of the listed wires and
/// renormalizes. `labels` holds one label character per wire. Returns the
/// outcome probability together with the collapsed state; the collapsed state
/// is meaningless when the probability is below kProbabilityFloor.
///
/// A Hadamard-basis measurement is realized as rotate-by-H, project in the
/// computational basis, rotate back, so collapsed wires end in |+> or |->.
std::pair<double, StateVector> project_measurement(const StateVector& state,
                                                   const std::vector<int>& wires,
                                                   BasisKind basis,
                                                   const std::string& labels);

/// Samples one joint outcome and returns its labels with the collapsed state.
std::pair<std::string, StateVector> sample_measurement(
    const StateVector& state, const std::vector<int>& wires, BasisKind basis,
    CounterRng& rng);

}  // namespace qsig
