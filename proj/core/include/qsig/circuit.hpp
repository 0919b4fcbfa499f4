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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsig/state_vector.hpp"

namespace qsig {

/// One circuit instruction: a single-qubit gate, a CNOT, or a meter.
struct CircuitOp {
  enum class Kind { Gate, Cnot, Meter };

  Kind kind = Kind::Gate;
  GateKind gate = GateKind::I;                 // Gate
  int wire = 0;                                // Gate / Meter
  int control = 0;                             // Cnot
  int target = 0;                              // Cnot
  BasisKind basis = BasisKind::Computational;  // Meter
  std::string label;                           // Meter

  static CircuitOp make_gate(GateKind gate, int wire);
  static CircuitOp make_cnot(int control, int target);
  static CircuitOp make_meter(int wire, BasisKind basis, std::string label);
};

/// How a decoder diagram is turned into executable ops.
///
/// The diagrams draw Hadamard boxes directly in front of meters, which admits
/// more than one self-consistent reading; each enumerator fixes one, and the
/// audit reports all of them side by side.
enum class Convention {
  /// Every drawn gate applied; meters read in the Hadamard basis.
  GH,
  /// Every drawn gate applied; meters read in the computational basis.
  GC,
  /// Parity reading. Hadamards drawn on data wires are dropped as basis
  /// annotations; the Hadamards preparing a measured parity ancilla are kept,
  /// so that ancilla records the X(x)X parity of its targets through phase
  /// kickback. decoder2 meters read in the Hadamard basis, decoder1 meters in
  /// the computational basis.
  XPAR,
};

/// The four states Bob's qubit can collapse to: |0>, |1>, |+>, |->.
enum class BranchState { Psi1, Psi2, Psi3, Psi4 };

inline constexpr BranchState kAllBranches[] = {
    BranchState::Psi1, BranchState::Psi2, BranchState::Psi3, BranchState::Psi4};
inline constexpr Convention kAllConventions[] = {Convention::GH, Convention::GC,
                                                 Convention::XPAR};

const char* to_string(Convention convention);
const char* to_string(BranchState branch);
std::optional<Convention> convention_from_string(std::string_view s);
std::optional<BranchState> branch_from_string(std::string_view s);

struct Circuit {
  std::string id;  // "decoder1" / "decoder2"
  Convention convention = Convention::GH;
  int width = 0;
  std::vector<CircuitOp> ops;

  /// Meter labels in program order.
  std::vector<std::string> meter_labels() const;

  /// Meter bases in program order.
  std::vector<BasisKind> meter_bases() const;

  /// Throws std::invalid_argument when an op touches an out-of-range wire, a
  /// meter label repeats, or a measured wire is used again afterwards
  /// (measured wires retire).
  void validate() const;
};

/// Two-wire decoder: CNOT from the data wire onto one fresh ancilla, then a
/// meter on each wire. Meter labels are "m_a" (data wire) and "m_b".
Circuit build_decoder1(Convention convention);

/// Five-wire decoder: two entangle/disentangle rounds on the data wire, each
/// followed by a parity-ancilla readout ("m1" on wire 2, "m2" on wire 4),
/// with a Z between the rounds.
Circuit build_decoder2(Convention convention);

/// The single-qubit state a branch denotes.
StateVector branch_state(BranchState branch);

/// Branch state on wire 0, |0> on every other wire.
StateVector branch_input(BranchState branch, int width);

/// Line-oriented text form, one op per line (`CNOT 0 1`, `H 0`,
/// `METER 2 HAD m1`), preceded by a `WIDTH n` line.
std::string serialize(const Circuit& circuit);

}  // namespace qsig
