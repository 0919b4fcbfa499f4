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

#include "qsig/circuit.hpp"

#include <set>
#include <stdexcept>

namespace qsig {

CircuitOp CircuitOp::make_gate(GateKind gate, int wire) {
  CircuitOp op;
  op.kind = Kind::Gate;
  op.gate = gate;
  op.wire = wire;
  return op;
}

CircuitOp CircuitOp::make_cnot(int control, int target) {
  CircuitOp op;
  op.kind = Kind::Cnot;
  op.control = control;
  op.target = target;
  return op;
}

CircuitOp CircuitOp::make_meter(int wire, BasisKind basis, std::string label) {
  CircuitOp op;
  op.kind = Kind::Meter;
  op.wire = wire;
  op.basis = basis;
  op.label = std::move(label);
  return op;
}

const char* to_string(Convention convention) {
  switch (convention) {
    case Convention::GH: return "gh";
    case Convention::GC: return "gc";
    case Convention::XPAR: return "xpar";
  }
  return "?";
}

const char* to_string(BranchState branch) {
  switch (branch) {
    case BranchState::Psi1: return "psi1";
    case BranchState::Psi2: return "psi2";
    case BranchState::Psi3: return "psi3";
    case BranchState::Psi4: return "psi4";
  }
  return "?";
}

std::optional<Convention> convention_from_string(std::string_view s) {
  if (s == "gh") return Convention::GH;
  if (s == "gc") return Convention::GC;
  if (s == "xpar") return Convention::XPAR;
  return std::nullopt;
}

std::optional<BranchState> branch_from_string(std::string_view s) {
  if (s == "psi1") return BranchState::Psi1;
  if (s == "psi2") return BranchState::Psi2;
  if (s == "psi3") return BranchState::Psi3;
  if (s == "psi4") return BranchState::Psi4;
  return std::nullopt;
}

std::vector<std::string> Circuit::meter_labels() const {
  std::vector<std::string> labels;
  for (const CircuitOp& op : ops) {
    if (op.kind == CircuitOp::Kind::Meter) labels.push_back(op.label);
  }
  return labels;
}

std::vector<BasisKind> Circuit::meter_bases() const {
  std::vector<BasisKind> bases;
  for (const CircuitOp& op : ops) {
    if (op.kind == CircuitOp::Kind::Meter) bases.push_back(op.basis);
  }
  return bases;
}

void Circuit::validate() const {
  if (width < 1 || width > StateVector::kMaxQubits) {
    throw std::invalid_argument("circuit width must be in [1, 24]");
  }
  auto require_wire = [&](int w) {
    if (w < 0 || w >= width) {
      throw std::invalid_argument("circuit op touches an out-of-range wire");
    }
  };
  std::set<std::string> labels;
  std::set<int> retired;  // measured wires may not be used again
  auto require_live = [&](int w) {
    if (retired.contains(w)) {
      throw std::invalid_argument("circuit op touches a measured wire");
    }
  };
  for (const CircuitOp& op : ops) {
    switch (op.kind) {
      case CircuitOp::Kind::Gate:
        require_wire(op.wire);
        require_live(op.wire);
        break;
      case CircuitOp::Kind::Cnot:
        require_wire(op.control);
        require_wire(op.target);
        require_live(op.control);
        require_live(op.target);
        if (op.control == op.target) {
          throw std::invalid_argument("cnot control and target must differ");
        }
        break;
      case CircuitOp::Kind::Meter:
        require_wire(op.wire);
        require_live(op.wire);
        if (op.label.empty()) {
          throw std::invalid_argument("meter label must be nonempty");
        }
        if (!labels.insert(op.label).second) {
          throw std::invalid_argument("meter label '" + op.label + "' repeats");
        }
        retired.insert(op.wire);
        break;
    }
  }
}

Circuit build_decoder1(Convention convention) {
  Circuit c;
  c.id = "decoder1";
  c.convention = convention;
  c.width = 2;
  c.ops.push_back(CircuitOp::make_cnot(0, 1));
  if (convention != Convention::XPAR) {
    c.ops.push_back(CircuitOp::make_gate(GateKind::H, 0));
    c.ops.push_back(CircuitOp::make_gate(GateKind::H, 1));
  }
  const BasisKind basis = convention == Convention::GH
                              ? BasisKind::Hadamard
                              : BasisKind::Computational;
  c.ops.push_back(CircuitOp::make_meter(0, basis, "m_a"));
  c.ops.push_back(CircuitOp::make_meter(1, basis, "m_b"));
  return c;
}

Circuit build_decoder2(Convention convention) {
  Circuit c;
  c.id = "decoder2";
  c.convention = convention;
  c.width = 5;
  const bool drawn = convention != Convention::XPAR;
  const BasisKind basis = convention == Convention::GC
                              ? BasisKind::Computational
                              : BasisKind::Hadamard;

  // Round one: entangle the data wire with ancilla 1, read the pair's parity
  // through ancilla 2.
  c.ops.push_back(CircuitOp::make_cnot(0, 1));
  if (drawn) {
    c.ops.push_back(CircuitOp::make_gate(GateKind::H, 0));
    c.ops.push_back(CircuitOp::make_gate(GateKind::H, 1));
  }
  c.ops.push_back(CircuitOp::make_gate(GateKind::H, 2));
  c.ops.push_back(CircuitOp::make_cnot(2, 0));
  c.ops.push_back(CircuitOp::make_cnot(2, 1));
  c.ops.push_back(CircuitOp::make_meter(2, basis, "m1"));

  // Disentangle, flip the data wire's phase, and run round two against
  // ancillas 3 and 4.
  if (drawn) {
    c.ops.push_back(CircuitOp::make_gate(GateKind::H, 0));
    c.ops.push_back(CircuitOp::make_gate(GateKind::H, 1));
  }
  c.ops.push_back(CircuitOp::make_cnot(0, 1));
  c.ops.push_back(CircuitOp::make_gate(GateKind::Z, 0));
  c.ops.push_back(CircuitOp::make_cnot(0, 3));
  if (drawn) {
    c.ops.push_back(CircuitOp::make_gate(GateKind::H, 0));
    c.ops.push_back(CircuitOp::make_gate(GateKind::H, 3));
  }
  c.ops.push_back(CircuitOp::make_gate(GateKind::H, 4));
  c.ops.push_back(CircuitOp::make_cnot(4, 0));
  c.ops.push_back(CircuitOp::make_cnot(4, 3));
  c.ops.push_back(CircuitOp::make_meter(4, basis, "m2"));
  return c;
}

StateVector branch_state(BranchState branch) {
  switch (branch) {
    case BranchState::Psi1: return StateVector::named(NamedState::Ket0);
    case BranchState::Psi2: return StateVector::named(NamedState::Ket1);
    case BranchState::Psi3: return StateVector::named(NamedState::KetPlus);
    case BranchState::Psi4: return StateVector::named(NamedState::KetMinus);
  }
  throw std::invalid_argument("unknown branch state");
}

StateVector branch_input(BranchState branch, int width) {
  if (width < 1) throw std::invalid_argument("width must be positive");
  StateVector s = branch_state(branch);
  if (width > 1) {
    s = tensor(s, StateVector(width - 1));
  }
  return s;
}

std::string serialize(const Circuit& circuit) {
  std::string out = "WIDTH " + std::to_string(circuit.width) + "\n";
  for (const CircuitOp& op : circuit.ops) {
    switch (op.kind) {
      case CircuitOp::Kind::Gate:
        out += std::string(to_string(op.gate)) + " " + std::to_string(op.wire);
        break;
      case CircuitOp::Kind::Cnot:
        out += "CNOT " + std::to_string(op.control) + " " +
               std::to_string(op.target);
        break;
      case CircuitOp::Kind::Meter:
        out += "METER " + std::to_string(op.wire) + " " +
               std::string(to_string(op.basis)) + " " + op.label;
        break;
    }
    out += "\n";
  }
  return out;
}

}  // namespace qsig
