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

#include "qsig/execute.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

namespace qsig {

namespace {

void require_input(const Circuit& circuit, int num_qubits) {
  circuit.validate();
  if (num_qubits != circuit.width) {
    throw std::invalid_argument("input width must match the circuit width");
  }
}

}  // namespace

BranchTreeResult run_exact(const Circuit& circuit, const StateVector& input) {
  require_input(circuit, input.num_qubits());
  BranchTreeResult result;

  struct Frame {
    StateVector state;
    double probability;
    std::string outcomes;
    std::vector<StateVector> states;
  };

  std::function<void(std::size_t, Frame)> step = [&](std::size_t i, Frame f) {
    if (i == circuit.ops.size()) {
      result.joint.add(f.outcomes, f.probability);
      result.paths.push_back(PathRecord{std::move(f.outcomes), f.probability,
                                        std::move(f.states)});
      return;
    }
    const CircuitOp& op = circuit.ops[i];
    switch (op.kind) {
      case CircuitOp::Kind::Gate:
        f.state.apply(op.gate, op.wire);
        f.states.push_back(f.state);
        step(i + 1, std::move(f));
        return;
      case CircuitOp::Kind::Cnot:
        f.state.apply_cnot(op.control, op.target);
        f.states.push_back(f.state);
        step(i + 1, std::move(f));
        return;
      case CircuitOp::Kind::Meter: {
        const OutcomeDistribution dist =
            exact_distribution(f.state, {op.wire}, op.basis);
        // Entries iterate in label order, so paths come out lexicographic.
        for (const auto& [label, p] : dist.entries()) {
          auto [prob, collapsed] =
              project_measurement(f.state, {op.wire}, op.basis, label);
          Frame child{std::move(collapsed), f.probability * prob,
                      f.outcomes + label, f.states};
          child.states.push_back(child.state);
          step(i + 1, std::move(child));
        }
        return;
      }
    }
  };

  Frame root{input, 1.0, "", {}};
  root.states.reserve(circuit.ops.size());
  step(0, std::move(root));
  return result;
}

OutcomeDistribution run_exact_density(const Circuit& circuit,
                                      const DensityMatrix& rho) {
  require_input(circuit, rho.num_qubits());
  OutcomeDistribution joint;

  struct Frame {
    DensityMatrix rho;
    double probability;
    std::string outcomes;
  };

  std::function<void(std::size_t, Frame)> step = [&](std::size_t i, Frame f) {
    if (i == circuit.ops.size()) {
      joint.add(f.outcomes, f.probability);
      return;
    }
    const CircuitOp& op = circuit.ops[i];
    switch (op.kind) {
      case CircuitOp::Kind::Gate:
        f.rho.apply(op.gate, op.wire);
        step(i + 1, std::move(f));
        return;
      case CircuitOp::Kind::Cnot:
        f.rho.apply_cnot(op.control, op.target);
        step(i + 1, std::move(f));
        return;
      case CircuitOp::Kind::Meter: {
        MeasureChannelResult channel =
            measure_channel(f.rho, {op.wire}, op.basis);
        for (auto& [label, post] : channel.post_states) {
          const double p = channel.distribution.probability(label);
          step(i + 1, Frame{std::move(post), f.probability * p,
                            f.outcomes + label});
        }
        return;
      }
    }
  };

  step(0, Frame{rho, 1.0, ""});
  return joint;
}

ShotResult run_sampled(const Circuit& circuit, const StateVector& input,
                       CounterRng& rng) {
  require_input(circuit, input.num_qubits());
  StateVector state = input;
  ShotResult shot{{}, "", state};
  for (const CircuitOp& op : circuit.ops) {
    switch (op.kind) {
      case CircuitOp::Kind::Gate:
        state.apply(op.gate, op.wire);
        break;
      case CircuitOp::Kind::Cnot:
        state.apply_cnot(op.control, op.target);
        break;
      case CircuitOp::Kind::Meter: {
        auto [labels, collapsed] =
            sample_measurement(state, {op.wire}, op.basis, rng);
        state = std::move(collapsed);
        shot.outcomes[op.label] = labels[0];
        shot.key += labels;
        break;
      }
    }
  }
  shot.final_state = std::move(state);
  return shot;
}

DensityMatrix evolve_unitary(DensityMatrix rho,
                             std::span<const CircuitOp> ops) {
  for (const CircuitOp& op : ops) {
    switch (op.kind) {
      case CircuitOp::Kind::Gate:
        rho.apply(op.gate, op.wire);
        break;
      case CircuitOp::Kind::Cnot:
        rho.apply_cnot(op.control, op.target);
        break;
      case CircuitOp::Kind::Meter:
        throw std::invalid_argument("unitary segment may not contain meters");
    }
  }
  return rho;
}

}  // namespace qsig
