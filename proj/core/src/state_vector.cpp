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

#include "qsig/state_vector.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsig/errors.hpp"

namespace qsig {

const char* to_string(GateKind gate) {
  switch (gate) {
    case GateKind::H: return "H";
    case GateKind::X: return "X";
    case GateKind::Z: return "Z";
    case GateKind::I: return "I";
  }
  return "?";
}

const char* to_string(BasisKind basis) {
  return basis == BasisKind::Computational ? "COMP" : "HAD";
}

std::array<Amplitude, 4> gate_matrix(GateKind gate) {
  switch (gate) {
    case GateKind::H:
      return {Amplitude{kInvSqrt2}, Amplitude{kInvSqrt2}, Amplitude{kInvSqrt2},
              Amplitude{-kInvSqrt2}};
    case GateKind::X:
      return {Amplitude{0.0}, Amplitude{1.0}, Amplitude{1.0}, Amplitude{0.0}};
    case GateKind::Z:
      return {Amplitude{1.0}, Amplitude{0.0}, Amplitude{0.0}, Amplitude{-1.0}};
    case GateKind::I:
      return {Amplitude{1.0}, Amplitude{0.0}, Amplitude{0.0}, Amplitude{1.0}};
  }
  throw std::invalid_argument("unknown gate kind");
}

char outcome_label(BasisKind basis, int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");
  if (basis == BasisKind::Computational) return bit == 0 ? '0' : '1';
  return bit == 0 ? '+' : '-';
}

int label_bit(char label) {
  switch (label) {
    case '0':
    case '+':
      return 0;
    case '1':
    case '-':
      return 1;
  }
  throw std::invalid_argument(std::string("unknown outcome label '") + label +
                              "'");
}

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("qubit count must be in [1, 24]");
  }
  amps_.assign(std::size_t{1} << num_qubits, Amplitude{0.0});
  amps_[0] = Amplitude{1.0};
}

StateVector StateVector::basis_state(int num_qubits, std::string_view bits) {
  StateVector s(num_qubits);
  if (static_cast<int>(bits.size()) != num_qubits) {
    throw std::invalid_argument("bit string length must equal the qubit count");
  }
  std::size_t index = 0;
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
    index = (index << 1) | static_cast<std::size_t>(c - '0');
  }
  s.amps_[0] = Amplitude{0.0};
  s.amps_[index] = Amplitude{1.0};
  return s;
}

StateVector StateVector::from_amplitudes(int num_qubits,
                                         std::vector<Amplitude> amps) {
  StateVector s(num_qubits);
  if (amps.size() != s.dim()) {
    throw std::invalid_argument("amplitude count must equal 2^num_qubits");
  }
  s.amps_ = std::move(amps);
  return s;
}

StateVector StateVector::named(NamedState which) {
  switch (which) {
    case NamedState::Ket0:
      return basis_state(1, "0");
    case NamedState::Ket1:
      return basis_state(1, "1");
    case NamedState::KetPlus:
      return from_amplitudes(1, {Amplitude{kInvSqrt2}, Amplitude{kInvSqrt2}});
    case NamedState::KetMinus:
      return from_amplitudes(1, {Amplitude{kInvSqrt2}, Amplitude{-kInvSqrt2}});
    case NamedState::PhiPlus:
      return from_amplitudes(2, {Amplitude{kInvSqrt2}, Amplitude{0.0},
                                 Amplitude{0.0}, Amplitude{kInvSqrt2}});
    case NamedState::PhiMinus:
      return from_amplitudes(2, {Amplitude{kInvSqrt2}, Amplitude{0.0},
                                 Amplitude{0.0}, Amplitude{-kInvSqrt2}});
    case NamedState::PsiPlus:
      return from_amplitudes(2, {Amplitude{0.0}, Amplitude{kInvSqrt2},
                                 Amplitude{kInvSqrt2}, Amplitude{0.0}});
  }
  throw std::invalid_argument("unknown named state");
}

Amplitude StateVector::amplitude(std::size_t index) const {
  if (index >= amps_.size()) {
    throw std::out_of_range("amplitude index out of range");
  }
  return amps_[index];
}

std::size_t StateVector::wire_mask(int wire) const {
  require_wire(wire);
  return std::size_t{1} << (num_qubits_ - 1 - wire);
}

void StateVector::require_wire(int wire) const {
  if (wire < 0 || wire >= num_qubits_) {
    throw std::out_of_range("wire index out of range");
  }
}

void StateVector::apply(GateKind gate, int wire) {
  require_wire(wire);
  if (gate == GateKind::I) return;
  apply_one_qubit(gate_matrix(gate), wire);
}

void StateVector::apply_one_qubit(const std::array<Amplitude, 4>& u, int wire) {
  // Amplitudes pair up across the wire's index bit; visit each pair once,
  // lower index first.
  const std::size_t mask = wire_mask(wire);
  const std::size_t dim = amps_.size();
  for (std::size_t block = 0; block < dim; block += 2 * mask) {
    for (std::size_t low = block; low < block + mask; ++low) {
      const Amplitude a = amps_[low];
      const Amplitude b = amps_[low | mask];
      amps_[low] = u[0] * a + u[1] * b;
      amps_[low | mask] = u[2] * a + u[3] * b;
    }
  }
}

void StateVector::apply_cnot(int control, int target) {
  const std::size_t cmask = wire_mask(control);
  const std::size_t tmask = wire_mask(target);
  if (control == target) {
    throw std::invalid_argument("cnot control and target must differ");
  }
  const std::size_t dim = amps_.size();
  for (std::size_t i = 0; i < dim; ++i) {
    if ((i & cmask) && !(i & tmask)) {
      std::swap(amps_[i], amps_[i | tmask]);
    }
  }
}

double StateVector::norm_squared() const {
  double total = 0.0;
  for (const Amplitude& a : amps_) total += std::norm(a);
  return total;
}

void StateVector::check_norm(double tol) const {
  const double n = norm_squared();
  if (std::abs(n - 1.0) > tol) {
    throw InvariantViolation("state-norm", "norm^2 = " + std::to_string(n) +
                                               " drifted beyond tolerance");
  }
}

StateVector tensor(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() + b.num_qubits() > StateVector::kMaxQubits) {
    throw std::invalid_argument("tensor product exceeds the 24-qubit cap");
  }
  const auto av = a.amplitudes();
  const auto bv = b.amplitudes();
  std::vector<Amplitude> amps(av.size() * bv.size());
  for (std::size_t i = 0; i < av.size(); ++i) {
    for (std::size_t j = 0; j < bv.size(); ++j) {
      amps[i * bv.size() + j] = av[i] * bv[j];
    }
  }
  return StateVector::from_amplitudes(a.num_qubits() + b.num_qubits(),
                                      std::move(amps));
}

Amplitude inner_product(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("inner product requires equal dimensions");
  }
  Amplitude total{0.0};
  const auto av = a.amplitudes();
  const auto bv = b.amplitudes();
  for (std::size_t i = 0; i < av.size(); ++i) {
    total += std::conj(av[i]) * bv[i];
  }
  return total;
}

double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("comparison requires equal dimensions");
  }
  double worst = 0.0;
  const auto av = a.amplitudes();
  const auto bv = b.amplitudes();
  for (std::size_t i = 0; i < av.size(); ++i) {
    worst = std::max(worst, std::abs(av[i] - bv[i]));
  }
  return worst;
}

bool equal_up_to_phase(const StateVector& a, const StateVector& b, double tol) {
  if (a.dim() != b.dim()) return false;
  const Amplitude overlap = inner_product(a, b);
  const double mag = std::abs(overlap);
  // Align b's phase onto a. A zero overlap on states of comparable norm means
  // they cannot match under any phase.
  if (mag < tol) return max_abs_diff(a, b) <= tol;
  const Amplitude phase = overlap / mag;
  const auto av = a.amplitudes();
  const auto bv = b.amplitudes();
  for (std::size_t i = 0; i < av.size(); ++i) {
    if (std::abs(av[i] * phase - bv[i]) > tol) return false;
  }
  return true;
}

namespace {

void require_wires(const StateVector& state, const std::vector<int>& wires) {
  if (wires.empty()) throw std::invalid_argument("wire list must be nonempty");
  for (std::size_t i = 0; i < wires.size(); ++i) {
    if (wires[i] < 0 || wires[i] >= state.num_qubits()) {
      throw std::out_of_range("measured wire index out of range");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (wires[i] == wires[j]) {
        throw std::invalid_argument("measured wires must be distinct");
      }
    }
  }
}

}  // namespace

OutcomeDistribution exact_distribution(const StateVector& state,
                                       const std::vector<int>& wires,
                                       BasisKind basis) {
  require_wires(state, wires);
  StateVector rotated = state;
  if (basis == BasisKind::Hadamard) {
    for (int w : wires) rotated.apply(GateKind::H, w);
  }
  std::vector<std::size_t> masks;
  masks.reserve(wires.size());
  for (int w : wires) masks.push_back(rotated.wire_mask(w));

  // Bin |amp|^2 by the measured wires' bit pattern, then label the bins.
  std::vector<double> bins(std::size_t{1} << wires.size(), 0.0);
  const auto amps = rotated.amplitudes();
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    const double p = std::norm(amps[idx]);
    if (p == 0.0) continue;
    std::size_t bin = 0;
    for (std::size_t w = 0; w < masks.size(); ++w) {
      bin = (bin << 1) | ((idx & masks[w]) ? 1u : 0u);
    }
    bins[bin] += p;
  }

  OutcomeDistribution dist;
  for (std::size_t bin = 0; bin < bins.size(); ++bin) {
    if (bins[bin] < kProbabilityFloor) continue;
    std::string key(wires.size(), '?');
    for (std::size_t w = 0; w < wires.size(); ++w) {
      const int bit = static_cast<int>((bin >> (wires.size() - 1 - w)) & 1u);
      key[w] = outcome_label(basis, bit);
    }
    dist.add(key, bins[bin]);
  }
  return dist;
}

std::pair<double, StateVector> project_measurement(const StateVector& state,
                                                   const std::vector<int>& wires,
                                                   BasisKind basis,
                                                   const std::string& labels) {
  require_wires(state, wires);
  if (labels.size() != wires.size()) {
    throw std::invalid_argument("one outcome label required per measured wire");
  }
  StateVector rotated = state;
  if (basis == BasisKind::Hadamard) {
    for (int w : wires) rotated.apply(GateKind::H, w);
  }

  std::size_t want = 0;
  std::size_t care = 0;
  for (std::size_t w = 0; w < wires.size(); ++w) {
    const std::size_t mask = rotated.wire_mask(wires[w]);
    care |= mask;
    if (label_bit(labels[w]) == 1) want |= mask;
  }

  std::vector<Amplitude> amps(rotated.amplitudes().begin(),
                              rotated.amplitudes().end());
  double prob = 0.0;
  for (std::size_t idx = 0; idx < amps.size(); ++idx) {
    if ((idx & care) == want) {
      prob += std::norm(amps[idx]);
    } else {
      amps[idx] = Amplitude{0.0};
    }
  }
  if (prob >= kProbabilityFloor) {
    const double scale = 1.0 / std::sqrt(prob);
    for (Amplitude& a : amps) a *= scale;
  }
  StateVector collapsed =
      StateVector::from_amplitudes(state.num_qubits(), std::move(amps));
  if (basis == BasisKind::Hadamard) {
    for (int w : wires) collapsed.apply(GateKind::H, w);
  }
  return {prob, std::move(collapsed)};
}

std::pair<std::string, StateVector> sample_measurement(
    const StateVector& state, const std::vector<int>& wires, BasisKind basis,
    CounterRng& rng) {
  const OutcomeDistribution dist = exact_distribution(state, wires, basis);
  if (dist.empty()) {
    throw InvariantViolation("measurement-support",
                             "no outcome has positive probability");
  }
  // Cumulative walk over the (sorted, deterministic) support.
  const double u = rng.next_double();
  double cumulative = 0.0;
  const std::string* chosen = nullptr;
  for (const auto& [key, p] : dist.entries()) {
    cumulative += p;
    chosen = &key;
    if (u < cumulative) break;
  }
  auto [prob, collapsed] = project_measurement(state, wires, basis, *chosen);
  (void)prob;
  collapsed.check_norm();
  return {*chosen, std::move(collapsed)};
}

}  // namespace qsig
