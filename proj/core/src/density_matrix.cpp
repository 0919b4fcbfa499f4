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

#include "qsig/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "qsig/errors.hpp"

namespace qsig {

void Ensemble::validate() const {
  if (members.empty()) {
    throw std::invalid_argument("ensemble must have at least one member");
  }
  const int n = members.front().state.num_qubits();
  double total = 0.0;
  for (const Member& m : members) {
    if (m.state.num_qubits() != n) {
      throw std::invalid_argument("ensemble members must have equal width");
    }
    if (m.probability < 0.0) {
      throw std::invalid_argument("ensemble weights must be nonnegative");
    }
    total += m.probability;
  }
  if (std::abs(total - 1.0) > kIdentityTol) {
    throw std::invalid_argument("ensemble weights must sum to 1");
  }
}

Ensemble ensemble_s1() {
  return Ensemble{{{0.5, StateVector::named(NamedState::Ket0)},
                   {0.5, StateVector::named(NamedState::Ket1)}}};
}

Ensemble ensemble_s2() {
  return Ensemble{{{0.5, StateVector::named(NamedState::KetPlus)},
                   {0.5, StateVector::named(NamedState::KetMinus)}}};
}

DensityMatrix::DensityMatrix(int num_qubits) : num_qubits_(num_qubits) {
  if (num_qubits < 1 || num_qubits > kMaxQubits) {
    throw std::invalid_argument("density matrix qubit count must be in [1, 12]");
  }
  dim_ = std::size_t{1} << num_qubits;
  a_.assign(dim_ * dim_, Amplitude{0.0});
}

DensityMatrix DensityMatrix::from_state(const StateVector& psi) {
  DensityMatrix rho(psi.num_qubits());
  const auto amps = psi.amplitudes();
  for (std::size_t r = 0; r < rho.dim_; ++r) {
    for (std::size_t c = 0; c < rho.dim_; ++c) {
      rho.a_[r * rho.dim_ + c] = amps[r] * std::conj(amps[c]);
    }
  }
  return rho;
}

DensityMatrix DensityMatrix::from_ensemble(const Ensemble& ensemble) {
  ensemble.validate();
  DensityMatrix rho(ensemble.members.front().state.num_qubits());
  for (const Ensemble::Member& m : ensemble.members) {
    rho.accumulate(from_state(m.state), m.probability);
  }
  return rho;
}

DensityMatrix DensityMatrix::maximally_mixed(int num_qubits) {
  DensityMatrix rho(num_qubits);
  const double p = 1.0 / static_cast<double>(rho.dim_);
  for (std::size_t i = 0; i < rho.dim_; ++i) {
    rho.a_[i * rho.dim_ + i] = Amplitude{p};
  }
  return rho;
}

Amplitude DensityMatrix::entry(std::size_t row, std::size_t col) const {
  if (row >= dim_ || col >= dim_) {
    throw std::out_of_range("density matrix index out of range");
  }
  return a_[row * dim_ + col];
}

Amplitude& DensityMatrix::at(std::size_t row, std::size_t col) {
  if (row >= dim_ || col >= dim_) {
    throw std::out_of_range("density matrix index out of range");
  }
  return a_[row * dim_ + col];
}

double DensityMatrix::trace_real() const {
  double t = 0.0;
  for (std::size_t i = 0; i < dim_; ++i) t += a_[i * dim_ + i].real();
  return t;
}

bool DensityMatrix::is_hermitian(double tol) const {
  for (std::size_t r = 0; r < dim_; ++r) {
    for (std::size_t c = 0; c <= r; ++c) {
      if (std::abs(a_[r * dim_ + c] - std::conj(a_[c * dim_ + r])) > tol) {
        return false;
      }
    }
  }
  return true;
}

void DensityMatrix::accumulate(const DensityMatrix& other, double weight) {
  if (other.num_qubits_ != num_qubits_) {
    throw std::invalid_argument("accumulate requires equal widths");
  }
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += weight * other.a_[i];
}

std::size_t DensityMatrix::wire_mask(int wire) const {
  require_wire(wire);
  return std::size_t{1} << (num_qubits_ - 1 - wire);
}

void DensityMatrix::require_wire(int wire) const {
  if (wire < 0 || wire >= num_qubits_) {
    throw std::out_of_range("wire index out of range");
  }
}

void DensityMatrix::apply(GateKind gate, int wire) {
  const std::size_t mask = wire_mask(wire);
  if (gate == GateKind::I) return;
  const auto u = gate_matrix(gate);
  // rho -> U rho: combine row pairs within every column.
  for (std::size_t col = 0; col < dim_; ++col) {
    for (std::size_t row = 0; row < dim_; ++row) {
      if (row & mask) continue;
      const Amplitude a = a_[row * dim_ + col];
      const Amplitude b = a_[(row | mask) * dim_ + col];
      a_[row * dim_ + col] = u[0] * a + u[1] * b;
      a_[(row | mask) * dim_ + col] = u[2] * a + u[3] * b;
    }
  }
  // rho -> rho U+: combine column pairs within every row; U+ supplies
  // conjugated coefficients.
  for (std::size_t row = 0; row < dim_; ++row) {
    for (std::size_t col = 0; col < dim_; ++col) {
      if (col & mask) continue;
      const Amplitude a = a_[row * dim_ + col];
      const Amplitude b = a_[row * dim_ + (col | mask)];
      a_[row * dim_ + col] = std::conj(u[0]) * a + std::conj(u[1]) * b;
      a_[row * dim_ + (col | mask)] = std::conj(u[2]) * a + std::conj(u[3]) * b;
    }
  }
}

void DensityMatrix::apply_cnot(int control, int target) {
  const std::size_t cmask = wire_mask(control);
  const std::size_t tmask = wire_mask(target);
  if (control == target) {
    throw std::invalid_argument("cnot control and target must differ");
  }
  // The CNOT permutation is an involution, so conjugation is two rounds of
  // swaps: rows, then columns.
  for (std::size_t row = 0; row < dim_; ++row) {
    if ((row & cmask) && !(row & tmask)) {
      for (std::size_t col = 0; col < dim_; ++col) {
        std::swap(a_[row * dim_ + col], a_[(row | tmask) * dim_ + col]);
      }
    }
  }
  for (std::size_t col = 0; col < dim_; ++col) {
    if ((col & cmask) && !(col & tmask)) {
      for (std::size_t row = 0; row < dim_; ++row) {
        std::swap(a_[row * dim_ + col], a_[row * dim_ + (col | tmask)]);
      }
    }
  }
}

void DensityMatrix::validate() const {
  if (!is_hermitian(kIdentityTol)) {
    throw InvariantViolation("density-hermitian", "matrix is not Hermitian");
  }
  if (std::abs(trace_real() - 1.0) > kIdentityTol) {
    throw InvariantViolation(
        "density-trace", "trace " + std::to_string(trace_real()) + " is not 1");
  }
  const auto eigs = hermitian_eigenvalues(*this);
  if (!eigs.empty() && eigs.front() < -1e-10) {
    throw InvariantViolation(
        "density-positivity",
        "eigenvalue " + std::to_string(eigs.front()) + " below -1e-10");
  }
}

DensityMatrix partial_trace(const DensityMatrix& rho,
                            const std::vector<int>& keep) {
  if (keep.empty()) throw std::invalid_argument("keep list must be nonempty");
  std::vector<bool> kept(rho.num_qubits(), false);
  for (int w : keep) {
    if (w < 0 || w >= rho.num_qubits()) {
      throw std::out_of_range("kept wire index out of range");
    }
    if (kept[w]) throw std::invalid_argument("kept wires must be distinct");
    kept[w] = true;
  }

  // Kept wires keep their relative order; masks are listed top wire first.
  std::vector<std::size_t> keep_masks;
  std::vector<std::size_t> traced_masks;
  for (int w = 0; w < rho.num_qubits(); ++w) {
    (kept[w] ? keep_masks : traced_masks).push_back(rho.wire_mask(w));
  }

  const std::size_t kd = std::size_t{1} << keep_masks.size();
  const std::size_t td = std::size_t{1} << traced_masks.size();
  auto expand = [](std::size_t packed, const std::vector<std::size_t>& masks) {
    std::size_t full = 0;
    for (std::size_t i = 0; i < masks.size(); ++i) {
      if ((packed >> (masks.size() - 1 - i)) & 1u) full |= masks[i];
    }
    return full;
  };

  DensityMatrix out(static_cast<int>(keep_masks.size()));
  for (std::size_t r = 0; r < kd; ++r) {
    const std::size_t rbase = expand(r, keep_masks);
    for (std::size_t c = 0; c < kd; ++c) {
      const std::size_t cbase = expand(c, keep_masks);
      Amplitude sum{0.0};
      for (std::size_t t = 0; t < td; ++t) {
        const std::size_t toff = expand(t, traced_masks);
        sum += rho.entry(rbase | toff, cbase | toff);
      }
      out.at(r, c) = sum;
    }
  }
  return out;
}

double max_abs_diff(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("comparison requires equal dimensions");
  }
  double worst = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r) {
    for (std::size_t c = 0; c < a.dim(); ++c) {
      worst = std::max(worst, std::abs(a.entry(r, c) - b.entry(r, c)));
    }
  }
  return worst;
}

MeasureChannelResult measure_channel(const DensityMatrix& rho,
                                     const std::vector<int>& wires,
                                     BasisKind basis) {
  if (wires.empty()) throw std::invalid_argument("wire list must be nonempty");
  for (std::size_t i = 0; i < wires.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (wires[i] == wires[j]) {
        throw std::invalid_argument("measured wires must be distinct");
      }
    }
  }

  DensityMatrix rotated = rho;
  if (basis == BasisKind::Hadamard) {
    for (int w : wires) rotated.apply(GateKind::H, w);
  }

  std::vector<std::size_t> masks;
  masks.reserve(wires.size());
  for (int w : wires) masks.push_back(rotated.wire_mask(w));
  std::size_t care = 0;
  for (std::size_t m : masks) care |= m;

  MeasureChannelResult result;
  const std::size_t outcomes = std::size_t{1} << wires.size();
  for (std::size_t o = 0; o < outcomes; ++o) {
    std::size_t want = 0;
    std::string key(wires.size(), '?');
    for (std::size_t w = 0; w < masks.size(); ++w) {
      const int bit = static_cast<int>((o >> (masks.size() - 1 - w)) & 1u);
      if (bit) want |= masks[w];
      key[w] = outcome_label(basis, bit);
    }

    // p = tr(P rho P) over the matching diagonal block.
    double p = 0.0;
    for (std::size_t i = 0; i < rotated.dim(); ++i) {
      if ((i & care) == want) p += rotated.entry(i, i).real();
    }
    if (p < kProbabilityFloor) continue;

    DensityMatrix post(rho.num_qubits());
    const double inv = 1.0 / p;
    for (std::size_t r = 0; r < rotated.dim(); ++r) {
      if ((r & care) != want) continue;
      for (std::size_t c = 0; c < rotated.dim(); ++c) {
        if ((c & care) != want) continue;
        post.at(r, c) = rotated.entry(r, c) * inv;
      }
    }
    if (basis == BasisKind::Hadamard) {
      for (int w : wires) post.apply(GateKind::H, w);
    }
    result.distribution.add(key, p);
    result.post_states.emplace(key, std::move(post));
  }
  return result;
}

std::vector<double> hermitian_eigenvalues(const DensityMatrix& rho) {
  // Real symmetric embedding: [[Re, -Im], [Im, Re]] carries each eigenvalue
  // of the Hermitian matrix twice.
  const std::size_t m = rho.dim();
  const std::size_t n = 2 * m;
  std::vector<double> a(n * n, 0.0);
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      const Amplitude v = rho.entry(r, c);
      a[r * n + c] = v.real();
      a[r * n + (c + m)] = -v.imag();
      a[(r + m) * n + c] = v.imag();
      a[(r + m) * n + (c + m)] = v.real();
    }
  }

  auto off_norm = [&]() {
    double s = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = r + 1; c < n; ++c) s += a[r * n + c] * a[r * n + c];
    }
    return s;
  };

  // Cyclic Jacobi sweeps.
  for (int sweep = 0; sweep < 100 && off_norm() > 1e-28; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double app = a[p * n + p];
        const double aqq = a[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
    }
  }

  std::vector<double> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = a[i * n + i];
  std::sort(diag.begin(), diag.end());
  std::vector<double> eigs(m);
  for (std::size_t i = 0; i < m; ++i) {
    eigs[i] = 0.5 * (diag[2 * i] + diag[2 * i + 1]);
  }
  return eigs;
}

}  // namespace qsig
