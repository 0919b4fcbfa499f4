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

#include "qsig/audit.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <thread>
#include <utility>

namespace qsig {

namespace {

Circuit build_decoder(int decoder, Convention convention) {
  if (decoder == 1) return build_decoder1(convention);
  if (decoder == 2) return build_decoder2(convention);
  throw std::invalid_argument("decoder must be 1 or 2");
}

}  // namespace

BranchTable branch_table(int decoder, Convention convention, PathKind path) {
  const Circuit circuit = build_decoder(decoder, convention);
  BranchTable table;
  table.circuit_id = circuit.id;
  table.convention = convention;
  for (BranchState branch : kAllBranches) {
    const StateVector input = branch_input(branch, circuit.width);
    if (path == PathKind::StateVector) {
      table.rows[branch] = run_exact(circuit, input).joint;
    } else {
      table.rows[branch] =
          run_exact_density(circuit, DensityMatrix::from_state(input));
    }
  }
  return table;
}

const char* to_string(Verdict verdict) {
  return verdict == Verdict::Match ? "match" : "mismatch";
}

MatchReport compare_claims(const BranchTable& table, const ClaimTable& claims) {
  if (table.circuit_id != claims.circuit_id) {
    throw std::invalid_argument("claim table targets a different circuit");
  }
  const int decoder = table.circuit_id == "decoder1" ? 1 : 2;
  const Circuit circuit = build_decoder(decoder, table.convention);
  const std::vector<BasisKind> bases = circuit.meter_bases();

  // Claim rows are written in the '+'/'-' alphabet; meters read in the
  // computational basis report the same event as '0'/'1'.
  const auto translate = [&bases](std::string key) {
    for (std::size_t j = 0; j < key.size(); ++j) {
      if (bases[j] == BasisKind::Computational) {
        key[j] = key[j] == '+' ? '0' : '1';
      }
    }
    return key;
  };

  MatchReport report;
  report.circuit_id = table.circuit_id;
  report.convention = table.convention;
  report.provenance = claims.provenance;
  for (const auto& [branch, simulated] : table.rows) {
    MatchEntry entry;
    entry.branch = branch;
    entry.simulated = simulated;
    for (const std::string& key : claims.allowed_for(branch)) {
      entry.claimed.push_back(translate(key));
    }
    for (const std::string& key : entry.claimed) {
      entry.mass_on_claimed += simulated.probability(key);
    }
    for (const auto& [key, p] : simulated.entries()) {
      if (std::find(entry.claimed.begin(), entry.claimed.end(), key) ==
          entry.claimed.end()) {
        entry.max_prob_outside_claimed =
            std::max(entry.max_prob_outside_claimed, p);
      }
    }
    entry.verdict = entry.mass_on_claimed >= 1.0 - kIdentityTol
                        ? Verdict::Match
                        : Verdict::Mismatch;
    report.entries.push_back(std::move(entry));
  }
  return report;
}

OutcomeDistribution sent_bit_distribution(int decoder, Convention convention,
                                          int k, int sent, PathKind path) {
  if (sent != 0 && sent != 1) throw std::invalid_argument("sent must be 0 or 1");
  if (k < 1) throw std::invalid_argument("pair count must be at least 1");
  const BranchTable table = branch_table(decoder, convention, path);
  const auto& first =
      table.rows.at(sent == 0 ? BranchState::Psi1 : BranchState::Psi3);
  const auto& second =
      table.rows.at(sent == 0 ? BranchState::Psi2 : BranchState::Psi4);
  OutcomeDistribution per_pair = mix(first, 0.5, second, 0.5);
  if (decoder == 2) return per_pair;
  OutcomeDistribution joint = per_pair;
  for (int pair = 1; pair < k; ++pair) joint = product(joint, per_pair);
  return joint;
}

OutcomeDistribution decoded_distribution(int decoder, Convention convention,
                                         int k, int sent, PathKind path) {
  const OutcomeDistribution joint =
      sent_bit_distribution(decoder, convention, k, sent, path);
  OutcomeDistribution decoded;
  for (const auto& [key, p] : joint.entries()) {
    int bit;
    if (decoder == 2) {
      bit = decode2(key[0], key[1]);
    } else {
      std::vector<std::string> pairs;
      for (std::size_t i = 0; i + 1 < key.size(); i += 2) {
        pairs.push_back(key.substr(i, 2));
      }
      bit = decode1(pairs);
    }
    decoded.add(std::string(1, static_cast<char>('0' + bit)), p);
  }
  return decoded;
}

double mutual_information_bits(const OutcomeDistribution& d0,
                               const OutcomeDistribution& d1) {
  std::map<std::string, double> marginal;
  for (const auto& [key, p] : d0.entries()) marginal[key] += 0.5 * p;
  for (const auto& [key, p] : d1.entries()) marginal[key] += 0.5 * p;
  double mi = 0.0;
  for (const OutcomeDistribution* d : {&d0, &d1}) {
    for (const auto& [key, p] : d->entries()) {
      if (p > 0.0) mi += 0.5 * p * std::log2(p / marginal[key]);
    }
  }
  return mi;
}

namespace {

int convention_index(Convention convention) {
  switch (convention) {
    case Convention::GH: return 0;
    case Convention::GC: return 1;
    case Convention::XPAR: return 2;
  }
  throw std::invalid_argument("unknown convention");
}

// Injective tag so every (decoder, convention, k, sent) context draws from its
// own keyed stream.
std::uint64_t context_key(int decoder, Convention convention, int k, int sent) {
  return (static_cast<std::uint64_t>(decoder) << 32) |
         (static_cast<std::uint64_t>(convention_index(convention)) << 24) |
         (static_cast<std::uint64_t>(k) << 8) |
         static_cast<std::uint64_t>(sent);
}

OutcomeDistribution sample_sent_bit(const Circuit& circuit, int k, int sent,
                                    std::uint64_t context, std::uint64_t shots,
                                    std::uint64_t seed, int threads) {
  auto count_range = [&](std::uint64_t first, std::uint64_t last) {
    std::map<std::string, std::uint64_t> counts;
    for (std::uint64_t shot = first; shot < last; ++shot) {
      std::string key;
      for (int pair = 0; pair < k; ++pair) {
        const auto lane = static_cast<std::uint64_t>(pair) * 8;
        CounterRng enc(seed, context, shot, lane + rng_stream::kEncode);
        const EncodeResult encoded = encode_bit(sent, enc);
        CounterRng dec(seed, context, shot, lane + rng_stream::kDecode);
        key += run_sampled(circuit,
                           branch_input(encoded.bob_branch, circuit.width), dec)
                   .key;
      }
      ++counts[key];
    }
    return counts;
  };

  std::map<std::string, std::uint64_t> counts;
  if (threads == 1 || shots < 2) {
    counts = count_range(0, shots);
  } else {
    const auto workers = static_cast<std::uint64_t>(threads);
    std::vector<std::map<std::string, std::uint64_t>> partial(workers);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (shots + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t first = w * chunk;
      const std::uint64_t last = std::min(shots, first + chunk);
      pool.emplace_back([&, w, first, last] {
        if (first < last) partial[w] = count_range(first, last);
      });
    }
    for (std::thread& th : pool) th.join();
    for (const auto& part : partial) {
      for (const auto& [key, n] : part) counts[key] += n;
    }
  }

  OutcomeDistribution empirical;
  const auto denom = static_cast<double>(shots);
  for (const auto& [key, n] : counts) {
    empirical.add(key, static_cast<double>(n) / denom);
  }
  return empirical;
}

}  // namespace

SignalingReport signaling_report(int decoder, Convention convention, int k,
                                 std::uint64_t shots, std::uint64_t seed,
                                 int threads) {
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  const Circuit circuit = build_decoder(decoder, convention);
  const int pairs = decoder == 1 ? k : 1;
  const OutcomeDistribution exact0 =
      sent_bit_distribution(decoder, convention, pairs, 0, PathKind::StateVector);
  const OutcomeDistribution exact1 =
      sent_bit_distribution(decoder, convention, pairs, 1, PathKind::StateVector);

  SignalingReport report;
  report.circuit_id = circuit.id;
  report.convention = convention;
  report.decoder = decoder;
  report.pairs_per_bit = pairs;
  report.tv_exact = tv_distance(exact0, exact1);
  report.mi_exact = mutual_information_bits(exact0, exact1);

  if (shots > 0) {
    report.has_empirical = true;
    report.shots = shots;
    const OutcomeDistribution emp0 = sample_sent_bit(
        circuit, pairs, 0, context_key(decoder, convention, pairs, 0), shots,
        seed, threads);
    const OutcomeDistribution emp1 = sample_sent_bit(
        circuit, pairs, 1, context_key(decoder, convention, pairs, 1), shots,
        seed, threads);
    report.tv_empirical = tv_distance(emp0, emp1);
    report.mi_empirical = mutual_information_bits(emp0, emp1);
    std::set<std::string> support;
    for (const auto& [key, p] : exact0.entries()) support.insert(key);
    for (const auto& [key, p] : exact1.entries()) support.insert(key);
    report.tv_bound = 3.0 * std::sqrt(static_cast<double>(support.size()) /
                                      static_cast<double>(shots));
    report.within_bound = report.tv_empirical <= report.tv_bound;
  }
  return report;
}

ReducedStateReport reduced_state_report() {
  // Wire 0 is the sender's half of the pair, wire 1 the receiver's. The
  // receiver's state is the outcome-weighted mixture over the sender's meter.
  const auto receiver_state = [](bool hadamard_first) {
    DensityMatrix rho =
        DensityMatrix::from_state(StateVector::named(NamedState::PhiPlus));
    if (hadamard_first) rho.apply(GateKind::H, 0);
    const MeasureChannelResult measured =
        measure_channel(rho, {0}, BasisKind::Computational);
    DensityMatrix mixed(2);
    for (const auto& [key, post] : measured.post_states) {
      mixed.accumulate(post, measured.distribution.probability(key));
    }
    return partial_trace(mixed, {1});
  };
  ReducedStateReport report{receiver_state(false), receiver_state(true), 0.0};
  report.max_abs_diff = max_abs_diff(report.s1, report.s2);
  return report;
}

double idp_failure_probability(const StateVector& a, const StateVector& b) {
  if (a.num_qubits() != b.num_qubits()) {
    throw std::invalid_argument("states must share a width");
  }
  if (std::abs(a.norm_squared() - 1.0) > kIdentityTol ||
      std::abs(b.norm_squared() - 1.0) > kIdentityTol) {
    throw std::invalid_argument("states must be normalized");
  }
  return std::abs(inner_product(a, b));
}

bool linearly_independent(const std::vector<StateVector>& states) {
  if (states.empty()) {
    throw std::invalid_argument("needs at least one state");
  }
  const int width = states.front().num_qubits();
  for (const StateVector& s : states) {
    if (s.num_qubits() != width) {
      throw std::invalid_argument("states must share a width");
    }
  }
  const std::size_t m = states.size();
  if (m > states.front().dim()) return false;

  std::vector<std::vector<Amplitude>> gram(m, std::vector<Amplitude>(m));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      gram[i][j] = inner_product(states[i], states[j]);
    }
  }

  // |det| via elimination with partial pivoting; row swaps only change sign.
  double det_abs = 1.0;
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < m; ++row) {
      if (std::abs(gram[row][col]) > std::abs(gram[pivot][col])) pivot = row;
    }
    const double pivot_abs = std::abs(gram[pivot][col]);
    if (pivot_abs == 0.0) return false;
    if (pivot != col) std::swap(gram[pivot], gram[col]);
    det_abs *= pivot_abs;
    for (std::size_t row = col + 1; row < m; ++row) {
      const Amplitude factor = gram[row][col] / gram[col][col];
      for (std::size_t j = col; j < m; ++j) {
        gram[row][j] -= factor * gram[col][j];
      }
    }
  }
  return det_abs > 1e-10;
}

}  // namespace qsig
