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

#include "qsig/protocol.hpp"

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <thread>

namespace qsig {

const char* to_string(Mode mode) {
  return mode == Mode::Physical ? "physical" : "claims-faithful";
}

EncodeResult encode_bit(int bit, CounterRng& rng) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("bit must be 0 or 1");
  StateVector pair = StateVector::named(NamedState::PhiPlus);
  if (bit == 1) pair.apply(GateKind::H, 0);  // wire 0 is Alice's half
  auto [labels, collapsed] =
      sample_measurement(pair, {0}, BasisKind::Computational, rng);
  (void)collapsed;
  const char alice = labels[0];
  BranchState branch;
  if (bit == 0) {
    branch = alice == '0' ? BranchState::Psi1 : BranchState::Psi2;
  } else {
    branch = alice == '0' ? BranchState::Psi3 : BranchState::Psi4;
  }
  return EncodeResult{alice, branch};
}

namespace {

// Labels must come from a single basis alphabet; mixing '0'/'1' with '+'/'-'
// in one decode call is a caller bug.
void require_single_alphabet(char reference, char label) {
  const bool ref_comp = reference == '0' || reference == '1';
  const bool lab_comp = label == '0' || label == '1';
  if (ref_comp != lab_comp) {
    throw std::invalid_argument("decode labels mix measurement bases");
  }
}

}  // namespace

int decode1(std::span<const std::string> pairs) {
  if (pairs.empty()) {
    throw std::invalid_argument("decode1 requires at least one pair");
  }
  char reference = 0;
  int decoded = 0;
  for (const std::string& pair : pairs) {
    if (pair.size() != 2) {
      throw std::invalid_argument("decode1 pairs carry exactly two labels");
    }
    for (char c : pair) {
      label_bit(c);  // validates the label character
      if (reference == 0) {
        reference = c;
      } else {
        require_single_alphabet(reference, c);
      }
    }
    if (pair[0] != pair[1]) decoded = 1;
  }
  return decoded;
}

int decode2(char m1, char m2) {
  label_bit(m1);
  label_bit(m2);
  require_single_alphabet(m1, m2);
  const auto is_minus = [](char c) { return c == '-' || c == '1'; };
  if (is_minus(m1)) return 1;
  return is_minus(m2) ? 1 : 0;
}

double error_bound(int k) {
  if (k < 1) throw std::invalid_argument("pair count must be at least 1");
  return std::ldexp(1.0, -k);
}

const std::vector<std::string>& ClaimTable::allowed_for(BranchState branch) const {
  for (const ClaimRow& row : rows) {
    if (row.branch == branch) return row.allowed;
  }
  throw std::invalid_argument("claim table has no row for that branch");
}

const ClaimTable& decoder1_claims() {
  static const ClaimTable table{
      "decoder1",
      "claimed",
      {
          {BranchState::Psi1, {"++", "--"}},
          {BranchState::Psi2, {"++", "--"}},
          {BranchState::Psi3, {"++", "--"}},
          {BranchState::Psi4, {"+-", "-+"}},
      }};
  return table;
}

const ClaimTable& decoder2_claims() {
  static const ClaimTable table{
      "decoder2",
      "claimed",
      {
          {BranchState::Psi1, {"++"}},
          {BranchState::Psi2, {"++"}},
          {BranchState::Psi3, {"+-"}},
          // m1 must read '-'; the second meter is left unconstrained.
          {BranchState::Psi4, {"-+", "--"}},
      }};
  return table;
}

const ClaimTable& claims_for(int decoder) {
  if (decoder == 1) return decoder1_claims();
  if (decoder == 2) return decoder2_claims();
  throw std::invalid_argument("decoder must be 1 or 2");
}

namespace {

BranchState draw_branch(int sent, CounterRng& rng) {
  const bool second = rng.next_double() >= 0.5;
  if (sent == 0) return second ? BranchState::Psi2 : BranchState::Psi1;
  return second ? BranchState::Psi4 : BranchState::Psi3;
}

BitRecord transmit_bit(const SessionConfig& config, int decoder,
                       const Circuit& circuit, std::uint64_t bit_key,
                       int sent) {
  const int k = decoder == 1 ? config.pairs_per_bit : 1;
  const ClaimTable& claims = claims_for(decoder);
  BitRecord rec;
  rec.sent = sent;
  for (int pair = 0; pair < k; ++pair) {
    const auto pair_key = static_cast<std::uint64_t>(pair);
    if (config.mode == Mode::Physical) {
      CounterRng enc(config.seed, bit_key, pair_key, rng_stream::kEncode);
      const EncodeResult encoded = encode_bit(sent, enc);
      CounterRng dec(config.seed, bit_key, pair_key, rng_stream::kDecode);
      const ShotResult shot =
          run_sampled(circuit, branch_input(encoded.bob_branch, circuit.width), dec);
      rec.branches.push_back(encoded.bob_branch);
      rec.outcomes.push_back(shot.key);
      rec.alice_outcomes.emplace_back(1, encoded.alice_outcome);
    } else {
      CounterRng br(config.seed, bit_key, pair_key, rng_stream::kBranch);
      const BranchState branch = draw_branch(sent, br);
      CounterRng cl(config.seed, bit_key, pair_key, rng_stream::kClaim);
      const auto& allowed = claims.allowed_for(branch);
      rec.branches.push_back(branch);
      rec.outcomes.push_back(allowed[cl.next_index(allowed.size())]);
    }
  }
  rec.decoded = decoder == 1 ? decode1(rec.outcomes)
                             : decode2(rec.outcomes[0][0], rec.outcomes[0][1]);
  return rec;
}

void require_session_args(const SessionConfig& config, std::string_view bits,
                          int decoder) {
  if (decoder != 1 && decoder != 2) {
    throw std::invalid_argument("decoder must be 1 or 2");
  }
  if (config.pairs_per_bit < 1) {
    throw std::invalid_argument("pairs per bit must be at least 1");
  }
  if (bits.empty()) throw std::invalid_argument("bit string must be nonempty");
  for (char c : bits) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bit string may contain only '0' and '1'");
    }
  }
}

}  // namespace

Transcript run_session(const SessionConfig& config, std::string_view bits,
                       int decoder) {
  require_session_args(config, bits, decoder);
  const Circuit circuit = decoder == 1 ? build_decoder1(config.convention)
                                       : build_decoder2(config.convention);
  Transcript t;
  t.config = config;
  t.decoder = decoder;
  t.sent_bits = std::string(bits);
  t.bits.reserve(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    BitRecord rec = transmit_bit(config, decoder, circuit,
                                 static_cast<std::uint64_t>(i), bits[i] - '0');
    t.decoded_bits += static_cast<char>('0' + rec.decoded);
    t.bits.push_back(std::move(rec));
  }
  return t;
}

SessionStats run_trials(const SessionConfig& config, std::string_view bits,
                        int decoder, std::uint64_t trials, int threads) {
  require_session_args(config, bits, decoder);
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (threads < 1) throw std::invalid_argument("threads must be at least 1");
  const Circuit circuit = decoder == 1 ? build_decoder1(config.convention)
                                       : build_decoder2(config.convention);
  const std::uint64_t per_trial = bits.size();

  // Bit keys continue across trials, so the counts equal one long session
  // over the repeated string regardless of the thread partition.
  auto count_range = [&](std::uint64_t first, std::uint64_t last) {
    std::uint64_t errors = 0;
    for (std::uint64_t t = first; t < last; ++t) {
      for (std::uint64_t i = 0; i < per_trial; ++i) {
        const int sent = bits[static_cast<std::size_t>(i)] - '0';
        const BitRecord rec =
            transmit_bit(config, decoder, circuit, t * per_trial + i, sent);
        if (rec.decoded != sent) ++errors;
      }
    }
    return errors;
  };

  std::uint64_t errors = 0;
  if (threads == 1 || trials < 2) {
    errors = count_range(0, trials);
  } else {
    const auto workers = static_cast<std::uint64_t>(threads);
    std::vector<std::uint64_t> partial(workers, 0);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    const std::uint64_t chunk = (trials + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      const std::uint64_t first = w * chunk;
      const std::uint64_t last = std::min(trials, first + chunk);
      pool.emplace_back([&, w, first, last] {
        partial[w] = first < last ? count_range(first, last) : 0;
      });
    }
    for (std::thread& th : pool) th.join();
    for (std::uint64_t e : partial) errors += e;
  }

  SessionStats stats;
  stats.trials = trials;
  stats.bits_per_trial = per_trial;
  stats.bit_errors = errors;
  stats.error_rate = static_cast<double>(errors) /
                     (static_cast<double>(trials) * static_cast<double>(per_trial));
  return stats;
}

}  // namespace qsig
