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

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qsig/circuit.hpp"
#include "qsig/execute.hpp"
#include "qsig/rng.hpp"

namespace qsig {

/// Result of Alice encoding one bit into one shared pair: her measurement
/// outcome and the branch Bob's qubit collapses to.
struct EncodeResult {
  char alice_outcome;      // '0' or '1'
  BranchState bob_branch;
};

/// Physically encodes one bit: prepares the shared pair in (|00>+|11>)/sqrt2,
/// applies H to Alice's wire when bit is 1, and measures Alice's wire in the
/// computational basis. bit 0 collapses Bob to |0>/|1>, bit 1 to |+>/|->.
EncodeResult encode_bit(int bit, CounterRng& rng);

/// Majority-free repetition rule: 1 iff any pair's two labels differ.
/// Each entry is one pair's two meter labels; labels must all come from one
/// basis alphabet ('0'/'1' or '+'/'-').
int decode1(std::span<const std::string> pairs);

/// 1 when m1 reads minus; otherwise 1 when m2 reads minus; otherwise 0.
/// Under computational labels, '1' counts as minus.
int decode2(char m1, char m2);

/// Residual error bound for decode1 with k pairs: 2^-k exactly.
double error_bound(int k);

enum class Mode {
  /// Bits travel through the simulated physics: encode, run the decoder
  /// circuit, decode the meters.
  Physical,
  /// Meter outcomes are drawn from the asserted outcome tables instead of the
  /// simulation, uniformly over each branch row's allowed set.
  ClaimsFaithful,
};

const char* to_string(Mode mode);

struct SessionConfig {
  int pairs_per_bit = 1;  // k; used by decoder 1 only
  Convention convention = Convention::GH;
  Mode mode = Mode::Physical;
  std::uint64_t seed = 0;
};

struct BitRecord {
  int sent = 0;
  std::vector<BranchState> branches;         // one per pair
  std::vector<std::string> outcomes;         // meter labels per pair, meter order
  std::vector<std::string> alice_outcomes;   // physical mode only
  int decoded = 0;
};

struct Transcript {
  SessionConfig config;
  int decoder = 1;
  std::string sent_bits;
  std::string decoded_bits;
  std::vector<BitRecord> bits;
};

/// Transmits a bit string. bits must be a nonempty string over {'0','1'};
/// decoder must be 1 or 2. Deterministic in (config, bits, decoder).
Transcript run_session(const SessionConfig& config, std::string_view bits,
                       int decoder);

/// Aggregate counters for repeated transmissions of the same bit string.
/// Trial t, bit i draws from the same streams as bit t*bits.size()+i of one
/// long session, so stats match a concatenated run exactly.
struct SessionStats {
  std::uint64_t trials = 0;
  std::uint64_t bits_per_trial = 0;
  std::uint64_t bit_errors = 0;
  double error_rate = 0.0;
};

SessionStats run_trials(const SessionConfig& config, std::string_view bits,
                        int decoder, std::uint64_t trials, int threads = 1);

/// Asserted outcome tables the decoders are specified against. Rows are data,
/// not simulation output; provenance says where they came from.
struct ClaimRow {
  BranchState branch;
  std::vector<std::string> allowed;  // outcome keys in the '+'/'-' alphabet
};

struct ClaimTable {
  std::string circuit_id;
  std::string provenance;
  std::vector<ClaimRow> rows;

  const std::vector<std::string>& allowed_for(BranchState branch) const;
};

/// decoder1 rows: Psi1..Psi3 allow the equal-sign pairs, Psi4 the
/// opposite-sign pairs.
const ClaimTable& decoder1_claims();

/// decoder2 rows: Psi1/Psi2 -> "++", Psi3 -> "+-", Psi4 -> m1 '-' with m2
/// unconstrained.
const ClaimTable& decoder2_claims();

const ClaimTable& claims_for(int decoder);

}  // namespace qsig
