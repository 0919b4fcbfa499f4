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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "qsig/protocol.hpp"
#include "support.hpp"

using namespace qsig;

namespace {

int decode1_of(std::initializer_list<std::string> pairs) {
  const std::vector<std::string> v(pairs);
  return decode1(v);
}

std::uint64_t session_errors(const Transcript& t) {
  std::uint64_t errors = 0;
  for (std::size_t i = 0; i < t.sent_bits.size(); ++i) {
    if (t.sent_bits[i] != t.decoded_bits[i]) ++errors;
  }
  return errors;
}

}  // namespace

TEST_CASE("encode_bit maps bit and outcome to the right branch") {
  CounterRng rng(11, 0, 0, 0);
  for (int i = 0; i < 200; ++i) {
    const EncodeResult r0 = encode_bit(0, rng);
    CHECK((r0.alice_outcome == '0' || r0.alice_outcome == '1'));
    CHECK(r0.bob_branch == (r0.alice_outcome == '0' ? BranchState::Psi1
                                                    : BranchState::Psi2));
    const EncodeResult r1 = encode_bit(1, rng);
    CHECK(r1.bob_branch == (r1.alice_outcome == '0' ? BranchState::Psi3
                                                    : BranchState::Psi4));
  }
  CHECK_THROWS_AS(encode_bit(2, rng), std::invalid_argument);
  CHECK_THROWS_AS(encode_bit(-1, rng), std::invalid_argument);
}

TEST_CASE("encode_bit outcomes are unbiased") {
  CounterRng rng(5, 0, 0, 0);
  const int shots = 20000;
  int ones = 0;
  for (int i = 0; i < shots; ++i) {
    if (encode_bit(0, rng).alice_outcome == '1') ++ones;
  }
  const double freq = static_cast<double>(ones) / shots;
  const double bound = 5.0 * std::sqrt(0.25 / shots);
  CHECK(std::abs(freq - 0.5) <= bound);
}

TEST_CASE("decode1 fires on any differing pair") {
  CHECK(decode1_of({"++"}) == 0);
  CHECK(decode1_of({"--"}) == 0);
  CHECK(decode1_of({"+-"}) == 1);
  CHECK(decode1_of({"-+"}) == 1);
  CHECK(decode1_of({"00"}) == 0);
  CHECK(decode1_of({"01"}) == 1);
  CHECK(decode1_of({"++", "--", "++"}) == 0);
  CHECK(decode1_of({"++", "-+", "--"}) == 1);
  CHECK(decode1_of({"11", "11", "10"}) == 1);
}

TEST_CASE("decode1 rejects malformed pair lists") {
  CHECK_THROWS_AS(decode1_of({}), std::invalid_argument);
  CHECK_THROWS_AS(decode1_of({"+"}), std::invalid_argument);
  CHECK_THROWS_AS(decode1_of({"+++"}), std::invalid_argument);
  CHECK_THROWS_AS(decode1_of({"+0"}), std::invalid_argument);
  CHECK_THROWS_AS(decode1_of({"ab"}), std::invalid_argument);
  // One alphabet per call, even across pairs.
  CHECK_THROWS_AS(decode1_of({"++", "00"}), std::invalid_argument);
}

TEST_CASE("decode2 reads m1 first, then m2") {
  CHECK(decode2('+', '+') == 0);
  CHECK(decode2('+', '-') == 1);
  CHECK(decode2('-', '+') == 1);
  CHECK(decode2('-', '-') == 1);
  CHECK(decode2('0', '0') == 0);
  CHECK(decode2('0', '1') == 1);
  CHECK(decode2('1', '0') == 1);
  CHECK(decode2('1', '1') == 1);
  CHECK_THROWS_AS(decode2('+', '0'), std::invalid_argument);
  CHECK_THROWS_AS(decode2('1', '-'), std::invalid_argument);
  CHECK_THROWS_AS(decode2('x', '+'), std::invalid_argument);
}

TEST_CASE("error_bound is exactly two to the minus k") {
  CHECK(error_bound(1) == 0.5);
  CHECK(error_bound(2) == 0.25);
  CHECK(error_bound(10) == 1.0 / 1024.0);
  CHECK_THROWS_AS(error_bound(0), std::invalid_argument);
  CHECK_THROWS_AS(error_bound(-3), std::invalid_argument);
}

TEST_CASE("claim tables hold the asserted outcome rows") {
  const ClaimTable& d1 = decoder1_claims();
  CHECK(d1.circuit_id == "decoder1");
  CHECK(d1.provenance == "claimed");
  CHECK(d1.rows.size() == 4);
  CHECK(d1.allowed_for(BranchState::Psi1) ==
        std::vector<std::string>{"++", "--"});
  CHECK(d1.allowed_for(BranchState::Psi2) ==
        std::vector<std::string>{"++", "--"});
  CHECK(d1.allowed_for(BranchState::Psi3) ==
        std::vector<std::string>{"++", "--"});
  CHECK(d1.allowed_for(BranchState::Psi4) ==
        std::vector<std::string>{"+-", "-+"});

  const ClaimTable& d2 = decoder2_claims();
  CHECK(d2.circuit_id == "decoder2");
  CHECK(d2.provenance == "claimed");
  CHECK(d2.allowed_for(BranchState::Psi1) == std::vector<std::string>{"++"});
  CHECK(d2.allowed_for(BranchState::Psi2) == std::vector<std::string>{"++"});
  CHECK(d2.allowed_for(BranchState::Psi3) == std::vector<std::string>{"+-"});
  CHECK(d2.allowed_for(BranchState::Psi4) ==
        std::vector<std::string>{"-+", "--"});

  CHECK(&claims_for(1) == &d1);
  CHECK(&claims_for(2) == &d2);
  CHECK_THROWS_AS(claims_for(3), std::invalid_argument);

  const ClaimTable empty{"x", "claimed", {}};
  CHECK_THROWS_AS(empty.allowed_for(BranchState::Psi1), std::invalid_argument);
}

TEST_CASE("run_session validates its arguments") {
  SessionConfig cfg;
  CHECK_THROWS_AS(run_session(cfg, "", 1), std::invalid_argument);
  CHECK_THROWS_AS(run_session(cfg, "01x", 1), std::invalid_argument);
  CHECK_THROWS_AS(run_session(cfg, "01", 3), std::invalid_argument);
  cfg.pairs_per_bit = 0;
  CHECK_THROWS_AS(run_session(cfg, "01", 1), std::invalid_argument);
}

TEST_CASE("run_session fills the transcript consistently") {
  SessionConfig cfg;
  cfg.pairs_per_bit = 3;
  cfg.seed = 17;
  const Transcript t = run_session(cfg, "0110", 1);
  CHECK(t.decoder == 1);
  CHECK(t.sent_bits == "0110");
  CHECK(t.decoded_bits.size() == 4);
  REQUIRE(t.bits.size() == 4);
  for (const BitRecord& rec : t.bits) {
    CHECK(rec.branches.size() == 3);
    CHECK(rec.outcomes.size() == 3);
    CHECK(rec.alice_outcomes.size() == 3);
    for (const std::string& pair : rec.outcomes) CHECK(pair.size() == 2);
  }
  CHECK(t.bits[0].sent == 0);
  CHECK(t.bits[1].sent == 1);
}

TEST_CASE("run_session replays byte for byte under one seed") {
  SessionConfig cfg;
  cfg.pairs_per_bit = 4;
  cfg.seed = 99;
  const Transcript a = run_session(cfg, "0101010101", 1);
  const Transcript b = run_session(cfg, "0101010101", 1);
  CHECK(a.decoded_bits == b.decoded_bits);
  REQUIRE(a.bits.size() == b.bits.size());
  for (std::size_t i = 0; i < a.bits.size(); ++i) {
    CHECK(a.bits[i].outcomes == b.bits[i].outcomes);
    CHECK(a.bits[i].branches == b.bits[i].branches);
  }

  cfg.seed = 100;
  const Transcript c = run_session(cfg, "0101010101", 1);
  bool any_difference = false;
  for (std::size_t i = 0; i < a.bits.size(); ++i) {
    if (a.bits[i].outcomes != c.bits[i].outcomes) any_difference = true;
  }
  CHECK(any_difference);
}

TEST_CASE("physical gate-reading receivers decode everything as zero") {
  // The punchline of the audit: under the simulated physics the meter
  // statistics carry no trace of the sent bit, and these decoder/convention
  // combinations always emit 0.
  SessionConfig cfg;
  cfg.pairs_per_bit = 2;
  cfg.seed = 21;
  CHECK(run_session(cfg, "0011", 1).decoded_bits == "0000");
  CHECK(run_session(cfg, "0011", 2).decoded_bits == "0000");

  cfg.convention = Convention::XPAR;
  CHECK(run_session(cfg, "0011", 1).decoded_bits == "0000");
}

TEST_CASE("claims-faithful decoder2 transmits perfectly") {
  SessionConfig cfg;
  cfg.mode = Mode::ClaimsFaithful;
  cfg.seed = 8;
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    cfg.seed = seed;
    CHECK(run_session(cfg, "0110100", 2).decoded_bits == "0110100");
  }
  const SessionStats stats = run_trials(cfg, "01101", 2, 2000);
  CHECK(stats.bit_errors == 0);
  CHECK(stats.error_rate == 0.0);
}

TEST_CASE("claims-faithful decoder1 errs only on sent ones, at the bound") {
  SessionConfig cfg;
  cfg.mode = Mode::ClaimsFaithful;
  cfg.pairs_per_bit = 3;
  cfg.seed = 31;

  const SessionStats zeros = run_trials(cfg, "0", 1, 100000);
  CHECK(zeros.bit_errors == 0);

  const SessionStats ones = run_trials(cfg, "1", 1, 100000);
  const double p = error_bound(3);
  const double sigma = std::sqrt(p * (1.0 - p) / 100000.0);
  CHECK(std::abs(ones.error_rate - p) <= 5.0 * sigma);
  CHECK(ones.trials == 100000);
  CHECK(ones.bits_per_trial == 1);
}

TEST_CASE("trials concatenate into one long session") {
  SessionConfig cfg;
  cfg.mode = Mode::ClaimsFaithful;
  cfg.pairs_per_bit = 1;
  cfg.seed = 12;
  const SessionStats stats = run_trials(cfg, "01", 1, 3);
  const Transcript long_session = run_session(cfg, "010101", 1);
  CHECK(stats.bit_errors == session_errors(long_session));
}

TEST_CASE("run_trials is thread-count invariant") {
  SessionConfig cfg;
  cfg.mode = Mode::ClaimsFaithful;
  cfg.pairs_per_bit = 2;
  cfg.seed = 77;
  const SessionStats one = run_trials(cfg, "10", 1, 4001, 1);
  const SessionStats five = run_trials(cfg, "10", 1, 4001, 5);
  CHECK(one.bit_errors == five.bit_errors);
  CHECK(one.trials == five.trials);
  CHECK(one.error_rate == five.error_rate);
  CHECK(one.bit_errors > 0);

  CHECK_THROWS_AS(run_trials(cfg, "10", 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(run_trials(cfg, "10", 1, 5, 0), std::invalid_argument);
}

TEST_CASE("mode names serialize") {
  CHECK(std::string(to_string(Mode::Physical)) == "physical");
  CHECK(std::string(to_string(Mode::ClaimsFaithful)) == "claims-faithful");
}
