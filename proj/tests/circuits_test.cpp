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
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "qsig/circuit.hpp"
#include "qsig/execute.hpp"
#include "support.hpp"

using namespace qsig;
using qsig::test::check_distribution;

namespace {

std::string read_data_file(const std::string& name) {
  const std::string path = std::string(QSIG_TEST_DATA_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing data file ", path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

Circuit bare_parity_circuit(BasisKind basis) {
  Circuit c;
  c.id = "bare";
  c.width = 2;
  c.ops = {CircuitOp::make_cnot(0, 1), CircuitOp::make_meter(0, basis, "m_a"),
           CircuitOp::make_meter(1, basis, "m_b")};
  return c;
}

}  // namespace

TEST_CASE("op factories fill the right fields") {
  const CircuitOp gate = CircuitOp::make_gate(GateKind::H, 3);
  CHECK(gate.kind == CircuitOp::Kind::Gate);
  CHECK(gate.gate == GateKind::H);
  CHECK(gate.wire == 3);

  const CircuitOp cnot = CircuitOp::make_cnot(4, 0);
  CHECK(cnot.kind == CircuitOp::Kind::Cnot);
  CHECK(cnot.control == 4);
  CHECK(cnot.target == 0);

  const CircuitOp meter = CircuitOp::make_meter(2, BasisKind::Hadamard, "m1");
  CHECK(meter.kind == CircuitOp::Kind::Meter);
  CHECK(meter.wire == 2);
  CHECK(meter.basis == BasisKind::Hadamard);
  CHECK(meter.label == "m1");
}

TEST_CASE("decoder builders produce the documented shapes") {
  for (Convention conv : kAllConventions) {
    const Circuit d1 = build_decoder1(conv);
    CHECK(d1.id == "decoder1");
    CHECK(d1.convention == conv);
    CHECK(d1.width == 2);
    CHECK(d1.meter_labels() == std::vector<std::string>{"m_a", "m_b"});
    d1.validate();

    const Circuit d2 = build_decoder2(conv);
    CHECK(d2.id == "decoder2");
    CHECK(d2.width == 5);
    CHECK(d2.meter_labels() == std::vector<std::string>{"m1", "m2"});
    d2.validate();
  }
  CHECK(build_decoder2(Convention::GH).ops.size() == 18);
  CHECK(build_decoder2(Convention::XPAR).ops.size() == 12);
  CHECK(build_decoder1(Convention::XPAR).ops.size() == 3);
}

TEST_CASE("meter bases follow the convention") {
  CHECK(build_decoder1(Convention::GH).meter_bases() ==
        std::vector<BasisKind>{BasisKind::Hadamard, BasisKind::Hadamard});
  CHECK(build_decoder1(Convention::GC).meter_bases() ==
        std::vector<BasisKind>{BasisKind::Computational,
                               BasisKind::Computational});
  CHECK(build_decoder1(Convention::XPAR).meter_bases() ==
        std::vector<BasisKind>{BasisKind::Computational,
                               BasisKind::Computational});
  CHECK(build_decoder2(Convention::XPAR).meter_bases() ==
        std::vector<BasisKind>{BasisKind::Hadamard, BasisKind::Hadamard});
  CHECK(build_decoder2(Convention::GC).meter_bases() ==
        std::vector<BasisKind>{BasisKind::Computational,
                               BasisKind::Computational});
}

TEST_CASE("serialized circuits match the golden files") {
  for (int decoder : {1, 2}) {
    for (Convention conv : kAllConventions) {
      const Circuit c = decoder == 1 ? build_decoder1(conv) : build_decoder2(conv);
      const std::string name = "decoder" + std::to_string(decoder) + "_" +
                               to_string(conv) + ".txt";
      INFO("golden file ", name);
      CHECK(serialize(c) == read_data_file(name));
    }
  }
}

TEST_CASE("circuit validation rejects malformed programs") {
  Circuit c;
  c.id = "bad";
  c.width = 2;

  c.ops = {CircuitOp::make_gate(GateKind::H, 2)};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  c.ops = {CircuitOp::make_cnot(1, 1)};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  c.ops = {CircuitOp::make_meter(0, BasisKind::Hadamard, "m"),
           CircuitOp::make_meter(1, BasisKind::Hadamard, "m")};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  c.ops = {CircuitOp::make_meter(0, BasisKind::Hadamard, "m"),
           CircuitOp::make_gate(GateKind::X, 0)};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  c.ops = {CircuitOp::make_meter(0, BasisKind::Hadamard, "")};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  // A gate on a still-live wire after measuring another one is fine.
  c.ops = {CircuitOp::make_meter(0, BasisKind::Hadamard, "m"),
           CircuitOp::make_gate(GateKind::X, 1)};
  c.validate();
}

TEST_CASE("branch states and inputs are the four collapse results") {
  CHECK(max_abs_diff(branch_state(BranchState::Psi1),
                     StateVector::named(NamedState::Ket0)) <= kConstantTol);
  CHECK(max_abs_diff(branch_state(BranchState::Psi2),
                     StateVector::named(NamedState::Ket1)) <= kConstantTol);
  CHECK(max_abs_diff(branch_state(BranchState::Psi3),
                     StateVector::named(NamedState::KetPlus)) <= kConstantTol);
  CHECK(max_abs_diff(branch_state(BranchState::Psi4),
                     StateVector::named(NamedState::KetMinus)) <= kConstantTol);

  const StateVector input = branch_input(BranchState::Psi2, 5);
  CHECK(max_abs_diff(input, StateVector::basis_state(5, "10000")) <=
        kConstantTol);
}

TEST_CASE("convention and branch names round trip") {
  for (Convention conv : kAllConventions) {
    CHECK(convention_from_string(to_string(conv)) == conv);
  }
  for (BranchState branch : kAllBranches) {
    CHECK(branch_from_string(to_string(branch)) == branch);
  }
  CHECK_FALSE(convention_from_string("nope").has_value());
  CHECK_FALSE(branch_from_string("psi5").has_value());
}

TEST_CASE("run_exact forks once per meter outcome") {
  Circuit c;
  c.id = "coin";
  c.width = 1;
  c.ops = {CircuitOp::make_gate(GateKind::H, 0),
           CircuitOp::make_meter(0, BasisKind::Computational, "m")};
  const BranchTreeResult result = run_exact(c, StateVector(1));
  REQUIRE(result.paths.size() == 2);
  CHECK(result.paths[0].outcomes == "0");
  CHECK(result.paths[1].outcomes == "1");
  for (const PathRecord& path : result.paths) {
    CHECK(std::abs(path.probability - 0.5) <= kIdentityTol);
    CHECK(path.states.size() == c.ops.size());
    CHECK(std::abs(path.final_state().norm_squared() - 1.0) <= kIdentityTol);
  }
  CHECK(max_abs_diff(result.paths[0].final_state(),
                     StateVector::basis_state(1, "0")) <= kIdentityTol);
  check_distribution(result.joint, {{"0", 0.5}, {"1", 0.5}});
  result.joint.check_normalized();
}

TEST_CASE("the two exact engines agree on every decoder") {
  for (int decoder : {1, 2}) {
    for (Convention conv : kAllConventions) {
      const Circuit c =
          decoder == 1 ? build_decoder1(conv) : build_decoder2(conv);
      for (BranchState branch : kAllBranches) {
        const StateVector input = branch_input(branch, c.width);
        const OutcomeDistribution sv = run_exact(c, input).joint;
        const OutcomeDistribution dm =
            run_exact_density(c, DensityMatrix::from_state(input));
        INFO(c.id, " ", to_string(conv), " ", to_string(branch));
        CHECK(tv_distance(sv, dm) <= kIdentityTol);
      }
    }
  }
}

TEST_CASE("run_sampled is deterministic in the rng key") {
  const Circuit c = build_decoder1(Convention::GC);
  const StateVector input = branch_input(BranchState::Psi3, c.width);
  CounterRng rng_a(3, 1, 4, 1);
  CounterRng rng_b(3, 1, 4, 1);
  const ShotResult a = run_sampled(c, input, rng_a);
  const ShotResult b = run_sampled(c, input, rng_b);
  CHECK(a.key == b.key);
  CHECK(a.outcomes.at("m_a") == a.key[0]);
  CHECK(a.outcomes.at("m_b") == a.key[1]);
  CHECK(std::abs(a.final_state.norm_squared() - 1.0) <= kIdentityTol);
}

TEST_CASE("evolve_unitary matches the pure-state route and rejects meters") {
  const Circuit c = build_decoder2(Convention::XPAR);
  const StateVector input = branch_input(BranchState::Psi3, c.width);
  const std::span<const CircuitOp> prefix(c.ops.data(), 4);

  StateVector sv = input;
  for (const CircuitOp& op : prefix) {
    if (op.kind == CircuitOp::Kind::Gate) {
      sv.apply(op.gate, op.wire);
    } else {
      sv.apply_cnot(op.control, op.target);
    }
  }
  const DensityMatrix evolved =
      evolve_unitary(DensityMatrix::from_state(input), prefix);
  CHECK(max_abs_diff(evolved, DensityMatrix::from_state(sv)) <= kIdentityTol);

  CHECK_THROWS_AS(
      evolve_unitary(DensityMatrix::from_state(input),
                     std::span<const CircuitOp>(c.ops.data(), c.ops.size())),
      std::invalid_argument);
}

TEST_CASE("first readout round restores the data wire") {
  // In the drawn-gates/Hadamard-meters reading, the second CNOT(0,1) undoes
  // the entangling round: the data wire returns to its input branch state
  // while the measured ancilla keeps its outcome.
  const Circuit c = build_decoder2(Convention::GH);
  REQUIRE(c.ops[9].kind == CircuitOp::Kind::Cnot);
  REQUIRE(c.ops[9].control == 0);
  REQUIRE(c.ops[9].target == 1);

  const StateVector ket0 = StateVector::named(NamedState::Ket0);
  for (BranchState branch : kAllBranches) {
    const BranchTreeResult result =
        run_exact(c, branch_input(branch, c.width));
    for (const PathRecord& path : result.paths) {
      const char m1 = path.outcomes[0];
      StateVector expected = branch_state(branch);
      expected = tensor(expected, ket0);
      expected = tensor(expected, StateVector::named(m1 == '+'
                                                         ? NamedState::KetPlus
                                                         : NamedState::KetMinus));
      expected = tensor(expected, ket0);
      expected = tensor(expected, ket0);
      INFO(to_string(branch), " path ", path.outcomes);
      CHECK(equal_up_to_phase(path.states[9], expected));
    }
  }
}

TEST_CASE("the mid-circuit Z exchanges the plus and minus branches") {
  const Circuit c = build_decoder2(Convention::GH);
  REQUIRE(c.ops[10].kind == CircuitOp::Kind::Gate);
  REQUIRE(c.ops[10].gate == GateKind::Z);

  const auto after_z = [](BranchState b) {
    if (b == BranchState::Psi3) return BranchState::Psi4;
    if (b == BranchState::Psi4) return BranchState::Psi3;
    return b;
  };
  const StateVector ket0 = StateVector::named(NamedState::Ket0);
  for (BranchState branch : kAllBranches) {
    const BranchTreeResult result =
        run_exact(c, branch_input(branch, c.width));
    for (const PathRecord& path : result.paths) {
      const char m1 = path.outcomes[0];
      StateVector expected = branch_state(after_z(branch));
      expected = tensor(expected, ket0);
      expected = tensor(expected, StateVector::named(m1 == '+'
                                                         ? NamedState::KetPlus
                                                         : NamedState::KetMinus));
      expected = tensor(expected, ket0);
      expected = tensor(expected, ket0);
      INFO(to_string(branch), " path ", path.outcomes);
      CHECK(equal_up_to_phase(path.states[10], expected));
    }
  }
}

TEST_CASE("parity reading records the two-wire X parity through kickback") {
  // P(m1 = '-') must equal (1 - <s|XX|s>)/2 where s is the two-wire state
  // after the entangling CNOT.
  const Circuit c = build_decoder2(Convention::XPAR);
  for (BranchState branch : kAllBranches) {
    StateVector s = tensor(branch_state(branch),
                           StateVector::named(NamedState::Ket0));
    s.apply_cnot(0, 1);
    StateVector flipped = s;
    flipped.apply(GateKind::X, 0);
    flipped.apply(GateKind::X, 1);
    const double xx = inner_product(s, flipped).real();
    const double predicted_minus = (1.0 - xx) / 2.0;

    const OutcomeDistribution joint =
        run_exact(c, branch_input(branch, c.width)).joint;
    double simulated_minus = 0.0;
    for (const auto& [key, p] : joint.entries()) {
      if (key[0] == '-') simulated_minus += p;
    }
    INFO(to_string(branch));
    CHECK(std::abs(simulated_minus - predicted_minus) <= kIdentityTol);
  }
}

TEST_CASE("computational meters after hadamards equal hadamard meters") {
  // H directly in front of a computational meter is the same event as a
  // Hadamard-basis meter with '+' read as '0' and '-' as '1'.
  const Circuit with_h = build_decoder1(Convention::GC);
  const Circuit bare = bare_parity_circuit(BasisKind::Hadamard);
  for (BranchState branch : kAllBranches) {
    const OutcomeDistribution gc =
        run_exact(with_h, branch_input(branch, with_h.width)).joint;
    const OutcomeDistribution had =
        run_exact(bare, branch_input(branch, bare.width)).joint;
    OutcomeDistribution mapped;
    for (const auto& [key, p] : had.entries()) {
      std::string relabeled = key;
      for (char& ch : relabeled) ch = ch == '+' ? '0' : '1';
      mapped.add(relabeled, p);
    }
    INFO(to_string(branch));
    CHECK(tv_distance(gc, mapped) <= kIdentityTol);
  }
}

TEST_CASE("parity reading of decoder1 is not the gate reading") {
  // Dropping the data-wire Hadamards changes the statistics; the two readings
  // disagree already on the first branch.
  const OutcomeDistribution gc =
      run_exact(build_decoder1(Convention::GC),
                branch_input(BranchState::Psi1, 2))
          .joint;
  const OutcomeDistribution xpar =
      run_exact(build_decoder1(Convention::XPAR),
                branch_input(BranchState::Psi1, 2))
          .joint;
  CHECK(tv_distance(gc, xpar) > 0.5);
}
