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

#include <sys/wait.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <string>
#include <vector>

#include "doctest.h"
#include "qsig/distribution.hpp"
#include "qsig/rng.hpp"
#include "qsig/state_vector.hpp"

namespace qsig::test {

inline void check_distribution(const OutcomeDistribution& got,
                               const std::map<std::string, double>& want,
                               double tol = 1e-12) {
  CHECK(got.entries().size() == want.size());
  for (const auto& [key, p] : want) {
    INFO("outcome ", key);
    CHECK(std::abs(got.probability(key) - p) <= tol);
  }
}

/// wa*a + wb*b, not renormalized.
inline StateVector superpose(const StateVector& a, const StateVector& b,
                             Amplitude wa, Amplitude wb) {
  REQUIRE(a.num_qubits() == b.num_qubits());
  std::vector<Amplitude> amps(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    amps[i] = wa * a.amplitude(i) + wb * b.amplitude(i);
  }
  return StateVector::from_amplitudes(a.num_qubits(), std::move(amps));
}

/// Normalized state with keyed pseudo-random real amplitudes.
inline StateVector random_state(int num_qubits, CounterRng& rng) {
  std::vector<Amplitude> amps(std::size_t{1} << num_qubits);
  double norm2 = 0.0;
  for (Amplitude& a : amps) {
    a = Amplitude(rng.next_double() - 0.5, rng.next_double() - 0.5);
    norm2 += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm2);
  for (Amplitude& a : amps) a *= scale;
  return StateVector::from_amplitudes(num_qubits, std::move(amps));
}

struct CliResult {
  int exit_code = -1;
  std::string output;
};

/// Runs the CLI under test (path from QSIG_CLI_BIN) and captures stdout.
/// `env` is prepended verbatim, e.g. "QSIG_SEED=7".
inline CliResult run_cli(const std::string& args, const std::string& env = "") {
  const char* bin = std::getenv("QSIG_CLI_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "QSIG_CLI_BIN must point at the built CLI");
  std::string cmd = env.empty() ? std::string() : env + " ";
  cmd += std::string(bin) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  CliResult result;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) result.output.append(buf, n);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

}  // namespace qsig::test
