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
#include <string>

namespace qsig::cli {

// Each run_* returns the complete output for one invocation; the caller
// writes it in a single shot so partial output never escapes on error.

struct TraceOptions {
  int decoder = 2;
  std::string convention = "gh";
  std::string branch = "psi2";
  std::string format = "text";
};
std::string run_trace(const TraceOptions& opt);

struct AuditOptions {
  std::string convention = "all";
  int pairs = 4;
  std::uint64_t shots = 0;
  std::uint64_t seed = 0;
  int threads = 1;
  std::string format = "text";
};
std::string run_audit(const AuditOptions& opt);

struct ProtocolOptions {
  int decoder = 1;
  std::string bits = "0110";
  int pairs = 1;
  std::string convention = "gh";
  std::string mode = "physical";
  std::uint64_t seed = 0;
  std::uint64_t trials = 1;
  int threads = 1;
  std::string format = "text";
};
std::string run_protocol(const ProtocolOptions& opt);

struct BenchOptions {
  int qubits = 20;
  int gates = 1000;
  std::uint64_t seed = 0;
  std::string format = "text";
};
std::string run_bench(const BenchOptions& opt);

}  // namespace qsig::cli
