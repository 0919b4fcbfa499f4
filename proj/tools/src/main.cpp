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

#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "commands.hpp"
#include "qsig/errors.hpp"
#include "qsig/version.hpp"

namespace {

// Exit codes: 0 success, 2 bad arguments, 3 violated runtime invariant.
constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitInvariant = 3;

void add_format_option(CLI::App* cmd, std::string& format) {
  cmd->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"text", "json", "csv"}))
      ->capture_default_str();
}

void add_seed_option(CLI::App* cmd, std::uint64_t& seed) {
  cmd->add_option("--seed", seed, "random stream seed")
      ->envname("QSIG_SEED")
      ->capture_default_str();
}

void add_threads_option(CLI::App* cmd, int& threads) {
  cmd->add_option("--threads", threads,
                  "worker threads; never changes the output bytes")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"simulation and audit toolkit for entangled-pair decoder circuits"};
  app.require_subcommand(1);
  app.set_version_flag("--version", qsig::kVersion);

  qsig::cli::TraceOptions trace_opt;
  CLI::App* trace = app.add_subcommand(
      "trace", "run one decoder branch exactly and print every path");
  trace->add_option("--decoder", trace_opt.decoder, "decoder circuit")
      ->check(CLI::Range(1, 2))
      ->capture_default_str();
  trace->add_option("--convention", trace_opt.convention, "diagram reading")
      ->check(CLI::IsMember({"gh", "gc", "xpar"}))
      ->capture_default_str();
  trace->add_option("--branch", trace_opt.branch, "input branch state")
      ->check(CLI::IsMember({"psi1", "psi2", "psi3", "psi4"}))
      ->capture_default_str();
  add_format_option(trace, trace_opt.format);

  qsig::cli::AuditOptions audit_opt;
  CLI::App* audit = app.add_subcommand(
      "audit", "compare simulated branch tables against the asserted ones");
  audit->add_option("--convention", audit_opt.convention, "diagram reading")
      ->check(CLI::IsMember({"gh", "gc", "xpar", "all"}))
      ->capture_default_str();
  audit->add_option("--pairs", audit_opt.pairs,
                    "largest pair count for the signaling scan")
      ->check(CLI::Range(1, 8))
      ->capture_default_str();
  audit->add_option("--shots", audit_opt.shots,
                    "empirical shots per sent bit (0 = exact only)")
      ->capture_default_str();
  add_seed_option(audit, audit_opt.seed);
  add_threads_option(audit, audit_opt.threads);
  add_format_option(audit, audit_opt.format);

  qsig::cli::ProtocolOptions protocol_opt;
  CLI::App* protocol = app.add_subcommand(
      "protocol", "transmit a bit string through encode, decode and report");
  protocol->add_option("--decoder", protocol_opt.decoder, "decoder circuit")
      ->check(CLI::Range(1, 2))
      ->capture_default_str();
  protocol->add_option("--bits", protocol_opt.bits, "bit string to send")
      ->capture_default_str();
  protocol->add_option("--pairs", protocol_opt.pairs,
                       "entangled pairs per bit (decoder 1)")
      ->check(CLI::Range(1, 30))
      ->capture_default_str();
  protocol->add_option("--convention", protocol_opt.convention,
                       "diagram reading")
      ->check(CLI::IsMember({"gh", "gc", "xpar"}))
      ->capture_default_str();
  protocol->add_option("--mode", protocol_opt.mode, "outcome source")
      ->check(CLI::IsMember({"physical", "claims-faithful"}))
      ->capture_default_str();
  protocol->add_option("--trials", protocol_opt.trials,
                       "repetitions; above 1 only aggregate stats are printed")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  add_seed_option(protocol, protocol_opt.seed);
  add_threads_option(protocol, protocol_opt.threads);
  add_format_option(protocol, protocol_opt.format);

  qsig::cli::BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand(
      "bench", "time gate kernels and check norm drift");
  bench->add_option("--qubits", bench_opt.qubits, "register width")
      ->check(CLI::Range(2, 24))
      ->capture_default_str();
  bench->add_option("--gates", bench_opt.gates, "random gate count")
      ->check(CLI::Range(0, 10000000))
      ->capture_default_str();
  add_seed_option(bench, bench_opt.seed);
  add_format_option(bench, bench_opt.format);

  std::string out;
  try {
    app.parse(argc, argv);
    if (trace->parsed()) out = qsig::cli::run_trace(trace_opt);
    if (audit->parsed()) out = qsig::cli::run_audit(audit_opt);
    if (protocol->parsed()) out = qsig::cli::run_protocol(protocol_opt);
    if (bench->parsed()) out = qsig::cli::run_bench(bench_opt);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const qsig::InvariantViolation& e) {
    std::fprintf(stderr, "invariant violation: %s: %s\n", e.invariant().c_str(),
                 e.what());
    return kExitInvariant;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid arguments: %s\n", e.what());
    return kExitUsage;
  }

  std::fwrite(out.data(), 1, out.size(), stdout);
  return kExitOk;
}
