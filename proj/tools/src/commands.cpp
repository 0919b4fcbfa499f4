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

#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>
#include <vector>

#include "format.hpp"
#include "json.hpp"
#include "qsig/audit.hpp"
#include "qsig/protocol.hpp"
#include "qsig/version.hpp"

namespace qsig::cli {

namespace {

using nlohmann::json;

enum class Format { Text, Json, Csv };

Format parse_format(const std::string& name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw std::invalid_argument("format must be text, json, or csv");
}

Convention parse_convention(const std::string& name) {
  const auto conv = convention_from_string(name);
  if (!conv) throw std::invalid_argument("unknown convention: " + name);
  return *conv;
}

BranchState parse_branch(const std::string& name) {
  const auto branch = branch_from_string(name);
  if (!branch) throw std::invalid_argument("unknown branch: " + name);
  return *branch;
}

void require_decoder(int decoder) {
  if (decoder != 1 && decoder != 2) {
    throw std::invalid_argument("decoder must be 1 or 2");
  }
}

std::string text_double(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

std::string join(const std::vector<std::string>& parts,
                 const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += sep;
    out += parts[i];
  }
  return out;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string csv_table(const std::string& header,
                      const std::vector<std::string>& rows) {
  std::string out = header + "\n";
  for (const std::string& row : rows) out += row + "\n";
  return out;
}

}  // namespace

std::string run_trace(const TraceOptions& opt) {
  const Format format = parse_format(opt.format);
  require_decoder(opt.decoder);
  const Convention conv = parse_convention(opt.convention);
  const BranchState branch = parse_branch(opt.branch);
  const Circuit circuit =
      opt.decoder == 1 ? build_decoder1(conv) : build_decoder2(conv);
  const StateVector input = branch_input(branch, circuit.width);
  const BranchTreeResult result = run_exact(circuit, input);
  const std::vector<std::string> labels = circuit.meter_labels();

  if (format == Format::Json) {
    json ops = json::array();
    for (const CircuitOp& op : circuit.ops) ops.push_back(render_op(op));
    json paths = json::array();
    for (const PathRecord& path : result.paths) {
      json outcomes = json::object();
      for (std::size_t m = 0; m < labels.size(); ++m) {
        outcomes[labels[m]] = std::string(1, path.outcomes[m]);
      }
      paths.push_back({{"outcomes", outcomes},
                       {"probability", path.probability},
                       {"final_state", state_to_json(path.final_state())}});
    }
    return dump({{"version", kVersion},
                 {"config",
                  {{"command", "trace"},
                   {"decoder", opt.decoder},
                   {"convention", opt.convention},
                   {"branch", opt.branch},
                   {"format", opt.format}}},
                 {"circuit",
                  {{"id", circuit.id},
                   {"convention", to_string(circuit.convention)},
                   {"width", circuit.width},
                   {"ops", ops}}},
                 {"input", state_to_json(input)},
                 {"joint", distribution_to_json(result.joint)},
                 {"paths", paths}});
  }

  if (format == Format::Csv) {
    std::vector<std::string> rows;
    for (std::size_t p = 0; p < result.paths.size(); ++p) {
      rows.push_back(std::to_string(p + 1) + "," + result.paths[p].outcomes +
                     "," + format_double(result.paths[p].probability));
    }
    return csv_table("path,outcomes,probability", rows);
  }

  std::string out = "trace " + circuit.id + " convention=" + opt.convention +
                    " branch=" + opt.branch +
                    " width=" + std::to_string(circuit.width) + "\n";
  out += "input: " + render_state(input) + "\n";
  for (const PathRecord& path : result.paths) {
    out += "path";
    for (std::size_t m = 0; m < labels.size(); ++m) {
      out += " " + labels[m] + "=" + std::string(1, path.outcomes[m]);
    }
    out += " probability=" + text_double(path.probability) + "\n";
    for (std::size_t i = 0; i < circuit.ops.size(); ++i) {
      out += "  after " + render_op(circuit.ops[i]) + ": " +
             render_state(path.states[i]) + "\n";
    }
  }
  return out;
}

namespace {

struct AuditData {
  struct TableEntry {
    BranchTable table;
    double cross_check_max_tv = 0.0;
    MatchReport report;
  };
  std::vector<TableEntry> tables;
  std::vector<SignalingReport> signaling;
  ReducedStateReport reduced;
};

AuditData collect_audit(const AuditOptions& opt,
                        const std::vector<Convention>& conventions) {
  AuditData data{{}, {}, reduced_state_report()};
  for (int decoder : {1, 2}) {
    for (Convention conv : conventions) {
      AuditData::TableEntry entry;
      entry.table = branch_table(decoder, conv, PathKind::StateVector);
      const BranchTable density = branch_table(decoder, conv, PathKind::Density);
      for (const auto& [branch, dist] : entry.table.rows) {
        entry.cross_check_max_tv = std::max(
            entry.cross_check_max_tv, tv_distance(dist, density.rows.at(branch)));
      }
      entry.report = compare_claims(entry.table, claims_for(decoder));
      data.tables.push_back(std::move(entry));

      const int k_max = decoder == 1 ? opt.pairs : 1;
      for (int k = 1; k <= k_max; ++k) {
        data.signaling.push_back(signaling_report(decoder, conv, k, opt.shots,
                                                  opt.seed, opt.threads));
      }
    }
  }
  return data;
}

bool all_match(const MatchReport& report) {
  for (const MatchEntry& entry : report.entries) {
    if (entry.verdict != Verdict::Match) return false;
  }
  return true;
}

json claims_to_json() {
  json claims = json::array();
  for (int decoder : {1, 2}) {
    const ClaimTable& table = claims_for(decoder);
    json rows = json::object();
    for (const ClaimRow& row : table.rows) rows[to_string(row.branch)] = row.allowed;
    claims.push_back({{"circuit", table.circuit_id},
                      {"provenance", table.provenance},
                      {"rows", rows}});
  }
  return claims;
}

json audit_to_json(const AuditOptions& opt, const AuditData& data) {
  json tables = json::array();
  json reports = json::array();
  for (const auto& entry : data.tables) {
    json rows = json::object();
    for (const auto& [branch, dist] : entry.table.rows) {
      rows[to_string(branch)] = distribution_to_json(dist);
    }
    tables.push_back(
        {{"circuit", entry.table.circuit_id},
         {"convention", to_string(entry.table.convention)},
         {"rows", rows},
         {"density_cross_check_max_tv", entry.cross_check_max_tv}});

    json entries = json::array();
    for (const MatchEntry& m : entry.report.entries) {
      entries.push_back({{"branch", to_string(m.branch)},
                         {"verdict", to_string(m.verdict)},
                         {"claimed", m.claimed},
                         {"simulated", distribution_to_json(m.simulated)},
                         {"mass_on_claimed", m.mass_on_claimed},
                         {"max_prob_outside_claimed", m.max_prob_outside_claimed}});
    }
    reports.push_back({{"circuit", entry.report.circuit_id},
                       {"convention", to_string(entry.report.convention)},
                       {"provenance", entry.report.provenance},
                       {"all_match", all_match(entry.report)},
                       {"entries", entries}});
  }

  json signaling = json::array();
  for (const SignalingReport& rep : data.signaling) {
    json row = {{"circuit", rep.circuit_id},
                {"convention", to_string(rep.convention)},
                {"pairs_per_bit", rep.pairs_per_bit},
                {"tv_exact", rep.tv_exact},
                {"mi_exact", rep.mi_exact}};
    if (rep.has_empirical) {
      row["shots"] = rep.shots;
      row["tv_empirical"] = rep.tv_empirical;
      row["mi_empirical"] = rep.mi_empirical;
      row["tv_bound"] = rep.tv_bound;
      row["within_bound"] = rep.within_bound;
    }
    signaling.push_back(std::move(row));
  }

  return {{"version", kVersion},
          {"config",
           {{"command", "audit"},
            {"convention", opt.convention},
            {"pairs", opt.pairs},
            {"shots", opt.shots},
            {"seed", opt.seed},
            {"format", opt.format}}},
          {"claims", claims_to_json()},
          {"branch_tables", tables},
          {"match_reports", reports},
          {"signaling", signaling},
          {"reduced_states",
           {{"s1", density_to_json(data.reduced.s1)},
            {"s2", density_to_json(data.reduced.s2)},
            {"max_abs_diff", data.reduced.max_abs_diff}}}};
}

std::string audit_to_csv(const AuditData& data) {
  std::vector<std::string> rows;
  for (int decoder : {1, 2}) {
    const ClaimTable& table = claims_for(decoder);
    for (const ClaimRow& row : table.rows) {
      rows.push_back("claims," + table.circuit_id + ",," +
                     to_string(row.branch) + ",allowed," +
                     join(row.allowed, " "));
    }
  }
  for (const auto& entry : data.tables) {
    const std::string id = entry.table.circuit_id;
    const std::string conv = to_string(entry.table.convention);
    for (const auto& [branch, dist] : entry.table.rows) {
      for (const auto& [key, p] : dist.entries()) {
        rows.push_back("branch_table," + id + "," + conv + "," +
                       to_string(branch) + "," + key + "," + format_double(p));
      }
    }
    rows.push_back("branch_table," + id + "," + conv +
                   ",,density_cross_check_max_tv," +
                   format_double(entry.cross_check_max_tv));
    for (const MatchEntry& m : entry.report.entries) {
      const std::string prefix =
          "match," + id + "," + conv + "," + to_string(m.branch) + ",";
      rows.push_back(prefix + "verdict," + to_string(m.verdict));
      rows.push_back(prefix + "mass_on_claimed," +
                     format_double(m.mass_on_claimed));
      rows.push_back(prefix + "max_prob_outside_claimed," +
                     format_double(m.max_prob_outside_claimed));
    }
    rows.push_back("match," + id + "," + conv + ",,all_match," +
                   (all_match(entry.report) ? "true" : "false"));
  }
  for (const SignalingReport& rep : data.signaling) {
    const std::string prefix = "signaling," + rep.circuit_id + "," +
                               to_string(rep.convention) + ",k" +
                               std::to_string(rep.pairs_per_bit) + ",";
    rows.push_back(prefix + "tv_exact," + format_double(rep.tv_exact));
    rows.push_back(prefix + "mi_exact," + format_double(rep.mi_exact));
    if (rep.has_empirical) {
      rows.push_back(prefix + "shots," + std::to_string(rep.shots));
      rows.push_back(prefix + "tv_empirical," + format_double(rep.tv_empirical));
      rows.push_back(prefix + "mi_empirical," + format_double(rep.mi_empirical));
      rows.push_back(prefix + "tv_bound," + format_double(rep.tv_bound));
      rows.push_back(prefix + "within_bound," +
                     (rep.within_bound ? "true" : "false"));
    }
  }
  rows.push_back("reduced_states,,,,max_abs_diff," +
                 format_double(data.reduced.max_abs_diff));
  return csv_table("section,circuit,convention,branch,key,value", rows);
}

std::string audit_to_text(const AuditOptions& opt, const AuditData& data) {
  std::string out = "audit convention=" + opt.convention +
                    " pairs=" + std::to_string(opt.pairs) +
                    " shots=" + std::to_string(opt.shots) +
                    " seed=" + std::to_string(opt.seed) + "\n";
  out += "version " + std::string(kVersion) + "\n\n";

  for (int decoder : {1, 2}) {
    const ClaimTable& table = claims_for(decoder);
    out += "claims " + table.circuit_id + " provenance=" + table.provenance +
           "\n";
    for (const ClaimRow& row : table.rows) {
      out += "  " + std::string(to_string(row.branch)) + ": " +
             join(row.allowed, " ") + "\n";
    }
  }
  out += "\n";

  for (const auto& entry : data.tables) {
    out += "branch-table " + entry.table.circuit_id +
           " convention=" + to_string(entry.table.convention) +
           " cross-check-max-tv=" + text_double(entry.cross_check_max_tv) +
           "\n";
    for (const auto& [branch, dist] : entry.table.rows) {
      out += "  " + std::string(to_string(branch)) + ":";
      for (const auto& [key, p] : dist.entries()) {
        out += " " + key + "=" + text_double(p);
      }
      out += "\n";
    }
    out += "match " + entry.report.circuit_id +
           " convention=" + to_string(entry.report.convention) +
           " all-match=" + (all_match(entry.report) ? "yes" : "no") + "\n";
    for (const MatchEntry& m : entry.report.entries) {
      out += "  " + std::string(to_string(m.branch)) + ": " +
             to_string(m.verdict) + " mass=" + text_double(m.mass_on_claimed) +
             " claimed=[" + join(m.claimed, " ") + "]";
      if (m.verdict == Verdict::Mismatch) {
        out += " max-outside=" + text_double(m.max_prob_outside_claimed);
      }
      out += "\n";
    }
  }
  out += "\n";

  for (const SignalingReport& rep : data.signaling) {
    out += "signaling " + rep.circuit_id +
           " convention=" + to_string(rep.convention) +
           " k=" + std::to_string(rep.pairs_per_bit) +
           ": tv=" + text_double(rep.tv_exact) +
           " mi=" + text_double(rep.mi_exact);
    if (rep.has_empirical) {
      out += " shots=" + std::to_string(rep.shots) +
             " tv-empirical=" + text_double(rep.tv_empirical) +
             " tv-bound=" + text_double(rep.tv_bound) +
             " within-bound=" + (rep.within_bound ? "yes" : "no");
    }
    out += "\n";
  }
  out += "\nreduced-states max-abs-diff=" +
         text_double(data.reduced.max_abs_diff) + "\n";
  return out;
}

}  // namespace

std::string run_audit(const AuditOptions& opt) {
  const Format format = parse_format(opt.format);
  if (opt.pairs < 1) throw std::invalid_argument("pairs must be at least 1");
  std::vector<Convention> conventions;
  if (opt.convention == "all") {
    conventions.assign(std::begin(kAllConventions), std::end(kAllConventions));
  } else {
    conventions.push_back(parse_convention(opt.convention));
  }
  const AuditData data = collect_audit(opt, conventions);
  if (format == Format::Json) return dump(audit_to_json(opt, data));
  if (format == Format::Csv) return audit_to_csv(data);
  return audit_to_text(opt, data);
}

namespace {

SessionConfig session_config(const ProtocolOptions& opt) {
  SessionConfig config;
  config.pairs_per_bit = opt.pairs;
  config.convention = parse_convention(opt.convention);
  if (opt.mode == "physical") {
    config.mode = Mode::Physical;
  } else if (opt.mode == "claims-faithful") {
    config.mode = Mode::ClaimsFaithful;
  } else {
    throw std::invalid_argument("mode must be physical or claims-faithful");
  }
  config.seed = opt.seed;
  return config;
}

json protocol_config_json(const ProtocolOptions& opt) {
  return {{"command", "protocol"}, {"decoder", opt.decoder},
          {"bits", opt.bits},     {"pairs", opt.pairs},
          {"convention", opt.convention}, {"mode", opt.mode},
          {"seed", opt.seed},     {"trials", opt.trials},
          {"format", opt.format}};
}

std::vector<std::string> branch_names(const BitRecord& rec) {
  std::vector<std::string> names;
  for (BranchState b : rec.branches) names.emplace_back(to_string(b));
  return names;
}

std::string protocol_header(const ProtocolOptions& opt) {
  return "protocol decoder=" + std::to_string(opt.decoder) +
         " convention=" + opt.convention + " mode=" + opt.mode +
         " pairs=" + std::to_string(opt.pairs) +
         " seed=" + std::to_string(opt.seed) +
         " trials=" + std::to_string(opt.trials) + "\n";
}

}  // namespace

std::string run_protocol(const ProtocolOptions& opt) {
  const Format format = parse_format(opt.format);
  require_decoder(opt.decoder);
  const SessionConfig config = session_config(opt);

  if (opt.trials > 1) {
    const SessionStats stats =
        run_trials(config, opt.bits, opt.decoder, opt.trials, opt.threads);
    if (format == Format::Json) {
      json j = {{"version", kVersion},
                {"config", protocol_config_json(opt)},
                {"trials", stats.trials},
                {"bits_per_trial", stats.bits_per_trial},
                {"bit_errors", stats.bit_errors},
                {"error_rate", stats.error_rate}};
      if (opt.decoder == 1) j["error_bound"] = error_bound(opt.pairs);
      return dump(j);
    }
    if (format == Format::Csv) {
      std::vector<std::string> rows = {
          "trials," + std::to_string(stats.trials),
          "bits_per_trial," + std::to_string(stats.bits_per_trial),
          "bit_errors," + std::to_string(stats.bit_errors),
          "error_rate," + format_double(stats.error_rate)};
      if (opt.decoder == 1) {
        rows.push_back("error_bound," + format_double(error_bound(opt.pairs)));
      }
      return csv_table("key,value", rows);
    }
    std::string out = protocol_header(opt);
    const std::uint64_t total = stats.trials * stats.bits_per_trial;
    out += "bit errors: " + std::to_string(stats.bit_errors) + " / " +
           std::to_string(total) + "\n";
    out += "error rate: " + text_double(stats.error_rate) + "\n";
    if (opt.decoder == 1) {
      out += "error bound: " + text_double(error_bound(opt.pairs)) + "\n";
    }
    return out;
  }

  const Transcript transcript = run_session(config, opt.bits, opt.decoder);
  std::uint64_t errors = 0;
  for (std::size_t i = 0; i < transcript.sent_bits.size(); ++i) {
    if (transcript.sent_bits[i] != transcript.decoded_bits[i]) ++errors;
  }

  if (format == Format::Json) {
    json bits = json::array();
    for (const BitRecord& rec : transcript.bits) {
      bits.push_back({{"sent", rec.sent},
                      {"decoded", rec.decoded},
                      {"branches", branch_names(rec)},
                      {"outcomes", rec.outcomes},
                      {"alice", rec.alice_outcomes}});
    }
    return dump({{"version", kVersion},
                 {"config", protocol_config_json(opt)},
                 {"sent", transcript.sent_bits},
                 {"decoded", transcript.decoded_bits},
                 {"bit_errors", errors},
                 {"bits", bits}});
  }

  if (format == Format::Csv) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < transcript.bits.size(); ++i) {
      const BitRecord& rec = transcript.bits[i];
      rows.push_back(std::to_string(i) + "," + std::to_string(rec.sent) + "," +
                     std::to_string(rec.decoded) + "," +
                     join(branch_names(rec), " ") + "," +
                     join(rec.outcomes, " ") + "," +
                     join(rec.alice_outcomes, " "));
    }
    return csv_table("bit,sent,decoded,branches,outcomes,alice", rows);
  }

  std::string out = protocol_header(opt);
  out += "sent:    " + transcript.sent_bits + "\n";
  out += "decoded: " + transcript.decoded_bits + "\n";
  out += "errors:  " + std::to_string(errors) + "\n";
  for (std::size_t i = 0; i < transcript.bits.size(); ++i) {
    const BitRecord& rec = transcript.bits[i];
    out += "bit " + std::to_string(i) + ": sent=" + std::to_string(rec.sent) +
           " decoded=" + std::to_string(rec.decoded) +
           " branches=" + join(branch_names(rec), ",") +
           " outcomes=" + join(rec.outcomes, ",");
    if (!rec.alice_outcomes.empty()) {
      out += " alice=" + join(rec.alice_outcomes, ",");
    }
    out += "\n";
  }
  return out;
}

std::string run_bench(const BenchOptions& opt) {
  const Format format = parse_format(opt.format);
  if (opt.qubits < 2 || opt.qubits > StateVector::kMaxQubits) {
    throw std::invalid_argument("qubits must lie in [2, 24]");
  }
  if (opt.gates < 0) throw std::invalid_argument("gates must be nonnegative");

  using clock = std::chrono::steady_clock;
  StateVector state(opt.qubits);

  const auto h_start = clock::now();
  state.apply(GateKind::H, 0);
  const double h_seconds = std::chrono::duration<double>(clock::now() - h_start).count();

  const auto cnot_start = clock::now();
  state.apply_cnot(0, 1);
  const double cnot_seconds =
      std::chrono::duration<double>(clock::now() - cnot_start).count();

  CounterRng rng(opt.seed, 0xBE9C11, 0, 0);
  const auto mix_start = clock::now();
  for (int g = 0; g < opt.gates; ++g) {
    const std::size_t pick = rng.next_index(4);
    const int wire = static_cast<int>(rng.next_index(
        static_cast<std::size_t>(opt.qubits)));
    if (pick == 3) {
      const int target = (wire + 1 + static_cast<int>(rng.next_index(
                              static_cast<std::size_t>(opt.qubits - 1)))) %
                         opt.qubits;
      state.apply_cnot(wire, target);
    } else {
      const GateKind gate =
          pick == 0 ? GateKind::H : (pick == 1 ? GateKind::X : GateKind::Z);
      state.apply(gate, wire);
    }
  }
  const double mix_seconds =
      std::chrono::duration<double>(clock::now() - mix_start).count();
  const double drift = std::abs(state.norm_squared() - 1.0);

  if (format == Format::Json) {
    return dump({{"version", kVersion},
                 {"config",
                  {{"command", "bench"},
                   {"qubits", opt.qubits},
                   {"gates", opt.gates},
                   {"seed", opt.seed},
                   {"format", opt.format}}},
                 {"results",
                  {{"h_seconds", h_seconds},
                   {"cnot_seconds", cnot_seconds},
                   {"random_gate_count", opt.gates},
                   {"random_gate_seconds", mix_seconds},
                   {"norm_drift", drift}}}});
  }
  if (format == Format::Csv) {
    return csv_table("key,value",
                     {"qubits," + std::to_string(opt.qubits),
                      "h_seconds," + format_double(h_seconds),
                      "cnot_seconds," + format_double(cnot_seconds),
                      "random_gate_count," + std::to_string(opt.gates),
                      "random_gate_seconds," + format_double(mix_seconds),
                      "norm_drift," + format_double(drift)});
  }
  std::string out = "bench qubits=" + std::to_string(opt.qubits) +
                    " gates=" + std::to_string(opt.gates) +
                    " seed=" + std::to_string(opt.seed) + "\n";
  out += "H(0): " + text_double(h_seconds) + " s\n";
  out += "CNOT(0,1): " + text_double(cnot_seconds) + " s\n";
  out += "random gates: " + std::to_string(opt.gates) + " in " +
         text_double(mix_seconds) + " s\n";
  out += "norm drift: " + text_double(drift) + "\n";
  return out;
}

}  // namespace qsig::cli
