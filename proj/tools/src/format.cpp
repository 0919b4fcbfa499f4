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

#include "format.hpp"

#include <cmath>
#include <cstdio>

namespace qsig::cli {

namespace {

std::string printf_double(const char* fmt, double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, value);
  return buf;
}

}  // namespace

std::string format_double(double value) {
  return printf_double("%.17g", value);
}

std::string render_state(const StateVector& state) {
  const int n = state.num_qubits();
  std::string out;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const Amplitude a = state.amplitude(i);
    if (std::abs(a) <= 1e-12) continue;

    std::string coef;
    bool negative = false;
    if (std::abs(a.imag()) <= 1e-12) {
      negative = a.real() < 0.0;
      const double mag = std::abs(a.real());
      if (std::abs(mag - 1.0) > 1e-12) coef = printf_double("%.5g", mag);
    } else {
      coef = "(" + printf_double("%.5g", a.real()) +
             printf_double("%+.5g", a.imag()) + "i)";
    }

    std::string bits(static_cast<std::size_t>(n), '0');
    for (int w = 0; w < n; ++w) {
      if (i & state.wire_mask(w)) bits[static_cast<std::size_t>(w)] = '1';
    }

    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += coef + "|" + bits + ">";
  }
  return out.empty() ? "0" : out;
}

std::string render_op(const CircuitOp& op) {
  switch (op.kind) {
    case CircuitOp::Kind::Gate:
      return std::string(to_string(op.gate)) + "(" + std::to_string(op.wire) +
             ")";
    case CircuitOp::Kind::Cnot:
      return "CNOT(" + std::to_string(op.control) + "," +
             std::to_string(op.target) + ")";
    case CircuitOp::Kind::Meter:
      return "METER(" + std::to_string(op.wire) + "," + to_string(op.basis) +
             "," + op.label + ")";
  }
  return "?";
}

nlohmann::json state_to_json(const StateVector& state) {
  nlohmann::json amps = nlohmann::json::array();
  for (const Amplitude& a : state.amplitudes()) {
    amps.push_back({a.real(), a.imag()});
  }
  return amps;
}

nlohmann::json distribution_to_json(const OutcomeDistribution& dist) {
  nlohmann::json obj = nlohmann::json::object();
  for (const auto& [key, p] : dist.entries()) obj[key] = p;
  return obj;
}

nlohmann::json density_to_json(const DensityMatrix& rho) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < rho.dim(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < rho.dim(); ++c) {
      const Amplitude a = rho.entry(r, c);
      row.push_back({a.real(), a.imag()});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace qsig::cli
