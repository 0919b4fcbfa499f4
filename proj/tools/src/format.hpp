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

#include <string>

#include "json.hpp"
#include "qsig/circuit.hpp"
#include "qsig/density_matrix.hpp"
#include "qsig/distribution.hpp"
#include "qsig/state_vector.hpp"

namespace qsig::cli {

/// Round-trippable decimal form for CSV cells.
std::string format_double(double value);

/// Ket-sum rendering, e.g. "0.70711|01> - 0.70711|11>"; wire 0 is the
/// leftmost character inside each ket.
std::string render_state(const StateVector& state);

/// "H(0)", "CNOT(0,1)", "METER(2,HAD,m1)".
std::string render_op(const CircuitOp& op);

/// Amplitudes as [[re, im], ...] in basis-index order.
nlohmann::json state_to_json(const StateVector& state);

/// {"outcome": probability, ...}.
nlohmann::json distribution_to_json(const OutcomeDistribution& dist);

/// Row-major [[[re, im], ...], ...].
nlohmann::json density_to_json(const DensityMatrix& rho);

}  // namespace qsig::cli
