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

#include <cstddef>
#include <map>
#include <string>

namespace qsig {

/// Probability distribution over measurement outcome tuples.
///
/// A key packs one label character per measured wire, in meter order:
/// computational outcomes use '0'/'1', Hadamard-basis outcomes '+'/'-'.
/// Joint distributions over repeated runs concatenate keys. Entries are kept
/// in a sorted map so iteration order (and any serialization built on it) is
/// deterministic.
class OutcomeDistribution {
 public:
  OutcomeDistribution() = default;

  /// Accumulates probability mass on a key.
  void add(const std::string& key, double p) { entries_[key] += p; }

  /// Probability of a key; absent keys read as zero.
  double probability(const std::string& key) const;

  const std::map<std::string, double>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }

  double total() const;

  /// Throws InvariantViolation("distribution-normalization") unless all masses
  /// are nonnegative and sum to 1 within tol.
  void check_normalized(double tol = 1e-12) const;

 private:
  std::map<std::string, double> entries_;
};

/// Total variation distance: 0.5 * sum |p - q| over the union of supports.
double tv_distance(const OutcomeDistribution& p, const OutcomeDistribution& q);

/// Joint distribution of two independent draws; keys concatenate.
OutcomeDistribution product(const OutcomeDistribution& a,
                            const OutcomeDistribution& b);

/// Two-component mixture wa*a + wb*b.
OutcomeDistribution mix(const OutcomeDistribution& a, double wa,
                        const OutcomeDistribution& b, double wb);

}  // namespace qsig
