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

#include "qsig/distribution.hpp"

#include <cmath>
#include <string>

#include "qsig/errors.hpp"

namespace qsig {

double OutcomeDistribution::probability(const std::string& key) const {
  const auto it = entries_.find(key);
  return it == entries_.end() ? 0.0 : it->second;
}

double OutcomeDistribution::total() const {
  double sum = 0.0;
  for (const auto& [key, p] : entries_) sum += p;
  return sum;
}

void OutcomeDistribution::check_normalized(double tol) const {
  for (const auto& [key, p] : entries_) {
    if (p < -tol) {
      throw InvariantViolation("distribution-normalization",
                               "negative mass on key '" + key + "'");
    }
  }
  const double sum = total();
  if (std::abs(sum - 1.0) > tol) {
    throw InvariantViolation(
        "distribution-normalization",
        "total mass " + std::to_string(sum) + " differs from 1");
  }
}

double tv_distance(const OutcomeDistribution& p, const OutcomeDistribution& q) {
  double sum = 0.0;
  for (const auto& [key, pp] : p.entries()) {
    sum += std::abs(pp - q.probability(key));
  }
  for (const auto& [key, qq] : q.entries()) {
    if (!p.entries().contains(key)) sum += std::abs(qq);
  }
  return 0.5 * sum;
}

OutcomeDistribution product(const OutcomeDistribution& a,
                            const OutcomeDistribution& b) {
  OutcomeDistribution out;
  for (const auto& [ka, pa] : a.entries()) {
    for (const auto& [kb, pb] : b.entries()) {
      out.add(ka + kb, pa * pb);
    }
  }
  return out;
}

OutcomeDistribution mix(const OutcomeDistribution& a, double wa,
                        const OutcomeDistribution& b, double wb) {
  OutcomeDistribution out;
  for (const auto& [key, p] : a.entries()) out.add(key, wa * p);
  for (const auto& [key, p] : b.entries()) out.add(key, wb * p);
  return out;
}

}  // namespace qsig
