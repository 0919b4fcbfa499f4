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

#include <stdexcept>
#include <string>
#include <utility>

namespace qsig {

/// Raised when a state or report breaks one of the library's internal
/// invariants (norm drift, unnormalized distribution, ...). Keeps the name of
/// the violated invariant separate from the detail text so callers can report
/// it on its own.
class InvariantViolation : public std::logic_error {
 public:
  InvariantViolation(std::string invariant, const std::string& detail)
      : std::logic_error(invariant + ": " + detail),
        invariant_(std::move(invariant)) {}

  const std::string& invariant() const noexcept { return invariant_; }

 private:
  std::string invariant_;
};

}  // namespace qsig
