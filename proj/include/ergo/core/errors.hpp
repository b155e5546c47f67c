// Copyright 2026 The ergo authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ergo {

class Error : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Malformed or mismatched input: wrong descriptor, out-of-range parameter,
/// non-canonical element.
class InvalidInput : public Error {
   public:
    using Error::Error;
};

class ParseError : public InvalidInput {
   public:
    using InvalidInput::InvalidInput;
};

/// A finite set or representation would exceed the configured size budget.
class BudgetExceeded : public Error {
   public:
    BudgetExceeded(const std::string& what, std::size_t requested, std::size_t budget)
        : Error(what + ": size " + std::to_string(requested) + " exceeds budget " + std::to_string(budget)),
          requested_(requested),
          budget_(budget) {}

    std::size_t requested() const noexcept { return requested_; }
    std::size_t budget() const noexcept { return budget_; }

   private:
    std::size_t requested_;
    std::size_t budget_;
};

/// The operation is not available for this system variant or input shape.
class CapabilityError : public Error {
   public:
    using Error::Error;
};

/// Desk-scale evidence was insufficient, e.g. too few stabilized checkpoints.
class ConvergenceFailure : public Error {
   public:
    using Error::Error;
};

inline constexpr std::size_t kDefaultBudget = 10'000'000;

}  // namespace ergo
