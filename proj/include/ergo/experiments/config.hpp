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
#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "ergo/core/errors.hpp"

namespace ergo {

/// One experiment per file: `key = value` lines, '#' starts a comment.
/// Every experiment accepts `experiment`, `seed` and `budget`; the other keys
/// come from its schema and take their defaults when absent.
class ExperimentConfig {
   public:
    static ExperimentConfig defaults(std::string_view experiment);
    static ExperimentConfig parse(std::string_view text);

    const std::string& experiment() const noexcept { return experiment_; }
    std::uint64_t seed() const noexcept { return seed_; }
    std::size_t budget() const noexcept { return budget_; }
    void set_seed(std::uint64_t seed) { seed_ = seed; }
    void set_budget(std::size_t budget);
    /// Rejects keys outside the schema.
    void set(const std::string& key, const std::string& value);

    const std::string& get(const std::string& key) const;
    std::int64_t get_int(const std::string& key) const;
    double get_double(const std::string& key) const;
    bool get_bool(const std::string& key) const;

    /// Schema keys with current values, sorted.
    const std::map<std::string, std::string>& values() const noexcept { return values_; }
    /// Canonical text; parse(to_text()) reproduces the config.
    std::string to_text() const;

    friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;

   private:
    std::string experiment_;
    std::uint64_t seed_ = 0;
    std::size_t budget_ = kDefaultBudget;
    std::map<std::string, std::string> values_;
};

std::vector<std::string> experiment_names();
/// Schema keys and defaults of one experiment; InvalidInput for unknown names.
const std::map<std::string, std::string>& experiment_schema(std::string_view experiment);

}  // namespace ergo
