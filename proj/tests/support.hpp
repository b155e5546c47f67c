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

#include <complex>
#include <cstdint>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "ergo/group/group.hpp"

namespace ergo::testing {

/// Seed for property suites: ERGO_SEED when set, else the value stored by the runner.
std::uint64_t& property_seed();

inline std::uint64_t seed_from_env(std::uint64_t fallback = 0) {
    const char* s = std::getenv("ERGO_SEED");
    return s ? std::strtoull(s, nullptr, 10) : fallback;
}

inline std::mt19937_64 rng_for(std::uint64_t salt) { return std::mt19937_64(property_seed() * 0x9E3779B97F4A7C15ULL + salt); }

inline std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

/// A random canonical element with support in the first `len` coordinates.
inline GroupElement random_element(const GroupDescriptor& d, std::mt19937_64& rng, std::size_t len = 4, std::int64_t span = 20) {
    std::size_t n = d.is_finite_rank() ? d.rank() : len;
    std::vector<std::int64_t> c(n);
    for (auto& x : c) x = d.is_torsion() ? uniform(rng, 0, d.prime() - 1) : uniform(rng, -span, span);
    return d.reduce(std::move(c));
}

inline std::complex<double> cis(double turns) {
    const double a = 2.0 * 3.14159265358979323846 * turns;
    return {std::cos(a), std::sin(a)};
}

}  // namespace ergo::testing
