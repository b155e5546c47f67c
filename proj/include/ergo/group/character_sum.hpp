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
#include <cstddef>
#include <optional>

#include "ergo/group/character.hpp"
#include "ergo/group/cyclotomic.hpp"
#include "ergo/group/folner.hpp"
#include "ergo/group/selfmap.hpp"

namespace ergo {

/// sum_{g in F} chi(a(g+h) - a(g)) together with |F|.
struct CharacterSum {
    std::size_t count = 0;
    /// Present when the character modulus is 1, 2 or an odd prime.
    std::optional<CyclotomicValue> exact;
    std::complex<double> approx;

    bool is_exact() const noexcept { return exact.has_value(); }
    /// exact / |F| in Q(zeta_q).
    std::optional<CyclotomicRational> exact_average() const;
    std::complex<double> average() const { return approx / static_cast<double>(count); }
    /// Exact zero test; throws CapabilityError without an exact value.
    bool is_zero() const;
};

CharacterSum character_sum(const Character& chi, const GroupSelfMap& a, const GroupElement& h, const FolnerWindow& window);
CharacterSum character_sum(const Character& chi, const GroupSelfMap& a, const GroupElement& h, const FolnerFamily& family,
                           std::int64_t n, std::size_t budget = kDefaultBudget);

/// Sum over F of e(k_g / q) from a histogram of exponents.
CharacterSum sum_from_counts(const std::vector<std::int64_t>& counts, std::int64_t modulus, std::size_t total);

}  // namespace ergo
