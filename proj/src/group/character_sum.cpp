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

#include "ergo/group/character_sum.hpp"

#include <map>

#include "ergo/core/errors.hpp"

namespace ergo {

std::optional<CyclotomicRational> CharacterSum::exact_average() const {
    if (!exact) return std::nullopt;
    return to_rational(*exact) / Rational(static_cast<long long>(count));
}

bool CharacterSum::is_zero() const {
    if (!exact) throw CapabilityError("character sum has no exact value");
    return exact->is_zero();
}

CharacterSum sum_from_counts(const std::vector<std::int64_t>& counts, std::int64_t modulus, std::size_t total) {
    CharacterSum out;
    out.count = total;
    const auto q = static_cast<std::size_t>(modulus);
    if (modulus == 1) {
        out.exact = CyclotomicValue::constant(1, counts[0]);
    } else if (modulus == 2) {
        out.exact = CyclotomicValue::constant(1, counts[0] - counts[1]);
    } else if (is_odd_prime(modulus)) {
        out.exact = CyclotomicValue(modulus, counts);
    }
    std::complex<double> acc = 0.0;
    for (std::size_t k = 0; k < q; ++k)
        if (counts[k] != 0) acc += static_cast<double>(counts[k]) * CharValue{static_cast<std::int64_t>(k), modulus}.to_complex();
    out.approx = out.exact ? std::complex<double>(out.exact->to_complex()) : acc;
    return out;
}

CharacterSum character_sum(const Character& chi, const GroupSelfMap& a, const GroupElement& h, const FolnerWindow& window) {
    const auto& desc = window.descriptor();
    require_same(chi.descriptor(), desc, "character_sum");
    desc.validate(h);
    a.check(desc);
    const std::int64_t q = chi.modulus();
    if (q > (std::int64_t{1} << 24)) {
        // sparse histogram for large moduli
        std::map<std::int64_t, std::int64_t> hist;
        window.for_each([&](const GroupElement& g) {
            const GroupElement diff = desc.subtract(a.apply(desc, desc.combine(g, h)), a.apply(desc, g));
            ++hist[chi.eval(diff).exponent];
        });
        CharacterSum out;
        out.count = window.size();
        std::complex<double> acc = 0.0;
        for (const auto& [k, c] : hist) acc += static_cast<double>(c) * CharValue{k, q}.to_complex();
        out.approx = acc;
        return out;
    }
    std::vector<std::int64_t> counts(static_cast<std::size_t>(q), 0);
    window.for_each([&](const GroupElement& g) {
        const GroupElement diff = desc.subtract(a.apply(desc, desc.combine(g, h)), a.apply(desc, g));
        ++counts[static_cast<std::size_t>(chi.eval(diff).exponent)];
    });
    return sum_from_counts(counts, q, window.size());
}

CharacterSum character_sum(const Character& chi, const GroupSelfMap& a, const GroupElement& h, const FolnerFamily& family,
                           std::int64_t n, std::size_t budget) {
    return character_sum(chi, a, h, family.window(n, budget));
}

}  // namespace ergo
