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

#include "ergo/group/selfmap.hpp"

#include <cmath>

#include "ergo/core/errors.hpp"

namespace ergo {

namespace selfmap {

bool operator==(const Identity&, const Identity&) { return true; }
bool operator==(const CoordinatewisePower& a, const CoordinatewisePower& b) { return a.num == b.num && a.den == b.den; }
bool operator==(const RingPolynomial& a, const RingPolynomial& b) { return a.coefficients == b.coefficients; }
bool operator==(const Homomorphism& a, const Homomorphism& b) { return a.matrix == b.matrix; }
bool operator==(const Composition& a, const Composition& b) { return a.maps == b.maps; }

}  // namespace selfmap

bool operator==(const GroupSelfMap& a, const GroupSelfMap& b) { return a.v_ == b.v_; }

Integer integer_root(const Integer& m, unsigned k) {
    if (m < 0) throw InvalidInput("integer root of a negative number");
    if (m < 2 || k == 1) return m;
    // float guess, then walk to the exact floor
    const long double guess = std::pow(m.convert_to<long double>(), 1.0L / static_cast<long double>(k));
    Integer r(std::floor(guess));
    if (r < 0) r = 0;
    while (boost::multiprecision::pow(r, k) > m) --r;
    while (boost::multiprecision::pow(r + 1, k) <= m) ++r;
    return r;
}

std::int64_t floor_power(std::int64_t n, std::int64_t num, std::int64_t den) {
    if (den < 1 || num < 1) throw InvalidInput("power exponent must be positive");
    if (n < 0 && den != 1) throw InvalidInput("fractional power of negative coordinate " + std::to_string(n));
    const Integer powered = boost::multiprecision::pow(Integer(n), static_cast<unsigned>(num));
    if (den == 1) return to_int64(powered);
    return to_int64(integer_root(powered, static_cast<unsigned>(den)));
}

GroupSelfMap GroupSelfMap::power(const Rational& exponent) {
    if (exponent <= 1 || exponent > 4) throw InvalidInput("power exponent must lie in (1, 4], got " + to_string(exponent));
    return GroupSelfMap(selfmap::CoordinatewisePower{to_int64(numerator_of(exponent)), to_int64(denominator_of(exponent))});
}

GroupSelfMap GroupSelfMap::ring_polynomial(std::vector<GroupElement> coefficients) {
    while (!coefficients.empty() && coefficients.back().is_zero()) coefficients.pop_back();
    return GroupSelfMap(selfmap::RingPolynomial{std::move(coefficients)});
}

GroupSelfMap GroupSelfMap::homomorphism(std::vector<std::vector<std::int64_t>> matrix) {
    for (const auto& row : matrix)
        if (row.size() != matrix.size()) throw InvalidInput("homomorphism matrix must be square");
    return GroupSelfMap(selfmap::Homomorphism{std::move(matrix)});
}

GroupSelfMap GroupSelfMap::compose(std::vector<GroupSelfMap> maps) {
    if (maps.empty()) return identity();
    if (maps.size() == 1) return maps.front();
    return GroupSelfMap(selfmap::Composition{std::move(maps)});
}

void GroupSelfMap::check(const GroupDescriptor& desc) const {
    std::visit(
        [&](const auto& m) {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, selfmap::CoordinatewisePower>) {
                if (desc.is_torsion()) throw InvalidInput("coordinatewise power needs an integer group, got " + kind_name(desc.kind()));
            } else if constexpr (std::is_same_v<M, selfmap::RingPolynomial>) {
                if (!desc.has_ring()) throw CapabilityError(kind_name(desc.kind()) + " has no ring structure for a ring polynomial");
                for (const auto& c : m.coefficients) desc.validate(c);
            } else if constexpr (std::is_same_v<M, selfmap::Homomorphism>) {
                if (desc.is_finite_rank() && m.matrix.size() > desc.rank())
                    throw InvalidInput("homomorphism matrix larger than the group rank");
            } else if constexpr (std::is_same_v<M, selfmap::Composition>) {
                for (const auto& inner : m.maps) inner.check(desc);
            }
        },
        v_);
}

GroupElement GroupSelfMap::apply(const GroupDescriptor& desc, const GroupElement& g) const {
    desc.validate(g);
    return std::visit(
        [&](const auto& m) -> GroupElement {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, selfmap::Identity>) {
                return g;
            } else if constexpr (std::is_same_v<M, selfmap::CoordinatewisePower>) {
                if (desc.is_torsion()) throw InvalidInput("coordinatewise power needs an integer group");
                std::vector<std::int64_t> out(g.coords());
                for (auto& x : out) x = floor_power(x, m.num, m.den);
                return GroupElement(std::move(out));
            } else if constexpr (std::is_same_v<M, selfmap::RingPolynomial>) {
                check(desc);
                GroupElement acc;
                for (std::size_t j = m.coefficients.size(); j-- > 0;) acc = desc.combine(desc.ring_mul(acc, g), m.coefficients[j]);
                return acc;
            } else if constexpr (std::is_same_v<M, selfmap::Homomorphism>) {
                check(desc);
                const std::size_t r = m.matrix.size();
                std::vector<std::int64_t> out(std::max(r, g.support_end()), 0);
                for (std::size_t i = 0; i < out.size(); ++i) out[i] = g[i];
                for (std::size_t i = 0; i < r; ++i) {
                    if (desc.is_torsion()) {
                        std::int64_t s = 0;
                        for (std::size_t j = 0; j < r; ++j)
                            s = mod_floor(s + mod_floor(m.matrix[i][j], desc.prime()) * g[j] % desc.prime(), desc.prime());
                        out[i] = s;
                    } else {
                        Integer s = 0;
                        for (std::size_t j = 0; j < r; ++j) s += Integer(m.matrix[i][j]) * g[j];
                        out[i] = to_int64(s);
                    }
                }
                return GroupElement(std::move(out));
            } else {
                GroupElement x = g;
                for (const auto& inner : m.maps) x = inner.apply(desc, x);
                return x;
            }
        },
        v_);
}

GroupElement apply_selfmap(const GroupSelfMap& a, const GroupDescriptor& desc, const GroupElement& g) { return a.apply(desc, g); }

}  // namespace ergo
