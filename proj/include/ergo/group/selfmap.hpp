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

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "ergo/core/rational.hpp"
#include "ergo/group/group.hpp"

namespace ergo {

class GroupSelfMap;

namespace selfmap {

struct Identity {};

/// n -> floor(n^(num/den)) per coordinate, 1 < num/den <= 4.
struct CoordinatewisePower {
    std::int64_t num;
    std::int64_t den;
};

/// sum_j coefficients[j] * g^j in the group's ring.
struct RingPolynomial {
    std::vector<GroupElement> coefficients;
};

/// Square integer matrix acting on the leading coordinates; the rest are fixed.
struct Homomorphism {
    std::vector<std::vector<std::int64_t>> matrix;
};

/// maps[0] is applied first.
struct Composition {
    std::vector<GroupSelfMap> maps;
};

}  // namespace selfmap

class GroupSelfMap {
   public:
    using Variant = std::variant<selfmap::Identity, selfmap::CoordinatewisePower, selfmap::RingPolynomial, selfmap::Homomorphism,
                                 selfmap::Composition>;

    GroupSelfMap() : v_(selfmap::Identity{}) {}

    static GroupSelfMap identity() { return {}; }
    static GroupSelfMap power(const Rational& exponent);
    static GroupSelfMap ring_polynomial(std::vector<GroupElement> coefficients);
    static GroupSelfMap homomorphism(std::vector<std::vector<std::int64_t>> matrix);
    static GroupSelfMap compose(std::vector<GroupSelfMap> maps);

    const Variant& variant() const noexcept { return v_; }

    /// Throws InvalidInput / CapabilityError if the map cannot act on desc.
    void check(const GroupDescriptor& desc) const;
    GroupElement apply(const GroupDescriptor& desc, const GroupElement& g) const;

    friend bool operator==(const GroupSelfMap& a, const GroupSelfMap& b);

   private:
    explicit GroupSelfMap(Variant v) : v_(std::move(v)) {}
    Variant v_;
};

GroupElement apply_selfmap(const GroupSelfMap& a, const GroupDescriptor& desc, const GroupElement& g);

/// floor(n^(num/den)) for n >= 0 computed with exact integer roots; negative n
/// is accepted only when den == 1.
std::int64_t floor_power(std::int64_t n, std::int64_t num, std::int64_t den);

/// Largest r >= 0 with r^k <= m, for m >= 0.
Integer integer_root(const Integer& m, unsigned k);

}  // namespace ergo
