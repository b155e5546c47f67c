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
#include <vector>

#include "ergo/group/group.hpp"

namespace ergo {

/// Dense polynomials over F_p, coefficient of t^i at index i, no trailing zeros.
using PolyFp = std::vector<std::int64_t>;

namespace poly {

void trim(PolyFp& a);
int degree(const PolyFp& a);
PolyFp add(const PolyFp& a, const PolyFp& b, std::int64_t p);
PolyFp sub(const PolyFp& a, const PolyFp& b, std::int64_t p);
PolyFp mul(const PolyFp& a, const PolyFp& b, std::int64_t p);
/// Remainder of a modulo a nonzero b.
PolyFp rem(PolyFp a, const PolyFp& b, std::int64_t p);
PolyFp gcd(PolyFp a, PolyFp b, std::int64_t p);
PolyFp powmod(PolyFp base, std::uint64_t e, const PolyFp& m, std::int64_t p);
PolyFp derivative(const PolyFp& a, std::int64_t p);

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p);
std::int64_t powmod(std::int64_t a, std::uint64_t e, std::int64_t p);
std::int64_t inverse(std::int64_t a, std::int64_t p);

}  // namespace poly

/// Ben-Or test: a monic f of degree k is irreducible iff
/// gcd(f, t^{p^i} - t) = 1 for every 1 <= i <= k/2.
bool is_irreducible(const PolyFp& monic, std::int64_t p);

/// The monic irreducible t^k + c_{k-1} t^{k-1} + ... + c_0 whose coefficient
/// list (c_0, ..., c_{k-1}) is lexicographically smallest.
PolyFp first_irreducible(std::int64_t p, std::int64_t k);

GroupDescriptor ff_make(std::int64_t p, std::int64_t k);
GroupElement ff_add(const GroupDescriptor& f, const GroupElement& x, const GroupElement& y);
GroupElement ff_mul(const GroupDescriptor& f, const GroupElement& x, const GroupElement& y);
GroupElement ff_scale(const GroupDescriptor& f, std::int64_t c, const GroupElement& x);
GroupElement ff_pow(const GroupDescriptor& f, GroupElement x, std::uint64_t e);
/// Throws InvalidInput on zero.
GroupElement ff_inv(const GroupDescriptor& f, const GroupElement& x);

}  // namespace ergo
