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

#include "ergo/group/group.hpp"

#include <algorithm>

#include "ergo/core/errors.hpp"
#include "ergo/group/finite_field.hpp"

namespace ergo {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw InvalidInput("integer overflow in group law");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw InvalidInput("integer overflow in ring product");
    return r;
}

}  // namespace

std::string kind_name(GroupKind kind) {
    switch (kind) {
        case GroupKind::IntegerLine:
            return "integer_line";
        case GroupKind::IntegerLattice:
            return "lattice";
        case GroupKind::FreeAbelianDirectSum:
            return "free_sum";
        case GroupKind::PrimeDirectSum:
            return "prime_sum";
        case GroupKind::PolynomialRing:
            return "poly_ring";
        case GroupKind::FiniteFieldLevel:
            return "finite_field";
    }
    return "?";
}

bool is_odd_prime(std::int64_t p) {
    if (p < 3 || p % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

std::int64_t mod_floor(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

GroupElement::GroupElement(std::vector<std::int64_t> coords) : coords_(std::move(coords)) {
    while (!coords_.empty() && coords_.back() == 0) coords_.pop_back();
}

GroupElement::GroupElement(std::initializer_list<std::int64_t> coords) : GroupElement(std::vector<std::int64_t>(coords)) {}

GroupElement GroupElement::unit(std::size_t index, std::int64_t value) {
    std::vector<std::int64_t> c(index + 1, 0);
    c[index] = value;
    return GroupElement(std::move(c));
}

std::size_t GroupElementHash::operator()(const GroupElement& g) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto x : g.coords()) {
        h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
}

GroupDescriptor::GroupDescriptor(GroupKind kind, std::int64_t d, std::int64_t p, std::int64_t k, std::vector<std::int64_t> modulus)
    : kind_(kind), d_(d), p_(p), k_(k), modulus_(std::move(modulus)) {}

GroupDescriptor GroupDescriptor::integer_line() { return {GroupKind::IntegerLine, 1, 0, 0, {}}; }

GroupDescriptor GroupDescriptor::lattice(std::int64_t d) {
    if (d < 1) throw InvalidInput("lattice dimension must be at least 1");
    return {GroupKind::IntegerLattice, d, 0, 0, {}};
}

GroupDescriptor GroupDescriptor::free_sum() { return {GroupKind::FreeAbelianDirectSum, 0, 0, 0, {}}; }

GroupDescriptor GroupDescriptor::prime_sum(std::int64_t p) {
    if (!is_odd_prime(p) || p >= (std::int64_t{1} << 31)) throw InvalidInput("p must be an odd prime below 2^31, got " + std::to_string(p));
    return {GroupKind::PrimeDirectSum, 0, p, 0, {}};
}

GroupDescriptor GroupDescriptor::poly_ring(std::int64_t p) {
    if (!is_odd_prime(p) || p >= (std::int64_t{1} << 31)) throw InvalidInput("p must be an odd prime below 2^31, got " + std::to_string(p));
    return {GroupKind::PolynomialRing, 0, p, 0, {}};
}

GroupDescriptor GroupDescriptor::finite_field(std::int64_t p, std::int64_t k) {
    if (!is_odd_prime(p) || p >= (std::int64_t{1} << 31)) throw InvalidInput("p must be an odd prime below 2^31, got " + std::to_string(p));
    if (k < 1 || k > 16) throw InvalidInput("field degree must be in [1, 16], got " + std::to_string(k));
    return {GroupKind::FiniteFieldLevel, 0, p, k, first_irreducible(p, k)};
}

bool GroupDescriptor::is_torsion() const noexcept {
    return kind_ == GroupKind::PrimeDirectSum || kind_ == GroupKind::PolynomialRing || kind_ == GroupKind::FiniteFieldLevel;
}

bool GroupDescriptor::is_finite_rank() const noexcept {
    return kind_ == GroupKind::IntegerLine || kind_ == GroupKind::IntegerLattice || kind_ == GroupKind::FiniteFieldLevel;
}

std::size_t GroupDescriptor::rank() const noexcept {
    switch (kind_) {
        case GroupKind::IntegerLine:
            return 1;
        case GroupKind::IntegerLattice:
            return static_cast<std::size_t>(d_);
        case GroupKind::FiniteFieldLevel:
            return static_cast<std::size_t>(k_);
        default:
            return 0;
    }
}

bool GroupDescriptor::has_ring() const noexcept {
    return kind_ == GroupKind::IntegerLine || kind_ == GroupKind::IntegerLattice || kind_ == GroupKind::PolynomialRing ||
           kind_ == GroupKind::FiniteFieldLevel;
}

void GroupDescriptor::validate(const GroupElement& g) const {
    const auto& c = g.coords();
    if (is_finite_rank() && c.size() > rank())
        throw InvalidInput("element has " + std::to_string(c.size()) + " coordinates, " + kind_name(kind_) + " has " +
                           std::to_string(rank()));
    if (is_torsion()) {
        for (auto x : c)
            if (x < 0 || x >= p_) throw InvalidInput("residue " + std::to_string(x) + " outside [0," + std::to_string(p_) + ")");
    }
}

bool GroupDescriptor::contains(const GroupElement& g) const {
    try {
        validate(g);
        return true;
    } catch (const InvalidInput&) {
        return false;
    }
}

GroupElement GroupDescriptor::reduce(std::vector<std::int64_t> coords) const {
    if (is_torsion())
        for (auto& x : coords) x = mod_floor(x, p_);
    GroupElement g(std::move(coords));
    validate(g);
    return g;
}

GroupElement GroupDescriptor::combine(const GroupElement& g, const GroupElement& h) const {
    validate(g);
    validate(h);
    std::vector<std::int64_t> out(std::max(g.support_end(), h.support_end()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (is_torsion()) {
            std::int64_t s = g[i] + h[i];
            if (s >= p_) s -= p_;
            out[i] = s;
        } else {
            out[i] = checked_add(g[i], h[i]);
        }
    }
    return GroupElement(std::move(out));
}

GroupElement GroupDescriptor::invert(const GroupElement& g) const {
    validate(g);
    std::vector<std::int64_t> out(g.coords());
    for (auto& x : out) {
        if (is_torsion())
            x = x == 0 ? 0 : p_ - x;
        else if (x == INT64_MIN)
            throw InvalidInput("integer overflow in inverse");
        else
            x = -x;
    }
    return GroupElement(std::move(out));
}

GroupElement GroupDescriptor::subtract(const GroupElement& g, const GroupElement& h) const { return combine(g, invert(h)); }

GroupElement GroupDescriptor::scale(const GroupElement& g, std::int64_t n) const {
    validate(g);
    std::vector<std::int64_t> out(g.coords());
    for (auto& x : out) {
        if (is_torsion())
            x = poly::mulmod(x, mod_floor(n, p_), p_);
        else
            x = checked_mul(x, n);
    }
    return GroupElement(std::move(out));
}

GroupElement GroupDescriptor::ring_mul(const GroupElement& g, const GroupElement& h) const {
    validate(g);
    validate(h);
    switch (kind_) {
        case GroupKind::IntegerLine:
        case GroupKind::IntegerLattice: {
            std::vector<std::int64_t> out(std::min(g.support_end(), h.support_end()), 0);
            for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_mul(g[i], h[i]);
            return GroupElement(std::move(out));
        }
        case GroupKind::PolynomialRing:
            return GroupElement(poly::mul(g.coords(), h.coords(), p_));
        case GroupKind::FiniteFieldLevel:
            return ff_mul(*this, g, h);
        default:
            throw CapabilityError(kind_name(kind_) + " has no ring structure");
    }
}

void require_same(const GroupDescriptor& a, const GroupDescriptor& b, const std::string& what) {
    if (!(a == b)) throw InvalidInput(what + ": group mismatch (" + kind_name(a.kind()) + " vs " + kind_name(b.kind()) + ")");
}

}  // namespace ergo
