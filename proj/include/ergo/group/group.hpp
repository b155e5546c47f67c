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

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace ergo {

enum class GroupKind { IntegerLine, IntegerLattice, FreeAbelianDirectSum, PrimeDirectSum, PolynomialRing, FiniteFieldLevel };

std::string kind_name(GroupKind kind);

/// Finitely supported coordinates x_1, x_2, ... stored densely with trailing
/// zeros removed. coords[i] is x_{i+1}; for PolynomialRing and
/// FiniteFieldLevel it is the coefficient of t^i.
class GroupElement {
   public:
    GroupElement() = default;
    explicit GroupElement(std::vector<std::int64_t> coords);
    GroupElement(std::initializer_list<std::int64_t> coords);

    /// x_{index+1} = value, every other coordinate zero.
    static GroupElement unit(std::size_t index, std::int64_t value = 1);

    const std::vector<std::int64_t>& coords() const noexcept { return coords_; }
    std::int64_t operator[](std::size_t i) const noexcept { return i < coords_.size() ? coords_[i] : 0; }
    /// One past the last nonzero coordinate.
    std::size_t support_end() const noexcept { return coords_.size(); }
    bool is_zero() const noexcept { return coords_.empty(); }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;
    friend auto operator<=>(const GroupElement&, const GroupElement&) = default;

   private:
    std::vector<std::int64_t> coords_;
};

struct GroupElementHash {
    std::size_t operator()(const GroupElement& g) const noexcept;
};

/// A countable abelian group with its canonical coordinates. Immutable.
class GroupDescriptor {
   public:
    static GroupDescriptor integer_line();
    static GroupDescriptor lattice(std::int64_t d);
    static GroupDescriptor free_sum();
    static GroupDescriptor prime_sum(std::int64_t p);
    static GroupDescriptor poly_ring(std::int64_t p);
    /// F_p[t]/(m) with m the lexicographically first monic irreducible of degree k.
    static GroupDescriptor finite_field(std::int64_t p, std::int64_t k);

    GroupKind kind() const noexcept { return kind_; }
    std::int64_t dimension() const noexcept { return d_; }
    std::int64_t prime() const noexcept { return p_; }
    std::int64_t degree() const noexcept { return k_; }
    /// Monic modulus m_0..m_k of a FiniteFieldLevel; empty otherwise.
    const std::vector<std::int64_t>& modulus() const noexcept { return modulus_; }

    /// Every element has order dividing p.
    bool is_torsion() const noexcept;
    /// Finitely many coordinates (line, lattice, finite field).
    bool is_finite_rank() const noexcept;
    /// Number of coordinates when finite rank, else 0.
    std::size_t rank() const noexcept;
    bool has_ring() const noexcept;
    /// The group is finite (only FiniteFieldLevel).
    bool is_finite() const noexcept { return kind_ == GroupKind::FiniteFieldLevel; }

    /// Throws InvalidInput unless g is a canonical element of this group.
    void validate(const GroupElement& g) const;
    bool contains(const GroupElement& g) const;

    GroupElement identity() const { return {}; }
    GroupElement combine(const GroupElement& g, const GroupElement& h) const;
    GroupElement invert(const GroupElement& g) const;
    GroupElement subtract(const GroupElement& g, const GroupElement& h) const;
    /// n * g.
    GroupElement scale(const GroupElement& g, std::int64_t n) const;
    /// Ring product; line and lattice multiply coordinatewise, PolynomialRing
    /// multiplies polynomials, FiniteFieldLevel reduces by the modulus.
    GroupElement ring_mul(const GroupElement& g, const GroupElement& h) const;
    /// Canonical element from arbitrary integer coordinates (residues reduced).
    GroupElement reduce(std::vector<std::int64_t> coords) const;

    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

   private:
    GroupDescriptor(GroupKind kind, std::int64_t d, std::int64_t p, std::int64_t k, std::vector<std::int64_t> modulus);

    GroupKind kind_;
    std::int64_t d_;
    std::int64_t p_;
    std::int64_t k_;
    std::vector<std::int64_t> modulus_;
};

bool is_odd_prime(std::int64_t p);
std::int64_t mod_floor(std::int64_t a, std::int64_t m);

/// Throws InvalidInput naming `what` unless a and b are the same group.
void require_same(const GroupDescriptor& a, const GroupDescriptor& b, const std::string& what);

}  // namespace ergo
