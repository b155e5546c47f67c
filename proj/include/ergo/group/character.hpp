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
#include <vector>

#include "ergo/core/rational.hpp"
#include "ergo/group/cyclotomic.hpp"
#include "ergo/group/group.hpp"

namespace ergo {

/// e(exponent / modulus), exponent reduced into [0, modulus).
struct CharValue {
    std::int64_t exponent = 0;
    std::int64_t modulus = 1;

    Rational angle() const { return Rational(exponent, modulus); }
    std::complex<double> to_complex() const;
    /// Exact value; needs modulus 1, 2 or an odd prime, else CapabilityError.
    CyclotomicValue to_cyclotomic() const;
    bool is_one() const noexcept { return exponent == 0; }
};

/// A character of a countable abelian group, stored by a finite prefix.
///
/// Torsion groups: chi_y(x) = zeta_p^(sum x_i y_i). Integer groups:
/// chi(x) = e(sum theta_i x_i + tail * sum_{i >= prefix} x_i), with rational
/// angles; `tail` only exists on free_sum and lets a single value cover every
/// coordinate past the prefix.
class Character {
   public:
    static Character trivial(const GroupDescriptor& desc);
    static Character residues(const GroupDescriptor& desc, std::vector<std::int64_t> y);
    static Character angles(const GroupDescriptor& desc, std::vector<Rational> theta, Rational tail = 0);

    const GroupDescriptor& descriptor() const noexcept { return desc_; }
    const std::vector<std::int64_t>& residue_vector() const noexcept { return y_; }
    const std::vector<Rational>& angle_vector() const noexcept { return theta_; }
    const Rational& tail() const noexcept { return tail_; }
    bool uses_residues() const noexcept { return desc_.is_torsion(); }

    /// Common denominator q of all values; 1 for the trivial character.
    std::int64_t modulus() const noexcept { return q_; }
    bool is_trivial() const noexcept { return q_ == 1; }

    CharValue eval(const GroupElement& g) const;

    friend bool operator==(const Character& a, const Character& b) {
        return a.desc_ == b.desc_ && a.y_ == b.y_ && a.theta_ == b.theta_ && a.tail_ == b.tail_;
    }

   private:
    Character(GroupDescriptor desc) : desc_(std::move(desc)) {}
    void finish();

    GroupDescriptor desc_;
    std::vector<std::int64_t> y_;
    std::vector<Rational> theta_;
    Rational tail_ = 0;
    std::int64_t q_ = 1;
    std::vector<std::int64_t> weights_;  // q * value per prefix coordinate, reduced mod q
    std::int64_t tail_weight_ = 0;
};

CharValue char_eval(const Character& chi, const GroupElement& g);

}  // namespace ergo
