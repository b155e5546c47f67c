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
#include <map>
#include <variant>
#include <vector>

#include "ergo/group/group.hpp"
#include "ergo/systems/scalar.hpp"
#include "ergo/systems/space.hpp"

namespace ergo {

/// Integer frequency vector k of the character x -> e(k . x) on the torus.
using Frequency = std::vector<std::int64_t>;

/// basis function phi_basis evaluated at coordinate `position` (basis >= 1).
struct Site {
    GroupElement position;
    std::size_t basis;
    friend bool operator==(const Site&, const Site&) = default;
    friend auto operator<=>(const Site&, const Site&) = default;
};

/// Product of basis functions at distinct positions, sorted by position.
/// The empty word is the constant function 1.
using Word = std::vector<Site>;

using FiniteData = std::vector<Scalar>;
using TrigData = std::map<Frequency, Scalar>;
using ChaosData = std::map<Word, Scalar>;

/// A bounded function on a Space, stored symbolically: atom values, a
/// trigonometric polynomial, or an expansion in products of basis functions
/// over finitely many coordinates. Coefficients that are exactly zero are
/// never stored.
class Observable {
   public:
    using Data = std::variant<FiniteData, TrigData, ChaosData>;

    static Observable constant(const SpaceHandle& space, const Scalar& c);
    static Observable zero(const SpaceHandle& space) { return constant(space, Scalar(0)); }
    static Observable finite(const SpaceHandle& space, std::vector<Scalar> values);
    static Observable trig(const SpaceHandle& space, TrigData terms);
    /// e(k . x).
    static Observable wave(const SpaceHandle& space, const Frequency& k, const Scalar& c = Scalar(1));
    static Observable chaos(const SpaceHandle& space, ChaosData terms);
    /// c * prod_i 1[x_{positions[i]} = letters[i]].
    static Observable cylinder(const SpaceHandle& space, const std::vector<GroupElement>& positions, const std::vector<std::size_t>& letters,
                               const Scalar& c = Scalar(1));

    const SpaceHandle& space() const noexcept { return space_; }
    const Data& data() const noexcept { return data_; }
    const FiniteData& finite_values() const;
    const TrigData& trig_terms() const;
    const ChaosData& chaos_terms() const;

    /// A bound on sup |f|; never smaller than the true sup norm.
    double bound() const noexcept { return bound_; }
    bool is_exact() const;
    bool is_zero() const;

    Observable& operator+=(const Observable& o);
    Observable& operator-=(const Observable& o);
    Observable& operator*=(const Scalar& c);
    Observable& operator/=(const Rational& r);
    friend Observable operator+(Observable a, const Observable& b) { return a += b; }
    friend Observable operator-(Observable a, const Observable& b) { return a -= b; }
    friend Observable operator*(Observable a, const Scalar& c) { return a *= c; }
    friend Observable operator/(Observable a, const Rational& r) { return a /= r; }

    Observable conj() const;

    friend bool operator==(const Observable& a, const Observable& b);

    /// Recomputes the bound from the stored terms.
    void refresh_bound();
    /// Throws InvalidInput unless both observables live on the same space.
    void require_compatible(const Observable& o) const;

   private:
    Observable(SpaceHandle space, Data data) : space_(std::move(space)), data_(std::move(data)) { refresh_bound(); }

    SpaceHandle space_;
    Data data_;
    double bound_ = 0.0;

    friend class System;
    friend Observable multiply(const Observable&, const Observable&, std::size_t);
    friend Scalar inner(const Observable&, const Observable&);
};

/// <f, g> = integral f * conj(g), closed form per space.
Scalar inner(const Observable& f, const Observable& g);
Scalar integral(const Observable& f);
double l2_norm(const Observable& f);

inline constexpr std::size_t kDefaultTermBudget = 100'000;

/// Pointwise product; throws BudgetExceeded past `term_budget` stored terms.
Observable multiply(const Observable& f, const Observable& g, std::size_t term_budget = kDefaultTermBudget);

std::string to_text(const Observable& f);

}  // namespace ergo
