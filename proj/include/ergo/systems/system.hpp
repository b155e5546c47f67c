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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <variant>
#include <vector>

#include "ergo/group/group.hpp"
#include "ergo/systems/angle.hpp"
#include "ergo/systems/observable.hpp"
#include "ergo/systems/space.hpp"

namespace ergo {

/// Permutation images: perm[x] is the atom that x is sent to.
using Permutation = std::vector<std::size_t>;

namespace action {

/// Coordinate i of G acts by generators[i]^(g_i mod orders[i]); coordinates
/// past the generator list act trivially. The action factors through
/// Q = Z/orders[0] x Z/orders[1] x ...
struct FinitePermutation {
    std::vector<Permutation> generators;
    std::vector<std::int64_t> orders;
};

/// Coordinate i of G rotates the torus by generators[i] (one angle per torus
/// coordinate); coordinates past the list act trivially.
struct TorusRotation {
    std::vector<std::vector<Angle>> generators;
};

/// (T_g f)(x) = f(x shifted by g): a function of x_h becomes a function of x_{h+g}.
struct BernoulliShift {};

}  // namespace action

/// A measure-preserving action of a countable abelian group on a desk-scale
/// probability space, with the Koopman convention (T_g f)(x) = f(pi_g x).
class System {
   public:
    using Action = std::variant<action::FinitePermutation, action::TorusRotation, action::BernoulliShift>;

    static System finite(GroupDescriptor group, std::vector<Rational> weights, std::vector<Permutation> generators,
                         std::vector<std::int64_t> orders);
    /// Finite system over an existing space (e.g. a second action on the same atoms).
    static System finite(GroupDescriptor group, SpaceHandle space, std::vector<Permutation> generators, std::vector<std::int64_t> orders);
    static System torus(GroupDescriptor group, std::size_t dimension, std::vector<std::vector<Angle>> generators);
    static System bernoulli(GroupDescriptor group, std::vector<Rational> probs);

    const GroupDescriptor& group() const noexcept { return group_; }
    const SpaceHandle& space() const noexcept { return space_; }
    const Action& action() const noexcept { return action_; }
    SpaceKind kind() const noexcept { return space_->kind(); }

    Observable one() const { return Observable::constant(space_, Scalar(1)); }

    /// T_g f.
    Observable act(const GroupElement& g, const Observable& f) const;
    /// <T_g f, f>.
    Scalar correlation(const Observable& f, const GroupElement& g) const;

    /// pi_g for a finite system.
    Permutation permutation(const GroupElement& g) const;
    /// Rotation vector alpha(g) for a torus system.
    std::vector<Angle> rotation(const GroupElement& g) const;
    /// Rotation angle by which T_g multiplies e(k . x).
    Angle phase(const Frequency& k, const GroupElement& g) const;

    /// E[f | invariant sets]: orbit-weighted means on finite systems, the
    /// frequencies fixed by every generator on tori, the mean on Bernoulli shifts.
    Observable invariant_projection(const Observable& f) const;
    /// Orbits of the whole acting group, each sorted, ordered by first atom.
    std::vector<std::vector<std::size_t>> orbits() const;
    bool is_ergodic() const;
    /// Every subgroup of Q of index <= m acts with one positive-weight orbit.
    bool is_totally_ergodic(std::int64_t m, std::size_t subgroup_budget = 4096) const;
    /// Ring notion on F_p[t]: for every nonzero m of degree <= max_degree the
    /// subgroup m * F_p[t] acts with one positive-weight orbit.
    bool is_totally_ergodic_ring(std::int64_t max_degree) const;

    /// For Bernoulli observables with zero mean: a finite set containing every
    /// g with correlation(f, g) != 0. nullopt when the mean is nonzero.
    std::optional<std::set<GroupElement>> correlation_support(const Observable& f) const;

    void require_observable(const Observable& f) const;

   private:
    System(GroupDescriptor group, SpaceHandle space, Action action);
    void validate_finite() const;
    void validate_torus() const;
    /// Orbits under the permutations generated by `gens`.
    std::vector<std::vector<std::size_t>> orbits_of(const std::vector<Permutation>& gens) const;
    bool single_positive_orbit(const std::vector<Permutation>& gens) const;

    GroupDescriptor group_;
    SpaceHandle space_;
    Action action_;
    /// powers[i][e] = generators[i]^e for e < orders[i].
    std::vector<std::vector<Permutation>> powers_;
};

Observable act(const System& sys, const GroupElement& g, const Observable& f);
Scalar correlation(const System& sys, const Observable& f, const GroupElement& g);

}  // namespace ergo
