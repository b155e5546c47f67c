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
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ergo/group/character.hpp"
#include "ergo/group/group.hpp"
#include "ergo/group/selfmap.hpp"
#include "ergo/systems/observable.hpp"
#include "ergo/systems/scalar.hpp"
#include "ergo/systems/system.hpp"

namespace ergo {

/// A vector of the Hilbert space a sequence takes values in: C or L^2 of a space.
using HilbertVector = std::variant<Scalar, Observable>;

/// <x, y>; both must be scalars or both observables of one space.
Scalar inner(const HilbertVector& x, const HilbertVector& y);
double norm(const HilbertVector& x);
std::string to_text(const HilbertVector& x);
/// Pointwise product: scalar * scalar, scalar * observable, or observable * observable.
HilbertVector product(const HilbertVector& x, const HilbertVector& y);

/// Running sum of Hilbert vectors with the exactness rules of ScalarSum,
/// applied coordinatewise to observables.
class HilbertSum {
   public:
    void add(const HilbertVector& v);
    void merge(const HilbertSum& other);
    /// The sum divided by `count`; `like` fixes the space for an empty sum.
    HilbertVector average(std::size_t count, const HilbertVector& like) const;
    bool empty() const noexcept { return !state_.has_value(); }

   private:
    struct ObservableSum {
        SpaceHandle space;
        std::size_t kind;
        std::vector<ScalarSum> finite;
        std::map<Frequency, ScalarSum> trig;
        std::map<Word, ScalarSum> chaos;
    };
    std::optional<std::variant<ScalarSum, ObservableSum>> state_;
};

/// A bounded map u: G -> H, with enough structure kept to take fast exact
/// paths (orbit sequences correlate through the system's correlation).
class VectorSequence {
   public:
    using Rule = std::function<HilbertVector(const GroupElement&)>;

    enum class Kind { Constant, Orbit, CharacterPhase, EigenPhase, Product, Shifted, Scaled, Rule };

    /// u(g) = v.
    static VectorSequence constant(GroupDescriptor group, HilbertVector v);
    /// u(g) = T_{a(g)} f.
    static VectorSequence orbit(System sys, Observable f, GroupSelfMap a = {});
    /// u(g) = chi(a(g)).
    static VectorSequence character_phase(Character chi, GroupSelfMap a = {});
    /// u(g) = e(k . alpha(a(g))) for a torus system: the eigenvalue of e(k . x).
    static VectorSequence eigen_phase(System torus, Frequency k, GroupSelfMap a = {});
    /// Pointwise product of the factors.
    static VectorSequence product(std::vector<VectorSequence> factors);
    /// (U_h u)(g) = u(g + h).
    static VectorSequence shifted(VectorSequence u, GroupElement h);
    /// c * u(g).
    static VectorSequence scaled(VectorSequence u, Scalar c);
    static VectorSequence rule(GroupDescriptor group, Rule rule, double bound, std::string description = "rule");

    const GroupDescriptor& group() const;
    Kind kind() const;
    /// Declared bound on ||u(g)||.
    double bound() const;
    std::string description() const;

    HilbertVector operator()(const GroupElement& g) const;

    /// Orbit data when kind() == Orbit.
    const System* orbit_system() const;
    const Observable* orbit_observable() const;
    const GroupSelfMap* orbit_map() const;

    /// Largest ||u(g)|| over `sample`; throws InvalidInput if any exceeds bound() + tol.
    double spot_check_bound(const std::vector<GroupElement>& sample, double tol = 1e-9) const;

   private:
    struct Impl;
    explicit VectorSequence(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

}  // namespace ergo
