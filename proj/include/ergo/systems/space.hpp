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
#include <memory>
#include <vector>

#include "ergo/core/rational.hpp"
#include "ergo/group/group.hpp"

namespace ergo {

enum class SpaceKind { Finite, Torus, Bernoulli };

/// Orthogonal basis phi_0 = 1, phi_1, ..., phi_{A-1} of functions on a finite
/// alphabet with rational probabilities, built by Gram-Schmidt on the
/// indicators of the first A-1 letters.
struct AlphabetBasis {
    std::vector<Rational> probs;
    /// phi[j][a] = phi_j(a).
    std::vector<std::vector<Rational>> phi;
    /// E[phi_j^2].
    std::vector<Rational> norms;
    /// phi_i phi_j = sum_l product[i][j][l] phi_l.
    std::vector<std::vector<std::vector<Rational>>> product;
    /// max_a |phi_j(a)|.
    std::vector<Rational> sup;

    explicit AlphabetBasis(std::vector<Rational> probabilities);
    std::size_t size() const noexcept { return probs.size(); }
    /// Coefficients of the indicator of letter a.
    std::vector<Rational> indicator(std::size_t a) const;
};

/// The probability space of a desk-scale system. Immutable and shared.
class Space {
   public:
    static std::shared_ptr<const Space> finite(std::vector<Rational> weights);
    static std::shared_ptr<const Space> torus(std::size_t dimension);
    static std::shared_ptr<const Space> bernoulli(GroupDescriptor group, std::vector<Rational> probs);

    SpaceKind kind() const noexcept { return kind_; }
    /// Atom weights of a finite space.
    const std::vector<Rational>& weights() const noexcept { return weights_; }
    std::size_t atoms() const noexcept { return weights_.size(); }
    std::size_t dimension() const noexcept { return dimension_; }
    const AlphabetBasis& basis() const;
    /// Coordinate group of a Bernoulli space.
    const GroupDescriptor& group() const noexcept { return group_; }

   private:
    Space(SpaceKind kind, GroupDescriptor group) : kind_(kind), group_(std::move(group)) {}

    SpaceKind kind_;
    std::vector<Rational> weights_;
    std::size_t dimension_ = 0;
    std::shared_ptr<const AlphabetBasis> basis_;
    GroupDescriptor group_;
};

using SpaceHandle = std::shared_ptr<const Space>;

}  // namespace ergo
