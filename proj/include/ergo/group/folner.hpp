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
#include <optional>
#include <vector>

#include "ergo/core/errors.hpp"
#include "ergo/core/rational.hpp"
#include "ergo/group/group.hpp"

namespace ergo {

enum class FolnerRule {
    Interval,       ///< [1, N] in IntegerLine
    Box,            ///< [1, N]^d in IntegerLattice
    LevelSubgroup,  ///< {x : x_i = 0 for i > N} in PrimeDirectSum / PolynomialRing
    LevelBox,       ///< [0, side)^N in FreeAbelianDirectSum, side = multiplier * N
    FullField,      ///< the whole of F_{p^k}
};

/// One coordinate range of a window: start, start+1, ..., start+extent-1.
/// Torsion axes always cover all of Z/p with start 0.
struct WindowAxis {
    std::int64_t start;
    std::int64_t extent;
};

/// A finite product set of coordinate ranges, optionally translated.
/// Enumeration is lexicographic with x_1 most significant.
class FolnerWindow {
   public:
    FolnerWindow(GroupDescriptor desc, std::vector<WindowAxis> axes, GroupElement translation = {});

    const GroupDescriptor& descriptor() const noexcept { return desc_; }
    const std::vector<WindowAxis>& axes() const noexcept { return axes_; }
    const GroupElement& translation() const noexcept { return translation_; }

    std::size_t size() const noexcept { return size_; }
    /// The i-th element in enumeration order, i < size().
    GroupElement element(std::size_t i) const;
    void for_each(const std::function<void(const GroupElement&)>& fn) const;
    std::vector<GroupElement> elements() const;

    /// |F ∩ (F - g)|: number of x in F with x + g also in F.
    std::size_t overlap(const GroupElement& g) const;
    /// |F △ (F + g)| / |F|.
    Rational defect(const GroupElement& g) const;
    bool contains(const GroupElement& g) const;

   private:
    GroupDescriptor desc_;
    std::vector<WindowAxis> axes_;
    GroupElement translation_;
    std::size_t size_;
};

class FolnerFamily {
   public:
    using Translation = std::function<GroupElement(std::int64_t)>;

    static FolnerFamily interval(const GroupDescriptor& desc);
    static FolnerFamily box(const GroupDescriptor& desc);
    static FolnerFamily level_subgroup(const GroupDescriptor& desc);
    static FolnerFamily level_box(const GroupDescriptor& desc, std::int64_t multiplier = 3);
    static FolnerFamily full_field(const GroupDescriptor& desc);
    /// The natural family of the group kind.
    static FolnerFamily standard(const GroupDescriptor& desc);

    FolnerFamily translated(Translation b) const;

    const GroupDescriptor& descriptor() const noexcept { return desc_; }
    FolnerRule rule() const noexcept { return rule_; }
    std::int64_t multiplier() const noexcept { return multiplier_; }
    bool has_translation() const noexcept { return static_cast<bool>(translation_); }

    /// Predicted |F_N| as an exact integer.
    Integer predicted_size(std::int64_t n) const;
    /// The window F_N; throws BudgetExceeded when |F_N| > budget.
    FolnerWindow window(std::int64_t n, std::size_t budget = kDefaultBudget) const;

   private:
    FolnerFamily(GroupDescriptor desc, FolnerRule rule, std::int64_t multiplier);

    GroupDescriptor desc_;
    FolnerRule rule_;
    std::int64_t multiplier_;
    Translation translation_;
};

/// Box [0, side)^level in FreeAbelianDirectSum.
FolnerWindow level_box_window(const GroupDescriptor& desc, std::int64_t level, std::int64_t side, std::size_t budget = kDefaultBudget);

std::vector<GroupElement> folner_set(const FolnerFamily& family, std::int64_t n, std::size_t budget = kDefaultBudget);
Rational folner_defect(const FolnerFamily& family, std::int64_t n, const GroupElement& g, std::size_t budget = kDefaultBudget);

}  // namespace ergo
