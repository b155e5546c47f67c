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

#include "ergo/group/folner.hpp"

#include <cstdlib>

namespace ergo {

FolnerWindow::FolnerWindow(GroupDescriptor desc, std::vector<WindowAxis> axes, GroupElement translation)
    : desc_(std::move(desc)), axes_(std::move(axes)), translation_(std::move(translation)), size_(1) {
    desc_.validate(translation_);
    if (desc_.is_finite_rank() && axes_.size() > desc_.rank()) throw InvalidInput("window has more axes than the group has coordinates");
    for (const auto& a : axes_) {
        if (a.extent < 1) throw InvalidInput("window axis must be nonempty");
        if (desc_.is_torsion() && (a.start != 0 || a.extent != desc_.prime()))
            throw InvalidInput("torsion window axes must cover all residues");
        if (__builtin_mul_overflow(size_, static_cast<std::size_t>(a.extent), &size_)) throw BudgetExceeded("window", SIZE_MAX, SIZE_MAX);
    }
}

GroupElement FolnerWindow::element(std::size_t i) const {
    std::vector<std::int64_t> c(axes_.size(), 0);
    for (std::size_t j = axes_.size(); j-- > 0;) {
        const auto ext = static_cast<std::size_t>(axes_[j].extent);
        c[j] = axes_[j].start + static_cast<std::int64_t>(i % ext);
        i /= ext;
    }
    GroupElement x(std::move(c));
    return translation_.is_zero() ? x : desc_.combine(x, translation_);
}

void FolnerWindow::for_each(const std::function<void(const GroupElement&)>& fn) const {
    for (std::size_t i = 0; i < size_; ++i) fn(element(i));
}

std::vector<GroupElement> FolnerWindow::elements() const {
    std::vector<GroupElement> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) out.push_back(element(i));
    return out;
}

std::size_t FolnerWindow::overlap(const GroupElement& g) const {
    desc_.validate(g);
    if (g.support_end() > axes_.size()) return 0;
    std::size_t count = 1;
    for (std::size_t j = 0; j < axes_.size(); ++j) {
        if (desc_.is_torsion()) {
            count *= static_cast<std::size_t>(axes_[j].extent);
            continue;
        }
        const std::int64_t shift = g[j];
        const std::int64_t ext = axes_[j].extent;
        if (shift >= ext || shift <= -ext) return 0;
        count *= static_cast<std::size_t>(ext - std::llabs(shift));
    }
    return count;
}

Rational FolnerWindow::defect(const GroupElement& g) const {
    const std::size_t common = overlap(g);
    return Rational(2 * static_cast<long long>(size_ - common), static_cast<long long>(size_));
}

bool FolnerWindow::contains(const GroupElement& g) const {
    desc_.validate(g);
    const GroupElement x = desc_.subtract(g, translation_);
    if (x.support_end() > axes_.size()) return false;
    for (std::size_t j = 0; j < axes_.size(); ++j) {
        if (x[j] < axes_[j].start || x[j] >= axes_[j].start + axes_[j].extent) return false;
    }
    return true;
}

FolnerFamily::FolnerFamily(GroupDescriptor desc, FolnerRule rule, std::int64_t multiplier)
    : desc_(std::move(desc)), rule_(rule), multiplier_(multiplier) {}

FolnerFamily FolnerFamily::interval(const GroupDescriptor& desc) {
    if (desc.kind() != GroupKind::IntegerLine) throw InvalidInput("interval family needs integer_line");
    return {desc, FolnerRule::Interval, 1};
}

FolnerFamily FolnerFamily::box(const GroupDescriptor& desc) {
    if (desc.kind() != GroupKind::IntegerLattice && desc.kind() != GroupKind::IntegerLine)
        throw InvalidInput("box family needs a lattice");
    return {desc, FolnerRule::Box, 1};
}

FolnerFamily FolnerFamily::level_subgroup(const GroupDescriptor& desc) {
    if (desc.kind() != GroupKind::PrimeDirectSum && desc.kind() != GroupKind::PolynomialRing)
        throw InvalidInput("level subgroup family needs prime_sum or poly_ring");
    return {desc, FolnerRule::LevelSubgroup, 1};
}

FolnerFamily FolnerFamily::level_box(const GroupDescriptor& desc, std::int64_t multiplier) {
    if (desc.kind() != GroupKind::FreeAbelianDirectSum) throw InvalidInput("level box family needs free_sum");
    if (multiplier < 1) throw InvalidInput("level box multiplier must be positive");
    return {desc, FolnerRule::LevelBox, multiplier};
}

FolnerFamily FolnerFamily::full_field(const GroupDescriptor& desc) {
    if (desc.kind() != GroupKind::FiniteFieldLevel) throw InvalidInput("full field family needs finite_field");
    return {desc, FolnerRule::FullField, 1};
}

FolnerFamily FolnerFamily::standard(const GroupDescriptor& desc) {
    switch (desc.kind()) {
        case GroupKind::IntegerLine:
            return interval(desc);
        case GroupKind::IntegerLattice:
            return box(desc);
        case GroupKind::FreeAbelianDirectSum:
            return level_box(desc);
        case GroupKind::PrimeDirectSum:
        case GroupKind::PolynomialRing:
            return level_subgroup(desc);
        case GroupKind::FiniteFieldLevel:
            return full_field(desc);
    }
    throw InvalidInput("unknown group kind");
}

FolnerFamily FolnerFamily::translated(Translation b) const {
    FolnerFamily out = *this;
    out.translation_ = std::move(b);
    return out;
}

Integer FolnerFamily::predicted_size(std::int64_t n) const {
    if (n < 1) throw InvalidInput("Folner index must be positive, got " + std::to_string(n));
    const auto un = static_cast<unsigned>(n);
    switch (rule_) {
        case FolnerRule::Interval:
            return Integer(n);
        case FolnerRule::Box:
            return boost::multiprecision::pow(Integer(n), static_cast<unsigned>(desc_.rank()));
        case FolnerRule::LevelSubgroup:
            return boost::multiprecision::pow(Integer(desc_.prime()), un);
        case FolnerRule::LevelBox:
            return boost::multiprecision::pow(Integer(multiplier_) * n, un);
        case FolnerRule::FullField:
            return boost::multiprecision::pow(Integer(desc_.prime()), static_cast<unsigned>(desc_.degree()));
    }
    return 0;
}

FolnerWindow FolnerFamily::window(std::int64_t n, std::size_t budget) const {
    const Integer size = predicted_size(n);
    if (size > Integer(budget)) {
        const std::size_t shown = size > Integer(SIZE_MAX) ? SIZE_MAX : size.convert_to<std::size_t>();
        throw BudgetExceeded("Folner set F_" + std::to_string(n), shown, budget);
    }
    std::vector<WindowAxis> axes;
    switch (rule_) {
        case FolnerRule::Interval:
        case FolnerRule::Box:
            axes.assign(desc_.rank(), WindowAxis{1, n});
            break;
        case FolnerRule::LevelSubgroup:
            axes.assign(static_cast<std::size_t>(n), WindowAxis{0, desc_.prime()});
            break;
        case FolnerRule::LevelBox:
            axes.assign(static_cast<std::size_t>(n), WindowAxis{0, multiplier_ * n});
            break;
        case FolnerRule::FullField:
            axes.assign(desc_.rank(), WindowAxis{0, desc_.prime()});
            break;
    }
    GroupElement b = translation_ ? translation_(n) : GroupElement{};
    return FolnerWindow(desc_, std::move(axes), std::move(b));
}

FolnerWindow level_box_window(const GroupDescriptor& desc, std::int64_t level, std::int64_t side, std::size_t budget) {
    if (desc.kind() != GroupKind::FreeAbelianDirectSum) throw InvalidInput("level box needs free_sum");
    if (level < 1 || side < 1) throw InvalidInput("level box needs positive level and side");
    const Integer size = boost::multiprecision::pow(Integer(side), static_cast<unsigned>(level));
    if (size > Integer(budget)) {
        const std::size_t shown = size > Integer(SIZE_MAX) ? SIZE_MAX : size.convert_to<std::size_t>();
        throw BudgetExceeded("box [0," + std::to_string(side) + ")^" + std::to_string(level), shown, budget);
    }
    return FolnerWindow(desc, std::vector<WindowAxis>(static_cast<std::size_t>(level), WindowAxis{0, side}));
}

std::vector<GroupElement> folner_set(const FolnerFamily& family, std::int64_t n, std::size_t budget) {
    return family.window(n, budget).elements();
}

Rational folner_defect(const FolnerFamily& family, std::int64_t n, const GroupElement& g, std::size_t budget) {
    return family.window(n, budget).defect(g);
}

}  // namespace ergo
