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
#include <string>
#include <utility>
#include <vector>

#include "ergo/averaging/reduce.hpp"
#include "ergo/averaging/sequence.hpp"
#include "ergo/group/folner.hpp"

namespace ergo {

/// A_N(u) = (1/|F_N|) sum_{g in F_N} u(g).
HilbertVector folner_average(const VectorSequence& u, const FolnerWindow& window, const AveragingOptions& opts = {});
HilbertVector folner_average(const VectorSequence& u, const FolnerFamily& family, std::int64_t n, const AveragingOptions& opts = {});

/// (1/|F|) sum_{g in F} <x(g), y(g)>.
Scalar pair_average(const VectorSequence& x, const VectorSequence& y, const FolnerWindow& window, const AveragingOptions& opts = {});
/// (1/|F|) sum_{g in F} ||u(g)||^2.
Scalar mean_square(const VectorSequence& u, const FolnerWindow& window, const AveragingOptions& opts = {});

/// gamma_h(N) = (1/|F_N|) sum_{g in F_N} <u(g + h), u(g)>.
Scalar shifted_correlation(const VectorSequence& u, const GroupElement& h, const FolnerWindow& window, const AveragingOptions& opts = {});

struct CorrelationProfile {
    std::vector<GroupElement> shifts;
    std::vector<std::int64_t> checkpoints;
    /// values[i][j] = gamma_{shifts[i]}(checkpoints[j]).
    std::vector<std::vector<Scalar>> values;
    /// Every value was computed exactly.
    bool exact = true;

    std::size_t shift_index(const GroupElement& h) const;
};

CorrelationProfile correlation_profile(const VectorSequence& u, const FolnerFamily& family, const std::vector<GroupElement>& shifts,
                                       const std::vector<std::int64_t>& checkpoints, const AveragingOptions& opts = {});

/// sup_{N >= window_start} |gamma_h(N)| over the checkpoints; InvalidInput on an empty tail.
double tail_sup(const CorrelationProfile& profile, const GroupElement& h, std::int64_t window_start);
/// inf_{N >= window_start} |gamma_h(N)|.
double tail_inf(const CorrelationProfile& profile, const GroupElement& h, std::int64_t window_start);

/// Columns h, N, re, im, tail_sup (tail from window_start), one row per (h, N).
std::string profile_table(const CorrelationProfile& profile, std::int64_t window_start);

/// n0 * 2^k for k = 0..doublings.
std::vector<std::int64_t> geometric_checkpoints(std::int64_t n0, int doublings);

/// Shells of shifts around e_G: shell 0 = {e_G}; integer_line shell r = {r, -r};
/// lattices use the sup norm; direct sums group elements with support in
/// [1, level] by level; finite fields have a single shell of nonzero elements.
std::vector<std::vector<GroupElement>> shift_shells(const GroupDescriptor& group, std::int64_t radius, std::size_t budget = 100'000);

struct SubsequencePlan {
    std::vector<std::int64_t> indices;
    double tolerance = 0.0;
    std::size_t pair_count = 0;
    /// Scanned checkpoints and, per pair, the average at each of them.
    std::vector<std::int64_t> scanned;
    std::vector<std::vector<Scalar>> pair_traces;
};

using SequencePair = std::pair<VectorSequence, VectorSequence>;

/// Greedy scan of the checkpoints: keep N when every tracked pair average
/// moved by less than `tolerance` since the last kept index. While only one
/// index is kept, a failing candidate replaces it. ConvergenceFailure when
/// fewer than 3 indices are kept.
SubsequencePlan select_subsequence(const std::vector<SequencePair>& pairs, const FolnerFamily& family, double tolerance,
                                   const std::vector<std::int64_t>& checkpoints, const AveragingOptions& opts = {});

struct SequenceInnerProduct {
    Scalar value;
    /// Largest distance from `value` along the plan.
    double fluctuation = 0.0;
    bool stabilized = true;
    std::vector<Scalar> trace;
};

SequenceInnerProduct sequence_inner_product(const VectorSequence& x, const VectorSequence& y, const FolnerFamily& family,
                                            const SubsequencePlan& plan, const AveragingOptions& opts = {});

}  // namespace ergo
