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
#include <string>
#include <utility>
#include <vector>

#include "ergo/averaging/averaging.hpp"

namespace ergo {

enum class VdcMode { PerShift, Strong, Cesaro, Summable };
enum class Tag { Supported, Refuted, Inconclusive };

std::string mode_name(VdcMode mode);
VdcMode parse_mode(std::string_view name);
/// "hypothesis_supported", "conclusion_inconclusive", ...
std::string tag_name(std::string_view side, Tag tag);

struct VdcThresholds {
    double hypothesis = 0.05;
    double conclusion = 0.05;
    /// Largest allowed share of the outermost shell in the summability partial sum.
    double summable_share = 0.10;
};

struct VdcParams {
    VdcThresholds thresholds;
    /// Defaults by group: 20 on the integer line, 4 for lattices and direct
    /// sums (support level), 1 for finite fields.
    std::optional<std::int64_t> shift_radius;
    std::vector<std::int64_t> checkpoints = geometric_checkpoints(1000, 7);
    /// Tail statistics use checkpoints N >= window_start.
    std::int64_t window_start = 10'000;
    AveragingOptions opts;
};

std::int64_t default_shift_radius(const GroupDescriptor& group);

/// Norms at checkpoints and the least-squares slope of log norm against log N.
struct DecayTrace {
    std::vector<std::int64_t> checkpoints;
    std::vector<Scalar> norm_squares;
    std::vector<double> norms;
    /// nullopt when fewer than two norms are positive.
    std::optional<double> exponent;
};

std::optional<double> fit_decay_exponent(const std::vector<std::int64_t>& checkpoints, const std::vector<double>& norms);
DecayTrace make_trace(std::vector<std::int64_t> checkpoints, std::vector<Scalar> norm_squares);
/// One line per checkpoint: "N norm norm_sq exactness".
std::vector<std::string> trace_rows(const DecayTrace& trace);

struct VdcDiagnostics {
    /// Probed shifts other than e_G, shell by shell.
    std::vector<GroupElement> shifts;
    std::vector<std::size_t> shell_of;
    std::vector<double> tail_sups;
    std::vector<double> tail_infs;
    /// Per shell r = 1..R (index r - 1).
    std::vector<double> shell_sup;
    std::vector<double> shell_inf;
    /// Cesaro average of tail_sups (and tail_infs) over shells 1..r.
    std::vector<double> cesaro;
    std::vector<double> cesaro_lower;
    /// sum of tail_sup^2 over shells 1..r.
    std::vector<double> partial_sums;
    /// Share of the outermost shell in the last partial sum; 0 when the sum is 0.
    double last_block_share = 0.0;
};

struct VdcVerdict {
    VdcMode mode = VdcMode::PerShift;
    VdcThresholds thresholds;
    std::int64_t shift_radius = 0;
    std::int64_t window_start = 0;
    /// Bound 0: nothing was computed and both tags are supported.
    bool degenerate = false;
    VdcDiagnostics diagnostics;
    DecayTrace conclusion;
    Tag hypothesis = Tag::Inconclusive;
    Tag conclusion_tag = Tag::Inconclusive;
};

/// Tags from the stored numbers only.
std::pair<Tag, Tag> derive_tags(VdcMode mode, const VdcDiagnostics& diag, const DecayTrace& conclusion, const VdcThresholds& thresholds,
                                std::int64_t window_start);

VdcDiagnostics vdc_diagnostics(const CorrelationProfile& profile, const std::vector<std::vector<GroupElement>>& shells, std::int64_t window_start);

VdcVerdict check_vdc(const VectorSequence& u, const FolnerFamily& family, VdcMode mode, const VdcParams& params = {});

/// ||(1/|F_N|) sum c(g) u(g)|| at each checkpoint; c must be scalar valued.
DecayTrace weighted_average_trace(const VectorSequence& u, const VectorSequence& c, const FolnerFamily& family,
                                  const std::vector<std::int64_t>& checkpoints, const AveragingOptions& opts = {});

/// ||(1/|F_N|) sum u(g) w(g)||_2 at each checkpoint, products taken pointwise.
DecayTrace disjointness_trace(const VectorSequence& u, const VectorSequence& w, const FolnerFamily& family,
                              const std::vector<std::int64_t>& checkpoints, const AveragingOptions& opts = {});

/// For u(g) = T_g f with finitely supported correlations and w(g) a scalar
/// multiple of the unit:
///   ||(1/|F|) sum w(g) T_g f||^2 = (1/|F|^2) sum_d gamma(d) sum_{g, g+d in F} w(g+d) conj w(g).
Scalar disjointness_norm_square_expansion(const VectorSequence& u, const VectorSequence& w, const FolnerWindow& window);

/// Nested key = value records: params, diagnostics, trace rows, tags.
std::string to_structured_text(const VdcVerdict& verdict);

}  // namespace ergo
