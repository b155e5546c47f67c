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

#include "ergo/vdc/vdc.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <unordered_map>

#include "ergo/core/text_util.hpp"
#include "ergo/group/group_text.hpp"

namespace ergo {

std::string mode_name(VdcMode mode) {
    switch (mode) {
        case VdcMode::PerShift: return "per_shift";
        case VdcMode::Strong: return "strong";
        case VdcMode::Cesaro: return "cesaro";
        case VdcMode::Summable: return "summable";
    }
    return "unknown";
}

VdcMode parse_mode(std::string_view name) {
    for (auto m : {VdcMode::PerShift, VdcMode::Strong, VdcMode::Cesaro, VdcMode::Summable})
        if (mode_name(m) == name) return m;
    throw ParseError("unknown vdc mode '" + std::string(name) + "'");
}

std::string tag_name(std::string_view side, Tag tag) {
    std::string s(side);
    switch (tag) {
        case Tag::Supported: return s + "_supported";
        case Tag::Refuted: return s + "_refuted";
        case Tag::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::int64_t default_shift_radius(const GroupDescriptor& group) {
    switch (group.kind()) {
        case GroupKind::IntegerLine: return 20;
        case GroupKind::FiniteFieldLevel: return 1;
        default: return 4;
    }
}

std::optional<double> fit_decay_exponent(const std::vector<std::int64_t>& checkpoints, const std::vector<double>& norms) {
    if (checkpoints.size() != norms.size()) throw InvalidInput("trace lengths differ");
    std::vector<std::pair<double, double>> pts;
    for (std::size_t i = 0; i < norms.size(); ++i)
        if (norms[i] > 0.0 && checkpoints[i] > 0) pts.emplace_back(std::log(static_cast<double>(checkpoints[i])), std::log(norms[i]));
    if (pts.size() < 2) return std::nullopt;
    double mx = 0, my = 0;
    for (const auto& [x, y] : pts) {
        mx += x;
        my += y;
    }
    mx /= static_cast<double>(pts.size());
    my /= static_cast<double>(pts.size());
    double sxy = 0, sxx = 0;
    for (const auto& [x, y] : pts) {
        sxy += (x - mx) * (y - my);
        sxx += (x - mx) * (x - mx);
    }
    if (sxx == 0.0) return std::nullopt;
    return sxy / sxx;
}

DecayTrace make_trace(std::vector<std::int64_t> checkpoints, std::vector<Scalar> norm_squares) {
    DecayTrace t;
    t.checkpoints = std::move(checkpoints);
    t.norm_squares = std::move(norm_squares);
    for (const auto& s : t.norm_squares) t.norms.push_back(std::sqrt(std::max(0.0, s.value().real())));
    t.exponent = fit_decay_exponent(t.checkpoints, t.norms);
    return t;
}

std::vector<std::string> trace_rows(const DecayTrace& trace) {
    std::vector<std::string> rows;
    for (std::size_t i = 0; i < trace.checkpoints.size(); ++i) {
        rows.push_back("N=" + std::to_string(trace.checkpoints[i]) + " norm=" + text::format_sci(trace.norms[i]) +
                       " norm_sq=" + text::format_sci(trace.norm_squares[i].value().real()) +
                       (trace.norm_squares[i].is_exact() ? " exact" : " float"));
    }
    return rows;
}

VdcDiagnostics vdc_diagnostics(const CorrelationProfile& profile, const std::vector<std::vector<GroupElement>>& shells, std::int64_t window_start) {
    VdcDiagnostics d;
    for (std::size_t r = 1; r < shells.size(); ++r) {
        double sup = 0.0, inf = 0.0, sq = 0.0;
        for (const auto& h : shells[r]) {
            const double s = tail_sup(profile, h, window_start);
            const double i = tail_inf(profile, h, window_start);
            d.shifts.push_back(h);
            d.shell_of.push_back(r);
            d.tail_sups.push_back(s);
            d.tail_infs.push_back(i);
            sup = std::max(sup, s);
            inf = std::max(inf, i);
            sq += s * s;
        }
        d.shell_sup.push_back(sup);
        d.shell_inf.push_back(inf);
        d.partial_sums.push_back((d.partial_sums.empty() ? 0.0 : d.partial_sums.back()) + sq);
        double total = 0.0, lower = 0.0;
        for (std::size_t j = 0; j < d.tail_sups.size(); ++j) {
            total += d.tail_sups[j];
            lower += d.tail_infs[j];
        }
        const auto n = static_cast<double>(std::max<std::size_t>(d.tail_sups.size(), 1));
        d.cesaro.push_back(total / n);
        d.cesaro_lower.push_back(lower / n);
    }
    if (!d.partial_sums.empty() && d.partial_sums.back() > 0.0) {
        const double before = d.partial_sums.size() > 1 ? d.partial_sums[d.partial_sums.size() - 2] : 0.0;
        d.last_block_share = (d.partial_sums.back() - before) / d.partial_sums.back();
    }
    return d;
}

std::pair<Tag, Tag> derive_tags(VdcMode mode, const VdcDiagnostics& diag, const DecayTrace& conclusion, const VdcThresholds& th,
                                std::int64_t window_start) {
    Tag hyp = Tag::Inconclusive;
    if (!diag.shell_sup.empty()) {
        const double thr = th.hypothesis;
        switch (mode) {
            case VdcMode::PerShift: {
                const double sup = *std::max_element(diag.tail_sups.begin(), diag.tail_sups.end());
                const double inf = *std::max_element(diag.tail_infs.begin(), diag.tail_infs.end());
                hyp = sup <= thr ? Tag::Supported : inf > thr ? Tag::Refuted : Tag::Inconclusive;
                break;
            }
            case VdcMode::Strong:
                hyp = diag.shell_sup.back() <= thr ? Tag::Supported : diag.shell_inf.back() > thr ? Tag::Refuted : Tag::Inconclusive;
                break;
            case VdcMode::Cesaro:
                hyp = diag.cesaro.back() <= thr ? Tag::Supported : diag.cesaro_lower.back() > thr ? Tag::Refuted : Tag::Inconclusive;
                break;
            case VdcMode::Summable:
                if (diag.last_block_share < th.summable_share && diag.shell_sup.back() <= thr)
                    hyp = Tag::Supported;
                else if (diag.shell_inf.back() > thr)
                    hyp = Tag::Refuted;
                break;
        }
    }
    Tag con = Tag::Inconclusive;
    if (!conclusion.norms.empty()) {
        double tail_min = -1.0;
        for (std::size_t i = 0; i < conclusion.norms.size(); ++i)
            if (conclusion.checkpoints[i] >= window_start) tail_min = tail_min < 0 ? conclusion.norms[i] : std::min(tail_min, conclusion.norms[i]);
        if (conclusion.norms.back() <= th.conclusion)
            con = Tag::Supported;
        else if (tail_min > th.conclusion)
            con = Tag::Refuted;
    }
    return {hyp, con};
}

VdcVerdict check_vdc(const VectorSequence& u, const FolnerFamily& family, VdcMode mode, const VdcParams& params) {
    require_same(u.group(), family.descriptor(), "vdc check");
    if (params.checkpoints.empty()) throw InvalidInput("vdc check needs checkpoints");
    VdcVerdict v;
    v.mode = mode;
    v.thresholds = params.thresholds;
    v.shift_radius = params.shift_radius.value_or(default_shift_radius(u.group()));
    v.window_start = params.window_start;
    if (u.bound() == 0.0) {
        v.degenerate = true;
        v.conclusion = make_trace(params.checkpoints, std::vector<Scalar>(params.checkpoints.size(), Scalar(0)));
        v.hypothesis = v.conclusion_tag = Tag::Supported;
        return v;
    }
    const auto shells = shift_shells(u.group(), v.shift_radius);
    std::vector<GroupElement> shifts;
    for (std::size_t r = 1; r < shells.size(); ++r) shifts.insert(shifts.end(), shells[r].begin(), shells[r].end());
    const auto profile = correlation_profile(u, family, shifts, params.checkpoints, params.opts);
    v.diagnostics = vdc_diagnostics(profile, shells, params.window_start);
    std::vector<Scalar> squares;
    for (const auto n : params.checkpoints) {
        const auto a = folner_average(u, family.window(n, params.opts.budget), params.opts);
        squares.push_back(inner(a, a));
    }
    v.conclusion = make_trace(params.checkpoints, std::move(squares));
    std::tie(v.hypothesis, v.conclusion_tag) = derive_tags(mode, v.diagnostics, v.conclusion, v.thresholds, v.window_start);
    return v;
}

namespace {

DecayTrace product_trace(const VectorSequence& prod, const FolnerFamily& family, const std::vector<std::int64_t>& checkpoints,
                         const AveragingOptions& opts) {
    std::vector<Scalar> squares;
    for (const auto n : checkpoints) {
        const auto a = folner_average(prod, family.window(n, opts.budget), opts);
        squares.push_back(inner(a, a));
    }
    return make_trace(checkpoints, std::move(squares));
}

Scalar weight_value(const HilbertVector& v) {
    if (const auto* s = std::get_if<Scalar>(&v)) return *s;
    const auto& f = std::get<Observable>(v);
    const Scalar c = integral(f);
    if (!(f - Observable::constant(f.space(), c)).is_zero()) throw InvalidInput("weight is not a multiple of the unit");
    return c;
}

}  // namespace

DecayTrace weighted_average_trace(const VectorSequence& u, const VectorSequence& c, const FolnerFamily& family,
                                  const std::vector<std::int64_t>& checkpoints, const AveragingOptions& opts) {
    require_same(u.group(), c.group(), "weighted average");
    if (!std::holds_alternative<Scalar>(c(u.group().identity()))) throw InvalidInput("weights must be scalar valued");
    return product_trace(VectorSequence::product({c, u}), family, checkpoints, opts);
}

DecayTrace disjointness_trace(const VectorSequence& u, const VectorSequence& w, const FolnerFamily& family,
                              const std::vector<std::int64_t>& checkpoints, const AveragingOptions& opts) {
    require_same(u.group(), w.group(), "disjointness");
    return product_trace(VectorSequence::product({u, w}), family, checkpoints, opts);
}

Scalar disjointness_norm_square_expansion(const VectorSequence& u, const VectorSequence& w, const FolnerWindow& window) {
    if (u.kind() != VectorSequence::Kind::Orbit || !std::holds_alternative<selfmap::Identity>(u.orbit_map()->variant()))
        throw CapabilityError("norm expansion needs u(g) = T_g f");
    const System& sys = *u.orbit_system();
    const Observable& f = *u.orbit_observable();
    const auto support = sys.correlation_support(f);
    if (!support) throw CapabilityError("norm expansion needs finitely supported correlations");
    const auto& group = window.descriptor();
    require_same(u.group(), group, "norm expansion");
    require_same(w.group(), group, "norm expansion");
    const auto elements = window.elements();
    std::unordered_map<GroupElement, std::size_t, GroupElementHash> index;
    std::vector<Scalar> weights;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        index.emplace(elements[i], i);
        weights.push_back(weight_value(w(elements[i])));
    }
    ScalarSum total;
    for (const auto& d : *support) {
        const Scalar gamma = sys.correlation(f, d);
        if (gamma.is_exact_zero()) continue;
        ScalarSum inner_sum;
        for (std::size_t i = 0; i < elements.size(); ++i) {
            const auto it = index.find(group.combine(elements[i], d));
            if (it != index.end()) inner_sum.add(weights[it->second] * weights[i].conj());
        }
        total.add(gamma * inner_sum.result());
    }
    const Rational n(static_cast<long long>(elements.size()));
    return total.result() / (n * n);
}

std::string to_structured_text(const VdcVerdict& v) {
    std::ostringstream out;
    const auto& d = v.diagnostics;
    out << "[vdc]\n";
    out << "mode = " << mode_name(v.mode) << "\n";
    out << "hypothesis = " << tag_name("hypothesis", v.hypothesis) << "\n";
    out << "conclusion = " << tag_name("conclusion", v.conclusion_tag) << "\n";
    out << "degenerate = " << (v.degenerate ? "true" : "false") << "\n";
    out << "shift_radius = " << v.shift_radius << "\n";
    out << "window_start = " << v.window_start << "\n";
    out << "threshold_hypothesis = " << text::format_double(v.thresholds.hypothesis) << "\n";
    out << "threshold_conclusion = " << text::format_double(v.thresholds.conclusion) << "\n";
    out << "threshold_summable_share = " << text::format_double(v.thresholds.summable_share) << "\n";
    out << "last_block_share = " << text::format_sci(d.last_block_share) << "\n";
    out << "[vdc.shifts]\n";
    for (std::size_t i = 0; i < d.shifts.size(); ++i)
        out << "h=" << to_text(d.shifts[i]) << " shell=" << d.shell_of[i] << " tail_sup=" << text::format_sci(d.tail_sups[i])
            << " tail_inf=" << text::format_sci(d.tail_infs[i]) << "\n";
    out << "[vdc.shells]\n";
    for (std::size_t r = 0; r < d.shell_sup.size(); ++r)
        out << "r=" << r + 1 << " sup=" << text::format_sci(d.shell_sup[r]) << " inf=" << text::format_sci(d.shell_inf[r])
            << " cesaro=" << text::format_sci(d.cesaro[r]) << " cesaro_lower=" << text::format_sci(d.cesaro_lower[r])
            << " partial_sum=" << text::format_sci(d.partial_sums[r]) << "\n";
    out << "[vdc.trace]\n";
    out << "exponent = " << (v.conclusion.exponent ? text::format_sci(*v.conclusion.exponent) : std::string("none")) << "\n";
    for (const auto& row : trace_rows(v.conclusion)) out << row << "\n";
    return out.str();
}

}  // namespace ergo
