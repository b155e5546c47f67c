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

#include "ergo/averaging/averaging.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <sstream>

#include "ergo/core/text_util.hpp"
#include "ergo/group/group_text.hpp"

namespace ergo {

namespace {

struct ScalarBlock {
    ScalarSum sum;
    void merge(const ScalarBlock& o) { sum.merge(o.sum); }
};

struct VectorBlock {
    HilbertSum sum;
    void merge(const VectorBlock& o) { sum.merge(o.sum); }
};

void check_group(const VectorSequence& u, const FolnerWindow& window) { require_same(u.group(), window.descriptor(), "averaging"); }

void check_budget(const FolnerWindow& window, const AveragingOptions& opts) {
    if (window.size() > opts.budget) throw BudgetExceeded("Folner set", window.size(), opts.budget);
}

/// Orbit sequences: <T_{a(g+h)} f, T_{a(g)} f> = <T_{a(g+h)-a(g)} f, f>, so the
/// sum only needs a histogram of differences.
Scalar orbit_correlation(const VectorSequence& u, const GroupElement& h, const FolnerWindow& window) {
    const System& sys = *u.orbit_system();
    const Observable& f = *u.orbit_observable();
    const GroupSelfMap& a = *u.orbit_map();
    const auto& group = u.group();
    std::map<GroupElement, std::int64_t> hist;
    if (std::holds_alternative<selfmap::Identity>(a.variant())) {
        hist[h] = static_cast<std::int64_t>(window.size());
    } else {
        window.for_each([&](const GroupElement& g) { ++hist[group.subtract(a.apply(group, group.combine(g, h)), a.apply(group, g))]; });
    }
    ScalarSum acc;
    for (const auto& [d, count] : hist) acc.add(sys.correlation(f, d) * Scalar(Rational(count)));
    return acc.result() / Rational(static_cast<long long>(window.size()));
}

std::string pad(const std::string& s, std::size_t width) { return s.size() >= width ? s + " " : s + std::string(width - s.size(), ' '); }

}  // namespace

HilbertVector folner_average(const VectorSequence& u, const FolnerWindow& window, const AveragingOptions& opts) {
    check_group(u, window);
    check_budget(window, opts);
    const auto total = reduce_blocks<VectorBlock>(window.size(), opts, [&](std::size_t begin, std::size_t end) {
        VectorBlock b;
        for (std::size_t i = begin; i < end; ++i) b.sum.add(u(window.element(i)));
        return b;
    });
    return total.sum.average(window.size(), u(window.element(0)));
}

HilbertVector folner_average(const VectorSequence& u, const FolnerFamily& family, std::int64_t n, const AveragingOptions& opts) {
    return folner_average(u, family.window(n, opts.budget), opts);
}

Scalar pair_average(const VectorSequence& x, const VectorSequence& y, const FolnerWindow& window, const AveragingOptions& opts) {
    check_group(x, window);
    check_group(y, window);
    check_budget(window, opts);
    const auto total = reduce_blocks<ScalarBlock>(window.size(), opts, [&](std::size_t begin, std::size_t end) {
        ScalarBlock b;
        for (std::size_t i = begin; i < end; ++i) {
            const GroupElement g = window.element(i);
            b.sum.add(inner(x(g), y(g)));
        }
        return b;
    });
    return total.sum.result() / Rational(static_cast<long long>(window.size()));
}

Scalar mean_square(const VectorSequence& u, const FolnerWindow& window, const AveragingOptions& opts) {
    return pair_average(u, u, window, opts);
}

Scalar shifted_correlation(const VectorSequence& u, const GroupElement& h, const FolnerWindow& window, const AveragingOptions& opts) {
    check_group(u, window);
    check_budget(window, opts);
    u.group().validate(h);
    if (u.kind() == VectorSequence::Kind::Orbit) return orbit_correlation(u, h, window);
    const auto total = reduce_blocks<ScalarBlock>(window.size(), opts, [&](std::size_t begin, std::size_t end) {
        ScalarBlock b;
        for (std::size_t i = begin; i < end; ++i) {
            const GroupElement g = window.element(i);
            b.sum.add(inner(u(u.group().combine(g, h)), u(g)));
        }
        return b;
    });
    return total.sum.result() / Rational(static_cast<long long>(window.size()));
}

std::size_t CorrelationProfile::shift_index(const GroupElement& h) const {
    for (std::size_t i = 0; i < shifts.size(); ++i)
        if (shifts[i] == h) return i;
    throw InvalidInput("shift " + to_text(h) + " is not in the profile");
}

namespace {

/// Scalar sequences on nested intervals [1, N] with at least one inexact value:
/// evaluate u once on [1 + min h, N_max + max h] and keep running sums per shift.
bool interval_float_profile(const VectorSequence& u, const FolnerFamily& family, CorrelationProfile& out, const AveragingOptions& opts) {
    if (family.descriptor().kind() != GroupKind::IntegerLine || family.rule() != FolnerRule::Interval || family.has_translation()) return false;
    if (out.checkpoints.empty() || !std::is_sorted(out.checkpoints.begin(), out.checkpoints.end()) || out.checkpoints.front() < 1) return false;
    if (!std::holds_alternative<Scalar>(u(GroupElement{1}))) return false;
    std::int64_t hmin = 0, hmax = 0;
    for (const auto& h : out.shifts) {
        hmin = std::min(hmin, h[0]);
        hmax = std::max(hmax, h[0]);
    }
    const std::int64_t first = 1 + hmin, last = out.checkpoints.back() + hmax;
    const auto count = static_cast<std::size_t>(last - first + 1);
    if (count > opts.budget) throw BudgetExceeded("Folner set", count, opts.budget);
    std::vector<std::complex<double>> v(count);
    bool inexact = false;
    for (std::size_t i = 0; i < count; ++i) {
        const auto s = std::get<Scalar>(u(GroupElement{first + static_cast<std::int64_t>(i)}));
        inexact = inexact || !s.is_exact();
        v[i] = s.value();
    }
    if (!inexact) return false;
    for (std::size_t i = 0; i < out.shifts.size(); ++i) {
        const std::int64_t h = out.shifts[i][0];
        std::complex<double> sum = 0.0, comp = 0.0;
        std::size_t next = 0;
        for (std::int64_t n = 1; n <= out.checkpoints.back(); ++n) {
            const std::complex<double> term = v[static_cast<std::size_t>(n + h - first)] * std::conj(v[static_cast<std::size_t>(n - first)]) - comp;
            const std::complex<double> t = sum + term;
            comp = (t - sum) - term;
            sum = t;
            while (next < out.checkpoints.size() && out.checkpoints[next] == n) {
                out.values[i].push_back(Scalar::approximate(sum / static_cast<double>(n)));
                ++next;
            }
        }
    }
    out.exact = false;
    return true;
}

}  // namespace

CorrelationProfile correlation_profile(const VectorSequence& u, const FolnerFamily& family, const std::vector<GroupElement>& shifts,
                                       const std::vector<std::int64_t>& checkpoints, const AveragingOptions& opts) {
    require_same(u.group(), family.descriptor(), "correlation profile");
    for (const auto& h : shifts) u.group().validate(h);
    CorrelationProfile out;
    out.shifts = shifts;
    out.checkpoints = checkpoints;
    out.values.assign(shifts.size(), {});
    if (interval_float_profile(u, family, out, opts)) return out;
    for (const auto n : checkpoints) {
        const FolnerWindow window = family.window(n, opts.budget);
        for (std::size_t i = 0; i < shifts.size(); ++i) {
            Scalar v = shifted_correlation(u, shifts[i], window, opts);
            out.exact = out.exact && v.is_exact();
            out.values[i].push_back(std::move(v));
        }
    }
    return out;
}

namespace {

std::vector<double> tail_moduli(const CorrelationProfile& profile, const GroupElement& h, std::int64_t window_start) {
    const std::size_t i = profile.shift_index(h);
    std::vector<double> out;
    for (std::size_t j = 0; j < profile.checkpoints.size(); ++j)
        if (profile.checkpoints[j] >= window_start) out.push_back(profile.values[i][j].abs());
    if (out.empty()) throw InvalidInput("no checkpoints at or beyond " + std::to_string(window_start));
    return out;
}

}  // namespace

double tail_sup(const CorrelationProfile& profile, const GroupElement& h, std::int64_t window_start) {
    const auto v = tail_moduli(profile, h, window_start);
    return *std::max_element(v.begin(), v.end());
}

double tail_inf(const CorrelationProfile& profile, const GroupElement& h, std::int64_t window_start) {
    const auto v = tail_moduli(profile, h, window_start);
    return *std::min_element(v.begin(), v.end());
}

std::string profile_table(const CorrelationProfile& profile, std::int64_t window_start) {
    std::ostringstream out;
    out << pad("h", 16) << pad("N", 12) << pad("re", 16) << pad("im", 16) << "tail_sup\n";
    for (std::size_t i = 0; i < profile.shifts.size(); ++i) {
        std::string tail = "-";
        bool has_tail = false;
        for (auto n : profile.checkpoints) has_tail = has_tail || n >= window_start;
        if (has_tail) tail = text::format_sci(tail_sup(profile, profile.shifts[i], window_start));
        for (std::size_t j = 0; j < profile.checkpoints.size(); ++j) {
            const auto z = profile.values[i][j].value();
            out << pad(to_text(profile.shifts[i]), 16) << pad(std::to_string(profile.checkpoints[j]), 12) << pad(text::format_sci(z.real()), 16)
                << pad(text::format_sci(z.imag()), 16) << tail << "\n";
        }
    }
    return out.str();
}

std::vector<std::int64_t> geometric_checkpoints(std::int64_t n0, int doublings) {
    if (n0 < 1 || doublings < 0) throw InvalidInput("checkpoints need n0 >= 1 and doublings >= 0");
    std::vector<std::int64_t> out;
    std::int64_t n = n0;
    for (int k = 0; k <= doublings; ++k) {
        out.push_back(n);
        if (__builtin_mul_overflow(n, 2, &n)) break;
    }
    return out;
}

std::vector<std::vector<GroupElement>> shift_shells(const GroupDescriptor& group, std::int64_t radius, std::size_t budget) {
    if (radius < 0) throw InvalidInput("shell radius must be nonnegative");
    std::vector<std::vector<GroupElement>> shells{{group.identity()}};
    std::size_t total = 1;
    auto push = [&](std::vector<GroupElement> shell) {
        total += shell.size();
        if (total > budget) throw BudgetExceeded("shift shells", total, budget);
        shells.push_back(std::move(shell));
    };
    // all vectors in [-r, r]^len (or [0, p)^len) with a predicate, lexicographic
    auto enumerate = [&](std::size_t len, std::int64_t lo, std::int64_t hi, auto keep) {
        std::vector<GroupElement> out;
        std::vector<std::int64_t> c(len, lo);
        while (true) {
            GroupElement g(c);
            if (keep(c)) out.push_back(g);
            std::size_t i = len;
            while (i > 0) {
                --i;
                if (++c[i] <= hi) break;
                c[i] = lo;
                if (i == 0) return out;
            }
            if (len == 0) return out;
        }
    };
    switch (group.kind()) {
        case GroupKind::IntegerLine:
            for (std::int64_t r = 1; r <= radius; ++r) push({GroupElement{r}, GroupElement{-r}});
            break;
        case GroupKind::IntegerLattice:
            for (std::int64_t r = 1; r <= radius; ++r) {
                push(enumerate(group.rank(), -r, r, [&](const std::vector<std::int64_t>& c) {
                    std::int64_t m = 0;
                    for (auto x : c) m = std::max<std::int64_t>(m, x < 0 ? -x : x);
                    return m == r;
                }));
            }
            break;
        case GroupKind::FreeAbelianDirectSum:
            for (std::int64_t r = 1; r <= radius; ++r) {
                push(enumerate(static_cast<std::size_t>(r), -r, r, [&](const std::vector<std::int64_t>& c) {
                    std::int64_t m = 0;
                    for (auto x : c) m = std::max<std::int64_t>(m, x < 0 ? -x : x);
                    return m == r || (c.back() != 0 && m <= r);
                }));
            }
            break;
        case GroupKind::PrimeDirectSum:
        case GroupKind::PolynomialRing:
            for (std::int64_t level = 1; level <= radius; ++level) {
                push(enumerate(static_cast<std::size_t>(level), 0, group.prime() - 1,
                               [](const std::vector<std::int64_t>& c) { return c.back() != 0; }));
            }
            break;
        case GroupKind::FiniteFieldLevel:
            if (radius >= 1)
                push(enumerate(group.rank(), 0, group.prime() - 1, [](const std::vector<std::int64_t>& c) {
                    return std::any_of(c.begin(), c.end(), [](std::int64_t x) { return x != 0; });
                }));
            break;
    }
    return shells;
}

SubsequencePlan select_subsequence(const std::vector<SequencePair>& pairs, const FolnerFamily& family, double tolerance,
                                   const std::vector<std::int64_t>& checkpoints, const AveragingOptions& opts) {
    if (pairs.empty() || pairs.size() > 64) throw InvalidInput("subsequence selection tracks between 1 and 64 pairs");
    if (!std::is_sorted(checkpoints.begin(), checkpoints.end())) throw InvalidInput("checkpoints must be increasing");
    SubsequencePlan plan;
    plan.tolerance = tolerance;
    plan.pair_count = pairs.size();
    plan.scanned = checkpoints;
    plan.pair_traces.assign(pairs.size(), {});
    std::vector<std::size_t> kept;
    for (std::size_t j = 0; j < checkpoints.size(); ++j) {
        const FolnerWindow window = family.window(checkpoints[j], opts.budget);
        for (std::size_t i = 0; i < pairs.size(); ++i) plan.pair_traces[i].push_back(pair_average(pairs[i].first, pairs[i].second, window, opts));
        if (kept.empty()) {
            kept.push_back(j);
            continue;
        }
        double moved = 0.0;
        for (std::size_t i = 0; i < pairs.size(); ++i)
            moved = std::max(moved, std::abs(plan.pair_traces[i][j].value() - plan.pair_traces[i][kept.back()].value()));
        if (moved < tolerance)
            kept.push_back(j);
        else if (kept.size() == 1)
            kept.back() = j;
    }
    for (auto j : kept) plan.indices.push_back(checkpoints[j]);
    if (plan.indices.size() < 3)
        throw ConvergenceFailure("only " + std::to_string(plan.indices.size()) + " checkpoints stabilized within tolerance " +
                                 text::format_double(tolerance));
    return plan;
}

SequenceInnerProduct sequence_inner_product(const VectorSequence& x, const VectorSequence& y, const FolnerFamily& family,
                                            const SubsequencePlan& plan, const AveragingOptions& opts) {
    if (plan.indices.empty()) throw InvalidInput("empty subsequence plan");
    SequenceInnerProduct out;
    for (auto n : plan.indices) out.trace.push_back(pair_average(x, y, family.window(n, opts.budget), opts));
    out.value = out.trace.back();
    for (std::size_t i = 1; i < out.trace.size(); ++i)
        out.fluctuation = std::max(out.fluctuation, std::abs(out.trace[i].value() - out.value.value()));
    out.stabilized = out.fluctuation <= plan.tolerance;
    return out;
}

}  // namespace ergo
