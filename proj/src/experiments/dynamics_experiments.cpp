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

#include <algorithm>
#include <cmath>

#include "ergo/averaging/averaging.hpp"
#include "ergo/core/text_util.hpp"
#include "ergo/experiments/experiments.hpp"
#include "ergo/group/group_text.hpp"
#include "ergo/spectral/spectral.hpp"
#include "ergo/vdc/vdc.hpp"

namespace ergo {

namespace {

std::string flag(bool b) { return b ? "true" : "false"; }

GroupSelfMap power_map(std::int64_t degree) {
    if (degree < 1 || degree > 4) throw InvalidInput("degree must lie in 1..4");
    return degree == 1 ? GroupSelfMap::identity() : GroupSelfMap::power(Rational(degree));
}

std::vector<Rational> parse_probs(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& s : text::parse_list(text)) out.push_back(parse_rational(s));
    return out;
}

Observable wave_or_unit(const System& sys, std::int64_t k) {
    return k == 0 ? sys.one() : Observable::wave(sys.space(), Frequency{k});
}

/// Intervals of [0, 1) covering the arc [lo - x, hi - x) mod 1.
std::vector<std::pair<double, double>> arc(double lo, double hi, double x) {
    const double len = hi - lo;
    if (len <= 0.0) return {};
    if (len >= 1.0) return {{0.0, 1.0}};
    double s = lo - x;
    s -= std::floor(s);
    if (s + len <= 1.0) return {{s, s + len}};
    return {{s, 1.0}, {0.0, s + len - 1.0}};
}

std::vector<std::pair<double, double>> intersect(const std::vector<std::pair<double, double>>& a, const std::vector<std::pair<double, double>>& b) {
    std::vector<std::pair<double, double>> out;
    for (const auto& [x1, y1] : a)
        for (const auto& [x2, y2] : b) {
            const double lo = std::max(x1, x2), hi = std::min(y1, y2);
            if (hi > lo) out.emplace_back(lo, hi);
        }
    return out;
}

}  // namespace

double triple_intersection(double lo, double hi, double x, double y) {
    const auto i = intersect(intersect(arc(lo, hi, 0.0), arc(lo, hi, x)), arc(lo, hi, y));
    double m = 0.0;
    for (const auto& [a, b] : i) m += b - a;
    return m;
}

ExperimentReport run_weyl_vdc(const ExperimentConfig& config) {
    const auto line = GroupDescriptor::integer_line();
    const Angle alpha = parse_angle(config.get("alpha"));
    const System torus = System::torus(line, 1, {{alpha}});
    const auto u = VectorSequence::eigen_phase(torus, Frequency{1}, power_map(config.get_int("degree")));
    const FolnerFamily family = FolnerFamily::interval(line);
    VdcParams params;
    params.thresholds.hypothesis = config.get_double("hypothesis_threshold");
    params.thresholds.conclusion = config.get_double("conclusion_threshold");
    params.thresholds.summable_share = config.get_double("summable_share");
    params.shift_radius = config.get_int("radius");
    params.checkpoints = geometric_checkpoints(config.get_int("n0"), static_cast<int>(config.get_int("doublings")));
    params.window_start = config.get_int("window_start");
    params.opts.threads = static_cast<std::size_t>(std::max<std::int64_t>(1, config.get_int("threads")));
    params.opts.budget = config.budget();
    const VdcMode mode = parse_mode(config.get("mode"));
    const VdcVerdict verdict = check_vdc(u, family, mode, params);

    ExperimentReport r;
    r.experiment = "weyl_vdc";
    r.config = config;
    const auto cn = config.get_int("conclusion_n");
    const auto a = folner_average(u, family, cn, params.opts);
    const double max_tail = verdict.diagnostics.tail_sups.empty()
                                ? 0.0
                                : *std::max_element(verdict.diagnostics.tail_sups.begin(), verdict.diagnostics.tail_sups.end());
    r.add_summary("sequence", "e(alpha * n^" + config.get("degree") + ")");
    r.add_summary("max_tail_sup", text::format_sci(max_tail));
    r.add_summary("last_block_share", text::format_sci(verdict.diagnostics.last_block_share));
    r.add_summary("conclusion_n", std::to_string(cn));
    r.add_summary("conclusion_norm", text::format_sci(norm(a)));
    r.add_summary("decay_exponent", verdict.conclusion.exponent ? text::format_sci(*verdict.conclusion.exponent) : "none");
    r.add_verdict("hypothesis", tag_name("hypothesis", verdict.hypothesis));
    r.add_verdict("conclusion", tag_name("conclusion", verdict.conclusion_tag));
    auto& t = r.add_table("trace", {"trace"});
    for (const auto& row : trace_rows(verdict.conclusion)) t.add_row({row});
    r.records.push_back(to_structured_text(verdict));
    return r;
}

ExperimentReport run_bernoulli_disjointness(const ExperimentConfig& config) {
    const auto line = GroupDescriptor::integer_line();
    const System sys = System::bernoulli(line, parse_probs(config.get("probs")));
    const auto sites = config.get_int("sites");
    if (sites < 1 || sites > 16) throw InvalidInput("sites must lie in 1..16");
    ChaosData terms;
    for (std::int64_t i = 0; i < sites; ++i) terms.emplace(Word{Site{line.reduce({i}), 1}}, Scalar(1));
    const Observable f = Observable::chaos(sys.space(), std::move(terms));
    const auto u = VectorSequence::orbit(sys, f);
    const System rotation = System::torus(line, 1, {{parse_angle(config.get("beta"))}});
    const auto w = VectorSequence::eigen_phase(rotation, Frequency{1});
    const FolnerFamily family = FolnerFamily::interval(line);
    const Scalar gamma0 = sys.correlation(f, line.identity());
    const auto lo = config.get_int("min_log2"), hi = config.get_int("max_log2");
    if (lo < 0 || hi < lo || hi > 24) throw InvalidInput("need 0 <= min_log2 <= max_log2 <= 24");

    ExperimentReport r;
    r.experiment = "bernoulli_disjointness";
    r.config = config;
    auto& table = r.add_table("trace", {"N", "norm_sq", "norm_sq_direct", "bound", "within_bound", "routes_agree", "exactness"});
    bool all_within = true, all_agree = true;
    std::vector<std::int64_t> checkpoints;
    std::vector<Scalar> squares;
    AveragingOptions opts;
    opts.budget = config.budget();
    for (auto e = lo; e <= hi; ++e) {
        const std::int64_t n = std::int64_t{1} << e;
        const FolnerWindow window = family.window(n, config.budget());
        const Scalar expansion = disjointness_norm_square_expansion(u, w, window);
        const DecayTrace direct = disjointness_trace(u, w, family, {n}, opts);
        const Scalar bound = gamma0 * Scalar(Rational(2, static_cast<long long>(n)));
        const auto sign = (bound - expansion).exact_real_sign();
        const bool within = sign ? *sign >= 0 : (bound - expansion).value().real() >= 0.0;
        const Scalar& d = direct.norm_squares.front();
        const bool agree = (expansion.is_exact() && d.is_exact()) ? expansion == d : std::abs(expansion.value() - d.value()) <= 1e-12;
        all_within = all_within && within;
        all_agree = all_agree && agree;
        table.add_row({std::to_string(n), expansion.to_text(), d.to_text(), bound.to_text(), flag(within), flag(agree),
                       expansion.is_exact() && sign ? "exact" : "float"});
        checkpoints.push_back(n);
        squares.push_back(expansion);
    }
    const DecayTrace trace = make_trace(checkpoints, squares);
    r.add_summary("gamma0", gamma0.to_text());
    r.add_summary("decay_exponent", trace.exponent ? text::format_sci(*trace.exponent) : "none");
    r.add_verdict("norm_sq_within_2gamma0_over_n", flag(all_within));
    r.add_verdict("expansion_matches_direct", flag(all_agree));
    return r;
}

ExperimentReport run_recurrence(const ExperimentConfig& config) {
    const auto line = GroupDescriptor::integer_line();
    const Angle alpha = parse_angle(config.get("alpha"));
    const Angle beta = parse_angle(config.get("beta"));
    const GroupSelfMap a = parse_selfmap(line, config.get("map"));
    const Rational lo = parse_rational(config.get("lo")), hi = parse_rational(config.get("hi"));
    if (lo < 0 || hi > 1 || hi < lo) throw InvalidInput("need 0 <= lo <= hi <= 1");
    const auto n = config.get_int("n");
    if (n < 1 || n > 100'000) throw InvalidInput("recurrence needs 1 <= n <= 100000");
    if (static_cast<std::size_t>(n) > config.budget()) throw BudgetExceeded("recurrence terms", static_cast<std::size_t>(n), config.budget());
    const double tol = config.get_double("tolerance");
    const Rational measure = hi - lo;
    const Rational bound = measure * measure * measure;
    const double lod = static_cast<double>(to_long_double(lo)), hid = static_cast<double>(to_long_double(hi));

    ExperimentReport r;
    r.experiment = "recurrence";
    r.config = config;
    auto& table = r.add_table("running_average", {"N", "average", "bound", "margin"});
    const std::int64_t step = std::max<std::int64_t>(1, n / 10);
    double total = 0.0, comp = 0.0;
    for (std::int64_t g = 1; g <= n; ++g) {
        const double x = static_cast<double>(alpha.scaled(g).value());
        const GroupElement ag = a.apply(line, GroupElement{g});
        const double y = static_cast<double>(beta.scaled(ag[0]).value());
        const double v = triple_intersection(lod, hid, x, y) - comp;
        const double t = total + v;
        comp = (t - total) - v;
        total = t;
        if (g % step == 0 || g == n) {
            const double avg = total / static_cast<double>(g);
            const double b = static_cast<double>(to_long_double(bound));
            table.add_row({std::to_string(g), text::format_sci(avg), to_string(bound), text::format_sci(avg - b)});
        }
    }
    const double avg = total / static_cast<double>(n);
    const double b = static_cast<double>(to_long_double(bound));
    r.add_summary("measure", to_string(measure));
    r.add_summary("bound", to_string(bound));
    r.add_summary("average", text::format_sci(avg));
    r.add_summary("tolerance", text::format_double(tol));
    r.add_verdict("average_at_least_bound_minus_tolerance", flag(avg >= b - tol));
    return r;
}

ExperimentReport run_joint_ergodicity_demo(const ExperimentConfig& config) {
    const auto line = GroupDescriptor::integer_line();
    const System t = System::torus(line, 1, {{parse_angle(config.get("alpha"))}});
    const System s = System::torus(line, 1, {{parse_angle(config.get("beta"))}});
    const GroupSelfMap a = parse_selfmap(line, config.get("map"));
    const Observable f0 = wave_or_unit(t, config.get_int("f0_frequency"));
    const Observable f1 = wave_or_unit(s, config.get_int("f1_frequency"));
    const auto prod = VectorSequence::product({VectorSequence::orbit(t, f0), VectorSequence::orbit(s, f1, a)});
    const Observable target = multiply(t.invariant_projection(f0), s.invariant_projection(f1));
    const FolnerFamily family = FolnerFamily::interval(line);
    const auto checkpoints = geometric_checkpoints(config.get_int("n0"), static_cast<int>(config.get_int("doublings")));
    const double tol = config.get_double("tolerance");
    AveragingOptions opts;
    opts.budget = config.budget();

    ExperimentReport r;
    r.experiment = "joint_ergodicity_demo";
    r.config = config;
    std::vector<Scalar> squares;
    for (const auto n : checkpoints) {
        const auto avg = std::get<Observable>(folner_average(prod, family, n, opts));
        const Observable diff = avg - target;
        squares.push_back(inner(diff, diff));
    }
    const DecayTrace trace = make_trace(checkpoints, squares);
    auto& table = r.add_table("deviation", {"trace"});
    for (const auto& row : trace_rows(trace)) table.add_row({row});
    r.add_summary("target", to_text(target));
    r.add_summary("deviation", text::format_sci(trace.norms.back()));
    r.add_summary("decay_exponent", trace.exponent ? text::format_sci(*trace.exponent) : "none");
    r.add_verdict("deviation_within_tolerance", flag(trace.norms.back() <= tol));
    return r;
}

ExperimentReport run_spectral_classify(const ExperimentConfig& config) {
    const std::string which = config.get("case");
    const auto n = config.get_int("n");
    const auto resolution = static_cast<std::size_t>(config.get_int("resolution"));
    const auto line = GroupDescriptor::integer_line();
    SpectralEstimate estimate;
    if (which == "bernoulli") {
        const System sys = System::bernoulli(line, {Rational(1, 2), Rational(1, 2)});
        const Observable f = Observable::chaos(sys.space(), {{Word{Site{line.identity(), 1}}, Scalar(1)}});
        estimate = estimate_spectrum(correlation_sequence(sys, f, n, config.budget()), resolution);
    } else if (which == "rotation") {
        const System sys = System::torus(line, 1, {{parse_angle(config.get("alpha"))}});
        estimate = estimate_spectrum(correlation_sequence(sys, Observable::wave(sys.space(), Frequency{1}), n, config.budget()), resolution);
    } else if (which == "mixture") {
        const Angle beta = parse_angle(config.get("alpha"));
        std::vector<Scalar> gamma;
        for (std::int64_t k = 0; k < n; ++k) gamma.push_back(Scalar(Rational(1, 2)) * Scalar::unit(beta.scaled(k)) + (k == 0 ? Scalar(Rational(1, 2)) : Scalar(0)));
        estimate = estimate_spectrum(CorrelationSequence::hermitian(gamma), resolution);
    } else if (which == "dual" || which == "dual_atom") {
        const auto p = config.get_int("p");
        const auto level = config.get_int("level");
        const auto group = GroupDescriptor::prime_sum(p);
        std::size_t size = 1;
        for (std::int64_t i = 0; i < level; ++i) size *= static_cast<std::size_t>(p);
        if (level < 1 || size > config.budget()) throw InvalidInput("dual level out of range");
        std::vector<Permutation> gens;
        std::size_t stride = size;
        for (std::int64_t j = 0; j < level; ++j) {
            stride /= static_cast<std::size_t>(p);
            Permutation perm(size);
            for (std::size_t x = 0; x < size; ++x) {
                const std::size_t digit = (x / stride) % static_cast<std::size_t>(p);
                perm[x] = x - digit * stride + ((digit + 1) % static_cast<std::size_t>(p)) * stride;
            }
            gens.push_back(std::move(perm));
        }
        const System sys = System::finite(group, std::vector<Rational>(size, Rational(1, static_cast<long long>(size))), gens,
                                          std::vector<std::int64_t>(static_cast<std::size_t>(level), p));
        std::vector<Scalar> values(size, Scalar(0));
        if (which == "dual") {
            values[0] = Scalar(1);
        } else {
            for (std::size_t x = 0; x < size; ++x)
                values[x] = Scalar::unit(CharValue{static_cast<std::int64_t>((x / (size / static_cast<std::size_t>(p))) % static_cast<std::size_t>(p)), p});
        }
        estimate = dual_level_estimate(sys, Observable::finite(sys.space(), std::move(values)), level, config.budget());
    } else {
        throw InvalidInput("unknown spectral case '" + which + "'");
    }
    const Classification c = classify_spectrum(estimate);

    ExperimentReport r;
    r.experiment = "spectral_classify";
    r.config = config;
    r.add_summary("gamma0", text::format_sci(estimate.gamma0));
    r.add_summary("atom_share", text::format_sci(c.atom_share));
    r.add_summary("flatness", text::format_sci(c.flatness));
    r.add_summary("normalized", flag(c.normalized));
    if (estimate.density) {
        r.add_summary("density_mean", text::format_sci(estimate.density->mean()));
        r.add_summary("density_min", text::format_sci(estimate.density->min()));
    }
    if (estimate.dual) r.add_summary("parseval_exact", flag(estimate.dual->parseval));
    if (estimate.atoms) {
        auto& t = r.add_table("atoms", {"theta", "mass"});
        for (const auto& atom : estimate.atoms->atoms) t.add_row({text::format_sci(atom.theta, 9), text::format_sci(atom.mass)});
    }
    if (estimate.dual) {
        auto& t = r.add_table("dual_masses", {"y", "mass", "exactness"});
        for (std::size_t i = 0; i < estimate.dual->masses.size(); ++i) {
            std::vector<std::string> parts;
            for (auto y : estimate.dual->characters[i]) parts.push_back(std::to_string(y));
            const auto& m = estimate.dual->masses[i];
            t.add_row({"[" + text::join(parts, ",") + "]", m.to_text(), m.is_exact() ? "exact" : "float"});
        }
    }
    r.add_verdict("classification", spectral_tag_name(c.tag));
    return r;
}

}  // namespace ergo
