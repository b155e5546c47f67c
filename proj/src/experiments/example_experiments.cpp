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

#include <random>

#include "ergo/core/text_util.hpp"
#include "ergo/experiments/experiments.hpp"
#include "ergo/group/character_sum.hpp"
#include "ergo/group/folner.hpp"
#include "ergo/group/group_text.hpp"
#include "ergo/group/selfmap.hpp"
#include "ergo/systems/scalar.hpp"

namespace ergo {

namespace {

std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<std::int64_t> draw_nonzero(std::mt19937_64& rng, std::size_t len, std::int64_t p) {
    while (true) {
        std::vector<std::int64_t> v(len);
        bool any = false;
        for (auto& x : v) {
            x = draw(rng, 0, p - 1);
            any = any || x != 0;
        }
        if (any) return v;
    }
}

std::string exactness(const CharacterSum& s) { return s.is_exact() ? "exact" : "float"; }

std::string average_text(const CharacterSum& s) {
    if (const auto a = s.exact_average()) return Scalar(*a).to_text();
    return Scalar::approximate(s.average()).to_text();
}

bool exact_zero(const CharacterSum& s) { return s.is_exact() && s.is_zero(); }

bool exact_unit_modulus(const CharacterSum& s) {
    const auto a = s.exact_average();
    if (!a) return false;
    const Scalar v(*a);
    return v.norm_sq() == Scalar(1);
}

GroupSelfMap square_map(const GroupDescriptor& g) {
    return GroupSelfMap::ring_polynomial({g.identity(), g.identity(), g.reduce({1})});
}

std::string flag(bool b) { return b ? "true" : "false"; }

}  // namespace

ExperimentReport run_example1(const ExperimentConfig& config) {
    const std::int64_t p = config.get_int("p");
    const std::int64_t k = config.get_int("k");
    if (p != 3 && p != 5 && p != 7) throw InvalidInput("example1 needs p in {3, 5, 7}");
    if (k < 1 || k > 8) throw InvalidInput("example1 needs 1 <= k <= 8");
    const auto field = GroupDescriptor::finite_field(p, k);
    const FolnerWindow window = FolnerFamily::full_field(field).window(1, config.budget());
    const GroupSelfMap a = square_map(field);

    ExperimentReport r;
    r.experiment = "example1";
    r.config = config;
    auto& table = r.add_table("pairs", {"h", "chi", "average", "zero", "exactness"});

    std::vector<std::pair<GroupElement, Character>> pairs;
    if (!config.get("h").empty() || !config.get("character").empty()) {
        if (config.get("h").empty() || config.get("character").empty()) throw InvalidInput("example1 needs both h and character");
        pairs.emplace_back(parse_element(field, config.get("h")), parse_character(field, config.get("character")));
    } else {
        std::mt19937_64 rng(config.seed());
        const auto count = config.get_int("pairs");
        for (std::int64_t i = 0; i < count; ++i) {
            GroupElement h = field.reduce(draw_nonzero(rng, static_cast<std::size_t>(k), p));
            Character chi = Character::residues(field, draw_nonzero(rng, static_cast<std::size_t>(k), p));
            pairs.emplace_back(std::move(h), std::move(chi));
        }
    }
    bool all_zero = true;
    for (const auto& [h, chi] : pairs) {
        const auto s = character_sum(chi, a, h, window);
        const bool zero = exact_zero(s);
        all_zero = all_zero && (chi.is_trivial() || h.is_zero() || zero);
        table.add_row({to_text(h), to_text(chi), average_text(s), flag(zero), exactness(s)});
    }
    const GroupElement h0 = pairs.empty() ? field.reduce({1}) : pairs.front().first;
    const auto control = character_sum(Character::trivial(field), a, h0, window);
    r.add_summary("field_size", std::to_string(window.size()));
    r.add_summary("pairs", std::to_string(pairs.size()));
    r.add_summary("control_h", to_text(h0));
    r.add_summary("control_average", average_text(control));
    r.add_verdict("nontrivial_pairs_exact_zero", flag(all_zero));
    r.add_verdict("control_is_one", flag(control.is_exact() && Scalar(*control.exact_average()) == Scalar(1)));
    return r;
}

void require_separable(const std::vector<std::int64_t>& c, std::int64_t p) {
    std::int64_t degree = -1;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (mod_floor(c[j], p) != 0) degree = static_cast<std::int64_t>(j);
    if (degree < 1) throw InvalidInput("polynomial must be nonconstant");
    if (degree > 6) throw InvalidInput("polynomial degree " + std::to_string(degree) + " exceeds 6");
    for (std::int64_t j = 1; j <= degree; ++j)
        if (mod_floor(c[static_cast<std::size_t>(j)], p) != 0 && j % p == 0)
            throw InvalidInput("polynomial is not separable: monomial y^" + std::to_string(j) + " has degree divisible by " + std::to_string(p));
}

std::int64_t ideal_witness_degree(const Character& chi, const GroupElement& h) {
    const auto& g = chi.descriptor();
    if (g.kind() != GroupKind::PolynomialRing) throw InvalidInput("ideal scans need poly_ring");
    const auto prefix = static_cast<std::int64_t>(chi.residue_vector().size());
    for (std::int64_t j = 0; j < prefix; ++j) {
        std::vector<std::int64_t> shifted(static_cast<std::size_t>(j), 0);
        shifted.insert(shifted.end(), h.coords().begin(), h.coords().end());
        if (!chi.eval(g.reduce(shifted)).is_one()) return j;
    }
    return -1;
}

ExperimentReport run_example2(const ExperimentConfig& config) {
    const std::int64_t p = config.get_int("p");
    if (!is_odd_prime(p)) throw InvalidInput("example2 needs an odd prime p");
    const auto levels = config.get_int("levels");
    if (levels < 1 || levels > 8) throw InvalidInput("example2 needs 1 <= levels <= 8");
    std::vector<std::int64_t> coeffs;
    for (const auto& s : text::parse_list(config.get("polynomial"))) coeffs.push_back(text::parse_int64(s));
    require_separable(coeffs, p);
    const auto ring = GroupDescriptor::poly_ring(p);
    std::vector<GroupElement> poly;
    for (auto c : coeffs) poly.push_back(ring.reduce({c}));
    const GroupSelfMap a = GroupSelfMap::ring_polynomial(poly);
    const FolnerFamily family = FolnerFamily::level_subgroup(ring);
    const auto witness_max = config.get_int("witness_degree_max");
    const auto h_degree_max = config.get_int("h_degree_max");
    if (witness_max < 0 || witness_max >= levels) throw InvalidInput("witness_degree_max must lie in [0, levels)");
    if (h_degree_max < 0) throw InvalidInput("h_degree_max must be >= 0");

    ExperimentReport r;
    r.experiment = "example2";
    r.config = config;
    auto& table = r.add_table("averages", {"kind", "h", "chi", "witness_degree", "N", "average", "zero", "exactness"});
    std::mt19937_64 rng(config.seed());

    bool positives_ok = true;
    std::int64_t first_zero_max = 0;
    const auto pairs = config.get_int("pairs");
    for (std::int64_t i = 0; i < pairs; ++i) {
        GroupElement h;
        Character chi = Character::trivial(ring);
        std::int64_t w = -1;
        do {
            h = ring.reduce(draw_nonzero(rng, static_cast<std::size_t>(h_degree_max + 1), p));
            chi = Character::residues(ring, draw_nonzero(rng, static_cast<std::size_t>(levels), p));
            w = ideal_witness_degree(chi, h);
        } while (w < 0 || w > witness_max);
        std::vector<CharacterSum> sums;
        for (std::int64_t n = 1; n <= levels; ++n) sums.push_back(character_sum(chi, a, h, family, n, config.budget()));
        std::int64_t first_zero = levels + 1;
        while (first_zero > 1 && exact_zero(sums[static_cast<std::size_t>(first_zero - 2)])) --first_zero;
        for (std::int64_t n = 1; n <= levels; ++n) {
            const auto& s = sums[static_cast<std::size_t>(n - 1)];
            const bool zero = exact_zero(s);
            if (n > w && !zero) positives_ok = false;
            table.add_row({"positive", to_text(h), to_text(chi), std::to_string(w), std::to_string(n), average_text(s), flag(zero), exactness(s)});
        }
        first_zero_max = std::max(first_zero_max, first_zero);
    }

    bool negatives_ok = true;
    const auto negatives = config.get_int("negatives");
    for (std::int64_t i = 0; i < negatives; ++i) {
        const auto s_val = draw(rng, 1, std::min<std::int64_t>(2, levels));
        std::vector<std::int64_t> body = draw_nonzero(rng, static_cast<std::size_t>(h_degree_max + 1), p);
        if (body[0] == 0) body[0] = draw(rng, 1, p - 1);
        std::vector<std::int64_t> hc(static_cast<std::size_t>(s_val), 0);
        hc.insert(hc.end(), body.begin(), body.end());
        const GroupElement h = ring.reduce(hc);
        const Character chi = Character::residues(ring, draw_nonzero(rng, static_cast<std::size_t>(s_val), p));
        const auto w = ideal_witness_degree(chi, h);
        if (w >= 0) throw Error("negative control does not vanish on (h)");
        for (std::int64_t n = 1; n <= levels; ++n) {
            const auto s = character_sum(chi, a, h, family, n, config.budget());
            const bool unit = exact_unit_modulus(s);
            negatives_ok = negatives_ok && unit;
            table.add_row({"negative", to_text(h), to_text(chi), "none", std::to_string(n), average_text(s), flag(exact_zero(s)), exactness(s)});
        }
    }
    r.add_summary("polynomial", config.get("polynomial"));
    r.add_summary("scan_bound", "character prefix length (" + std::to_string(levels) + ")");
    r.add_summary("witness_degree_max", std::to_string(witness_max));
    r.add_summary("threshold_n0", std::to_string(first_zero_max));
    r.add_verdict("positives_exact_zero_beyond_witness", flag(positives_ok));
    r.add_verdict("negatives_unit_modulus", flag(negatives_ok));
    return r;
}

ExperimentReport run_zinfty_counterexample(const ExperimentConfig& config) {
    const auto level = config.get_int("level");
    const auto m = config.get_int("multiplier");
    const auto samples = config.get_int("samples");
    if (level < 1 || level > 8) throw InvalidInput("zinfty_counterexample needs 1 <= level <= 8");
    if (m < 1) throw InvalidInput("multiplier must be >= 1");
    const auto group = GroupDescriptor::free_sum();
    const FolnerWindow box = level_box_window(group, level, 3 * m, config.budget());
    const GroupSelfMap a = GroupSelfMap::power(Rational(2));
    const Character chi = Character::angles(group, {}, Rational(1, 3));

    ExperimentReport r;
    r.experiment = "zinfty_counterexample";
    r.config = config;
    auto& table = r.add_table("shifts", {"kind", "h", "average", "expected", "match", "unit_modulus", "exactness"});
    std::mt19937_64 rng(config.seed());
    bool in_3g_ok = true, unit_ok = true;

    auto run = [&](const std::string& kind, const GroupElement& h) {
        const auto s = character_sum(chi, a, h, box);
        const Scalar expected = kind == "unit_coordinate" ? Scalar(0) : Scalar::unit(chi.eval(a.apply(group, h)));
        const bool match = s.is_exact() && Scalar(*s.exact_average()) == expected;
        const bool unit = exact_unit_modulus(s);
        table.add_row({kind, to_text(h), average_text(s), expected.to_text(), flag(match), flag(unit), exactness(s)});
        return std::pair{match, unit};
    };
    const auto [zero_match, zero_unit] = run("zero", group.identity());
    for (std::int64_t i = 0; i < samples; ++i) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(draw(rng, 1, level)), 0);
        while (true) {
            for (auto& x : c) x = 3 * draw(rng, -2, 2);
            if (c.back() != 0) break;
        }
        const auto [match, unit] = run("in_3g", group.reduce(c));
        in_3g_ok = in_3g_ok && match && unit;
    }
    for (std::int64_t i = 0; i < samples; ++i) {
        std::vector<std::int64_t> c(static_cast<std::size_t>(draw(rng, 1, level)), 0);
        for (auto& x : c) x = draw(rng, -3, 3);
        c[static_cast<std::size_t>(draw(rng, 0, static_cast<std::int64_t>(c.size()) - 1))] = 3 * draw(rng, -1, 1) + (rng() % 2 ? 1 : -1);
        if (c.back() == 0) c.back() = 1;
        const auto [match, unit] = run("unit_coordinate", group.reduce(c));
        unit_ok = unit_ok && match;
    }
    r.add_summary("box", "[0," + std::to_string(3 * m) + ")^" + std::to_string(level));
    r.add_summary("box_size", std::to_string(box.size()));
    r.add_verdict("zero_shift_is_one", flag(zero_match && zero_unit));
    r.add_verdict("in_3g_average_equals_chi_h2", flag(in_3g_ok));
    r.add_verdict("unit_coordinate_average_zero", flag(unit_ok));
    return r;
}

}  // namespace ergo
