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

#include <doctest.h>

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numeric>

#include "ergo/averaging/averaging.hpp"
#include "ergo/experiments/experiments.hpp"
#include "ergo/group/character.hpp"
#include "ergo/group/character_sum.hpp"
#include "ergo/group/folner.hpp"
#include "ergo/group/group_text.hpp"
#include "ergo/group/selfmap.hpp"
#include "ergo/spectral/spectral.hpp"
#include "ergo/systems/system.hpp"
#include "ergo/vdc/vdc.hpp"
#include "support.hpp"

using namespace ergo;
using testing::uniform;

namespace {

std::vector<GroupDescriptor> all_kinds() {
    return {GroupDescriptor::integer_line(), GroupDescriptor::lattice(3),     GroupDescriptor::free_sum(),
            GroupDescriptor::prime_sum(3),   GroupDescriptor::prime_sum(5),   GroupDescriptor::poly_ring(7),
            GroupDescriptor::finite_field(3, 4)};
}

Rational random_rational(std::mt19937_64& rng, std::int64_t span = 6) {
    return Rational(uniform(rng, -span, span), uniform(rng, 1, 5));
}

/// Random exact scalar in Q(zeta_p); exact arithmetic stays inside one such field.
Scalar random_scalar(std::mt19937_64& rng, std::int64_t p = 3) {
    return Scalar(random_rational(rng)) + Scalar(random_rational(rng)) * Scalar::unit(CharValue{1, p});
}

Character random_character(const GroupDescriptor& d, std::mt19937_64& rng) {
    if (d.is_torsion()) {
        std::vector<std::int64_t> y(d.is_finite_rank() ? d.rank() : 5);
        for (auto& v : y) v = uniform(rng, 0, d.prime() - 1);
        return Character::residues(d, y);
    }
    std::vector<Rational> theta(d.is_finite_rank() ? d.rank() : 4);
    for (auto& t : theta) t = Rational(uniform(rng, 0, 20), uniform(rng, 1, 21));
    return Character::angles(d, theta, d.kind() == GroupKind::FreeAbelianDirectSum ? Rational(uniform(rng, 0, 6), 7) : Rational(0));
}

/// A random permutation of n points and its order.
std::pair<Permutation, std::int64_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::int64_t order = 1;
    std::vector<bool> seen(n, false);
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        std::int64_t len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) seen[j] = true, ++len;
        order = std::lcm(order, len);
    }
    return {p, order};
}

Permutation compose_power(const Permutation& p, std::int64_t e) {
    Permutation out(p.size());
    std::iota(out.begin(), out.end(), 0);
    for (std::int64_t k = 0; k < e; ++k)
        for (auto& x : out) x = p[x];
    return out;
}

struct Instance {
    System sys;
    Observable f;
    Observable g;
    bool exact;
};

/// variant 0: finite, 1: torus with rational angles, 2: torus with tagged angles, 3: Bernoulli.
Instance random_instance(int variant, std::mt19937_64& rng) {
    const auto z2 = GroupDescriptor::lattice(2);
    switch (variant) {
        case 0: {
            const auto n = static_cast<std::size_t>(uniform(rng, 2, 6));
            const auto [perm, order] = random_permutation(n, rng);
            const auto e = uniform(rng, 0, 3);
            // Second generator is a power of the first so the two commute.
            const Permutation second = compose_power(perm, e);
            std::int64_t order2 = 1;
            while (compose_power(second, order2) != compose_power(perm, 0)) ++order2;
            const System sys = System::finite(z2, std::vector<Rational>(n, Rational(1, static_cast<long long>(n))), {perm, second}, {order, order2});
            std::vector<Scalar> a(n), b(n);
            for (auto& v : a) v = random_scalar(rng);
            for (auto& v : b) v = random_scalar(rng);
            return {sys, Observable::finite(sys.space(), a), Observable::finite(sys.space(), b), true};
        }
        case 1:
        case 2: {
            const std::int64_t p = std::vector<std::int64_t>{3, 5, 7}[static_cast<std::size_t>(uniform(rng, 0, 2))];
            std::vector<std::vector<Angle>> gens(2, std::vector<Angle>(2));
            for (auto& row : gens)
                for (auto& a : row)
                    a = variant == 1 ? Angle::rational(Rational(uniform(rng, 0, p - 1), p))
                                     : Angle::tag(static_cast<AngleTag>(uniform(rng, 0, 2)), uniform(rng, -2, 2)) + Angle::rational(Rational(uniform(rng, 0, 2), 3));
            const System sys = System::torus(z2, 2, gens);
            auto trig = [&] {
                TrigData t;
                const auto terms = uniform(rng, 1, 4);
                for (std::int64_t i = 0; i < terms; ++i) t[{uniform(rng, -2, 2), uniform(rng, -2, 2)}] += random_scalar(rng, p);
                return Observable::trig(sys.space(), t);
            };
            return {sys, trig(), trig(), variant == 1};
        }
        default: {
            const std::int64_t a = uniform(rng, 1, 4);
            const System sys = System::bernoulli(z2, {Rational(a, a + 1), Rational(1, a + 1)});
            auto chaos = [&] {
                ChaosData c;
                const auto terms = uniform(rng, 1, 3);
                for (std::int64_t i = 0; i < terms; ++i) {
                    Word w{Site{z2.reduce({uniform(rng, -2, 2), uniform(rng, -2, 2)}), 1}};
                    const GroupElement second = z2.reduce({uniform(rng, -2, 2), uniform(rng, -2, 2)});
                    if (uniform(rng, 0, 1) && second != w.front().position) {
                        w.push_back(Site{second, 1});
                        std::sort(w.begin(), w.end());
                    }
                    c[w] += random_scalar(rng);
                }
                return Observable::chaos(sys.space(), c);
            };
            return {sys, chaos(), chaos(), true};
        }
    }
}

void check_same(const Scalar& a, const Scalar& b, bool exact) {
    if (exact) {
        CHECK(a.is_exact());
        CHECK(a == b);
    } else {
        CHECK(std::abs(a.value() - b.value()) <= 1e-9);
    }
}

}  // namespace

TEST_SUITE("properties") {

TEST_CASE("group axioms") {
    auto rng = testing::rng_for(1);
    for (const auto& d : all_kinds()) {
        for (int i = 0; i < 500; ++i) {
            const auto a = testing::random_element(d, rng), b = testing::random_element(d, rng), c = testing::random_element(d, rng);
            CHECK(d.combine(d.combine(a, b), c) == d.combine(a, d.combine(b, c)));
            CHECK(d.combine(a, b) == d.combine(b, a));
            CHECK(d.combine(a, d.identity()) == a);
            CHECK(d.combine(a, d.invert(a)).is_zero());
            CHECK(d.subtract(a, b) == d.combine(a, d.invert(b)));
        }
    }
}

TEST_CASE("character multiplicativity") {
    auto rng = testing::rng_for(2);
    for (const auto& d : all_kinds()) {
        for (int i = 0; i < 500; ++i) {
            const auto chi = random_character(d, rng);
            const auto g = testing::random_element(d, rng), h = testing::random_element(d, rng);
            const auto lhs = chi.eval(d.combine(g, h));
            const auto a = chi.eval(g), b = chi.eval(h);
            CHECK(lhs.angle() == frac(a.angle() + b.angle()));
            CHECK(chi.eval(d.identity()).is_one());
        }
    }
}

TEST_CASE("character orthogonality on level subgroups") {
    auto rng = testing::rng_for(3);
    for (std::int64_t p : {3, 5}) {
        const auto d = GroupDescriptor::prime_sum(p);
        for (std::int64_t n = 1; n <= 6; ++n) {
            const auto elements = folner_set(FolnerFamily::level_subgroup(d), n);
            // Every character when there are at most 729, else 60 seeded ones.
            const bool exhaustive = elements.size() <= 729;
            const std::size_t count = exhaustive ? elements.size() : 60;
            for (std::size_t i = 0; i < count; ++i) {
                GroupElement y = exhaustive ? elements[i] : GroupElement{};
                while (!exhaustive && y.is_zero()) y = testing::random_element(d, rng, static_cast<std::size_t>(n));
                if (y.is_zero()) continue;
                const auto chi = Character::residues(d, y.coords());
                std::vector<std::int64_t> counts(static_cast<std::size_t>(p), 0);
                for (const auto& g : elements) ++counts[static_cast<std::size_t>(chi.eval(g).exponent)];
                CHECK(sum_from_counts(counts, p, elements.size()).is_zero());
            }
        }
    }
}

TEST_CASE("cyclotomic values map homomorphically to C") {
    auto rng = testing::rng_for(4);
    for (int i = 0; i < 200; ++i) {
        const std::int64_t p = std::vector<std::int64_t>{3, 5, 7, 11}[static_cast<std::size_t>(uniform(rng, 0, 3))];
        std::vector<std::int64_t> a(static_cast<std::size_t>(p)), b(static_cast<std::size_t>(p));
        for (auto& v : a) v = uniform(rng, -1000, 1000);
        for (auto& v : b) v = uniform(rng, -1000, 1000);
        const CyclotomicValue x(p, a), y(p, b);
        const auto lhs = (x * y).to_complex();
        const auto rhs = x.to_complex() * y.to_complex();
        CHECK(std::abs(lhs - rhs) <= 1e-10L * std::max(1.0L, std::abs(rhs)));
        CHECK(std::abs((x + y).to_complex() - (x.to_complex() + y.to_complex())) <= 1e-10L);
    }
}

TEST_CASE("level subgroup defects") {
    auto rng = testing::rng_for(5);
    for (const auto& d : {GroupDescriptor::prime_sum(3), GroupDescriptor::poly_ring(5)}) {
        const auto family = FolnerFamily::level_subgroup(d);
        for (int i = 0; i < 40; ++i) {
            const auto g = testing::random_element(d, rng, 6);
            for (std::int64_t n = 1; n <= 5; ++n) {
                const Rational expect = static_cast<std::int64_t>(g.support_end()) <= n ? Rational(0) : Rational(2);
                CHECK(folner_defect(family, n, g) == expect);
            }
        }
    }
}

TEST_CASE("coordinatewise power is exact") {
    auto rng = testing::rng_for(6);
    const Integer int64_max = std::numeric_limits<std::int64_t>::max();
    const std::vector<std::pair<std::int64_t, std::int64_t>> exps{{3, 2}, {5, 2}, {4, 3}, {7, 2}, {4, 1}};
    std::vector<std::int64_t> ns{0, 1, 2, 3, 4, 8, 9, 15, 16, 999'999, 1'000'000};
    for (int i = 0; i < 2000; ++i) ns.push_back(uniform(rng, 0, 1'000'000));
    std::sort(ns.begin(), ns.end());
    for (const auto& [a, b] : exps) {
        std::int64_t prev = -1;
        for (auto n : ns) {
            const Integer na = boost::multiprecision::pow(Integer(n), static_cast<unsigned>(a));
            if (boost::multiprecision::pow(int64_max, static_cast<unsigned>(b)) < na) {
                CHECK_THROWS_AS(floor_power(n, a, b), Error);
                continue;
            }
            const auto r = floor_power(n, a, b);
            CHECK(boost::multiprecision::pow(Integer(r), static_cast<unsigned>(b)) <= na);
            CHECK(boost::multiprecision::pow(Integer(r) + 1, static_cast<unsigned>(b)) > na);
            CHECK(r >= prev);
            prev = r;
        }
    }
}

TEST_CASE("measure preservation and homomorphism") {
    auto rng = testing::rng_for(7);
    const auto z2 = GroupDescriptor::lattice(2);
    for (int variant = 0; variant < 4; ++variant) {
        for (int i = 0; i < 300; ++i) {
            const auto inst = random_instance(variant, rng);
            const auto g = testing::random_element(z2, rng, 2, 9), h = testing::random_element(z2, rng, 2, 9);
            const auto tf = inst.sys.act(g, inst.f), tg = inst.sys.act(g, inst.g);
            check_same(inner(tf, tg), inner(inst.f, inst.g), inst.exact);
            CHECK(tf.bound() <= inst.f.bound() + 1e-12);
            const auto lhs = inst.sys.act(g, inst.sys.act(h, inst.f));
            const auto rhs = inst.sys.act(z2.combine(g, h), inst.f);
            const auto diff = lhs - rhs;
            check_same(inner(diff, diff), Scalar(0), inst.exact);
        }
    }
}

TEST_CASE("correlation Gram matrices are positive semidefinite") {
    auto rng = testing::rng_for(8);
    const auto z2 = GroupDescriptor::lattice(2);
    for (int variant = 0; variant < 4; ++variant) {
        for (int i = 0; i < 10; ++i) {
            const auto inst = random_instance(variant, rng);
            const auto m = static_cast<int>(uniform(rng, 2, 12));
            std::vector<GroupElement> pts;
            for (int k = 0; k < m; ++k) pts.push_back(testing::random_element(z2, rng, 2, 6));
            Eigen::MatrixXcd gram(m, m);
            for (int r = 0; r < m; ++r)
                for (int c = 0; c < m; ++c)
                    gram(r, c) = inst.sys.correlation(inst.f, z2.subtract(pts[static_cast<std::size_t>(r)], pts[static_cast<std::size_t>(c)])).value();
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(gram, Eigen::EigenvaluesOnly);
            CHECK(es.eigenvalues().minCoeff() >= -1e-9);
        }
    }
}

TEST_CASE("mean ergodic exactness on finite quotients") {
    auto rng = testing::rng_for(9);
    const auto line = GroupDescriptor::integer_line();
    for (int i = 0; i < 30; ++i) {
        const auto n = static_cast<std::size_t>(uniform(rng, 2, 7));
        const auto [perm, order] = random_permutation(n, rng);
        std::vector<Rational> w(n, Rational(1, static_cast<long long>(n)));
        const System sys = System::finite(line, w, {perm}, {order});
        std::vector<Scalar> vals(n);
        for (auto& v : vals) v = random_scalar(rng);
        const Observable f = Observable::finite(sys.space(), vals);
        const auto u = VectorSequence::orbit(sys, f);
        const auto cosets = uniform(rng, 1, 4);
        // [1, cosets * order] is a union of full cosets of order * Z.
        const auto avg = std::get<Observable>(folner_average(u, FolnerFamily::interval(line), cosets * order));
        CHECK(avg == sys.invariant_projection(f));
    }
}

TEST_CASE("bernoulli correlation support") {
    auto rng = testing::rng_for(10);
    const auto z2 = GroupDescriptor::lattice(2);
    for (int i = 0; i < 100; ++i) {
        const auto inst = random_instance(3, rng);
        const Observable f = inst.f - Observable::constant(inst.sys.space(), integral(inst.f));
        const auto support = inst.sys.correlation_support(f);
        REQUIRE(support);
        for (int k = 0; k < 10; ++k) {
            const auto g = testing::random_element(z2, rng, 2, 8);
            if (!support->count(g)) CHECK(inst.sys.correlation(f, g).is_exact_zero());
        }
    }
}

TEST_CASE("finite Cauchy-Schwarz and shift isometry") {
    auto rng = testing::rng_for(11);
    const auto line = GroupDescriptor::integer_line();
    const auto interval = FolnerFamily::interval(line);
    for (int i = 0; i < 40; ++i) {
        const auto inst = random_instance(uniform(rng, 0, 1) ? 0 : 3, rng);
        // Two Z-sequences from the Z^2 action, one per generator.
        const System& sys = inst.sys;
        const auto x = VectorSequence::rule(
            line, [sys, f = inst.f](const GroupElement& g) -> HilbertVector { return sys.act(GroupElement{g[0], 0}, f); }, inst.f.bound());
        const auto y = VectorSequence::rule(
            line, [sys, f = inst.g](const GroupElement& g) -> HilbertVector { return sys.act(GroupElement{0, g[0]}, f); }, inst.g.bound());
        const auto n = uniform(rng, 1, 40);
        const auto window = interval.window(n);
        const Scalar xy = pair_average(x, y, window);
        const Scalar xx = mean_square(x, window), yy = mean_square(y, window);
        CHECK((xx * yy - xy.norm_sq()).exact_real_sign().value() >= 0);

        const auto h = GroupElement{uniform(rng, -5, 5)};
        const Scalar shifted = mean_square(VectorSequence::shifted(x, h), window);
        const Scalar defect = Scalar(folner_defect(interval, n, h));
        const Scalar bound = Scalar(Rational(static_cast<long long>(std::ceil(x.bound() * x.bound() * 64)), 64)) * defect;
        const Scalar gap = shifted - xx;
        CHECK((bound - gap).exact_real_sign().value() >= 0);
        CHECK((bound + gap).exact_real_sign().value() >= 0);
    }
}

TEST_CASE("averages are linear and tail sups monotone") {
    auto rng = testing::rng_for(12);
    const auto line = GroupDescriptor::integer_line();
    const auto interval = FolnerFamily::interval(line);
    for (int i = 0; i < 20; ++i) {
        const std::int64_t p = std::vector<std::int64_t>{3, 5, 13}[static_cast<std::size_t>(uniform(rng, 0, 2))];
        const auto a = Character::angles(line, {Rational(uniform(rng, 0, p - 1), p)});
        const auto b = Character::angles(line, {Rational(uniform(rng, 0, p - 1), p)});
        const Scalar c = random_scalar(rng, p);
        const auto u = VectorSequence::character_phase(a), v = VectorSequence::character_phase(b);
        const auto combo = VectorSequence::rule(
            line, [u, v, c](const GroupElement& g) -> HilbertVector { return std::get<Scalar>(u(g)) + c * std::get<Scalar>(v(g)); }, 1.0 + c.abs());
        const auto n = uniform(rng, 1, 200);
        const Scalar lhs = std::get<Scalar>(folner_average(combo, interval, n));
        const Scalar rhs = std::get<Scalar>(folner_average(u, interval, n)) + c * std::get<Scalar>(folner_average(v, interval, n));
        CHECK(lhs.is_exact());
        CHECK(lhs == rhs);

        const auto prof = correlation_profile(u, interval, {GroupElement{1}}, {8, 16, 32, 64, 128});
        double prev = std::numeric_limits<double>::infinity();
        for (std::int64_t w : {8, 16, 32, 64, 128}) {
            const double s = tail_sup(prof, GroupElement{1}, w);
            CHECK(s <= prev);
            prev = s;
        }
    }
}

TEST_CASE("norm expansion bound on bernoulli sequences") {
    auto rng = testing::rng_for(13);
    const auto line = GroupDescriptor::integer_line();
    const auto interval = FolnerFamily::interval(line);
    for (int i = 0; i < 10; ++i) {
        const std::int64_t a = uniform(rng, 1, 3);
        const System sys = System::bernoulli(line, {Rational(a, a + 2), Rational(1, a + 2), Rational(1, a + 2)});
        ChaosData c;
        for (int k = 0; k < 3; ++k) c[Word{Site{GroupElement{uniform(rng, 0, 3)}, static_cast<std::size_t>(uniform(rng, 1, 2))}}] += random_scalar(rng);
        const Observable f = Observable::chaos(sys.space(), c);
        const auto u = VectorSequence::orbit(sys, f);
        const auto support = sys.correlation_support(f);
        REQUIRE(support);
        const Scalar m = sys.correlation(f, GroupElement{});
        const auto e = static_cast<long long>(support->size());
        for (std::int64_t n : {5, 17, 64}) {
            const auto avg = std::get<Observable>(folner_average(u, interval, n));
            Rational max_defect = 0;
            for (const auto& h : *support) max_defect = std::max(max_defect, folner_defect(interval, n, h));
            const Scalar bound = m * Scalar(Rational(e, n) + max_defect);
            CHECK((bound - inner(avg, avg)).exact_real_sign().value() >= 0);
        }
    }
}

TEST_CASE("vdc invariants") {
    auto rng = testing::rng_for(14);
    const auto line = GroupDescriptor::integer_line();
    const auto interval = FolnerFamily::interval(line);
    VdcParams params;
    params.checkpoints = {32, 64, 128};
    params.window_start = 32;
    params.shift_radius = 3;
    for (int i = 0; i < 4; ++i) {
        // Exact per_shift hypothesis: single-site mean-zero observable.
        const std::int64_t a = uniform(rng, 1, 4);
        const System sys = System::bernoulli(line, {Rational(a, a + 1), Rational(1, a + 1)});
        const Observable f = Observable::chaos(sys.space(), {{Word{Site{GroupElement{uniform(rng, -3, 3)}, 1}}, random_scalar(rng)}});
        const auto u = VectorSequence::orbit(sys, f);
        const auto v = check_vdc(u, interval, VdcMode::PerShift, params);
        const Scalar m = sys.correlation(f, GroupElement{});
        for (std::size_t k = 0; k < v.conclusion.checkpoints.size(); ++k) {
            const auto n = v.conclusion.checkpoints[k];
            Rational max_defect = 0;
            for (const auto& h : v.diagnostics.shifts) max_defect = std::max(max_defect, folner_defect(interval, n, h));
            CHECK((m * Scalar(Rational(1, n) + max_defect) - v.conclusion.norm_squares[k]).exact_real_sign().value() >= 0);
        }

        // Cesaro diagnostic never exceeds the max tail sup; results do not depend on threads.
        const System rot = System::torus(line, 1, {{Angle::tag(static_cast<AngleTag>(uniform(rng, 0, 2)))}});
        const auto w = VectorSequence::eigen_phase(rot, {1}, GroupSelfMap::power(Rational(uniform(rng, 2, 3))));
        VdcParams p1 = params, p4 = params;
        p1.checkpoints = p4.checkpoints = {256, 512, 1024};
        p1.window_start = p4.window_start = 256;
        p1.opts.block_size = p4.opts.block_size = 100;
        p4.opts.threads = 4;
        const auto c1 = check_vdc(w, interval, VdcMode::Cesaro, p1);
        const auto c4 = check_vdc(w, interval, VdcMode::Cesaro, p4);
        const double mx = *std::max_element(c1.diagnostics.tail_sups.begin(), c1.diagnostics.tail_sups.end());
        for (double c : c1.diagnostics.cesaro) CHECK(c <= mx);
        CHECK(to_structured_text(c1) == to_structured_text(c4));
    }
}

TEST_CASE("parseval and positivity of spectral estimates") {
    auto rng = testing::rng_for(15);
    for (int i = 0; i < 10; ++i) {
        const std::int64_t p = uniform(rng, 0, 1) ? 3 : 5;
        const std::int64_t level = p == 3 ? uniform(rng, 1, 3) : uniform(rng, 1, 2);
        std::size_t size = 1;
        for (std::int64_t k = 0; k < level; ++k) size *= static_cast<std::size_t>(p);
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
        const System sys = System::finite(GroupDescriptor::prime_sum(p), std::vector<Rational>(size, Rational(1, static_cast<long long>(size))), gens,
                                          std::vector<std::int64_t>(static_cast<std::size_t>(level), p));
        std::vector<Scalar> vals(size);
        for (auto& v : vals) v = Scalar(random_rational(rng)) + Scalar(random_rational(rng)) * Scalar::unit(CharValue{1, p});
        const Observable f = Observable::finite(sys.space(), vals);
        const auto m = dual_level_measure(sys, f, level);
        ScalarSum total;
        for (const auto& x : m.masses) {
            CHECK(x.exact_real_sign().value() >= 0);
            total.add(x);
        }
        CHECK(total.result() == sys.correlation(f, GroupElement{}));
        CHECK(m.parseval);
        CHECK(m.nonnegative);
    }

    for (int i = 0; i < 6; ++i) {
        // Rotation plus Bernoulli mixture with known positive-definite correlations.
        const Angle beta = Angle::tag(static_cast<AngleTag>(uniform(rng, 0, 2))) + Angle::rational(Rational(uniform(rng, 0, 6), 7));
        const double weight = static_cast<double>(uniform(rng, 1, 9)) / 10.0;
        const std::int64_t n = 4096;
        std::vector<Scalar> gamma;
        for (std::int64_t k = 0; k < n; ++k)
            gamma.push_back(Scalar::approximate(weight * Scalar::unit(beta.scaled(k)).value() + (k == 0 ? std::complex<double>(1.0 - weight) : 0.0)));
        const auto seq = CorrelationSequence::hermitian(gamma);
        const auto est = estimate_spectrum(seq, 4096);
        CHECK(est.density->min() >= -1e-9);
        CHECK(std::abs(est.density->mean() - 1.0) <= 1e-6);
        double lhs = 0.0, rhs = 0.0;
        for (const auto& atom : est.atoms->atoms) lhs += atom.mass * atom.mass;
        for (std::int64_t k = 0; k < n; ++k) rhs += std::norm(gamma[static_cast<std::size_t>(k)].value());
        CHECK(lhs <= rhs / static_cast<double>(n) + 0.01);
        CHECK(est.atoms->total_mass <= 1.0 + 1e-6);
        CHECK(classify_spectrum(est).tag == classify_spectrum(est).tag);
    }
}

TEST_CASE("experiment reports are reproducible") {
    const auto seed = testing::property_seed();
    const std::vector<std::pair<std::string, std::vector<std::pair<std::string, std::string>>>> cases{
        {"example1", {{"p", "3"}, {"k", "3"}, {"pairs", "10"}}},
        {"example2", {{"pairs", "3"}, {"negatives", "2"}, {"levels", "4"}}},
        {"zinfty_counterexample", {{"level", "2"}, {"samples", "3"}}},
        {"bernoulli_disjointness", {{"min_log2", "4"}, {"max_log2", "6"}}},
        {"weyl_vdc", {{"n0", "250"}, {"doublings", "3"}, {"window_start", "500"}, {"conclusion_n", "2000"}, {"radius", "3"}}},
    };
    for (const auto& [name, kv] : cases) {
        auto c = ExperimentConfig::defaults(name);
        c.set_seed(seed);
        for (const auto& [k, v] : kv) c.set(k, v);
        const auto a = run_experiment(c);
        const auto b = run_experiment(c);
        CHECK(structured_text(a) == structured_text(b));
        CHECK(table_text(a) == table_text(b));
        if (name == "weyl_vdc") {
            c.set("threads", "3");
            auto t = run_experiment(c);
            t.config = a.config;
            CHECK(structured_text(t) == structured_text(a));
        }
    }
}

TEST_CASE("rows flagged exact re-verify") {
    auto c = ExperimentConfig::defaults("example1");
    c.set_seed(testing::property_seed());
    c.set("p", "5");
    c.set("k", "2");
    c.set("pairs", "8");
    const auto r = run_example1(c);
    const auto field = GroupDescriptor::finite_field(5, 2);
    const auto square = GroupSelfMap::ring_polynomial({GroupElement{}, GroupElement{}, GroupElement{1}});
    const auto elements = folner_set(FolnerFamily::full_field(field), 1);
    for (const auto& row : r.table("pairs").rows) {
        REQUIRE(row[4] == "exact");
        const auto h = parse_element(field, row[0]);
        const auto chi = parse_character(field, row[1]);
        CyclotomicRational total = CyclotomicRational::constant(5, 0);
        for (const auto& g : elements) {
            const auto d = field.subtract(square.apply(field, field.combine(g, h)), square.apply(field, g));
            total += to_rational(chi.eval(d).to_cyclotomic());
        }
        CHECK(total.is_zero() == (row[3] == "true"));
    }
}

}  // TEST_SUITE
