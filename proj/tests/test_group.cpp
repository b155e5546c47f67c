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

#include <cmath>
#include <set>

#include "ergo/group/character.hpp"
#include "ergo/group/character_sum.hpp"
#include "ergo/group/finite_field.hpp"
#include "ergo/group/folner.hpp"
#include "ergo/group/group_text.hpp"
#include "ergo/group/selfmap.hpp"
#include "support.hpp"

using namespace ergo;

TEST_CASE("combine examples") {
    const auto line = GroupDescriptor::integer_line();
    CHECK(line.combine(GroupElement{3}, GroupElement{-3}).is_zero());

    const auto z3 = GroupDescriptor::prime_sum(3);
    CHECK(z3.combine(GroupElement{1, 2}, GroupElement{2, 2}) == GroupElement{0, 1});

    const auto f5t = GroupDescriptor::poly_ring(5);
    CHECK(f5t.combine(GroupElement{1, 1}, GroupElement{4, 4}).is_zero());
}

TEST_CASE("elements are canonical") {
    const auto z3 = GroupDescriptor::prime_sum(3);
    CHECK(z3.reduce({4, -1, 3}) == GroupElement{1, 2});
    CHECK(z3.reduce({0, 0, 0}).is_zero());
    CHECK_THROWS_AS(z3.validate(GroupElement{3}), InvalidInput);
    CHECK(GroupElement(std::vector<std::int64_t>{1, 0, 0}).support_end() == 1);
    CHECK(z3.invert(GroupElement{1, 2}) == GroupElement{2, 1});
    CHECK(GroupDescriptor::lattice(2).scale(GroupElement{1, -2}, 3) == GroupElement{3, -6});
}

TEST_CASE("descriptor parameters are checked") {
    CHECK_THROWS_AS(GroupDescriptor::prime_sum(2), InvalidInput);
    CHECK_THROWS_AS(GroupDescriptor::prime_sum(9), InvalidInput);
    CHECK_THROWS_AS(GroupDescriptor::lattice(0), InvalidInput);
    CHECK_THROWS_AS(GroupDescriptor::finite_field(3, 0), InvalidInput);
    CHECK(is_odd_prime(2147483629));
    CHECK_FALSE(is_odd_prime(2147483647LL * 3));
}

TEST_CASE("folner_set examples") {
    const auto line = GroupDescriptor::integer_line();
    const auto interval = FolnerFamily::interval(line);
    CHECK(folner_set(interval, 3) == std::vector<GroupElement>{GroupElement{1}, GroupElement{2}, GroupElement{3}});

    const auto z3 = GroupDescriptor::prime_sum(3);
    const auto level = FolnerFamily::level_subgroup(z3);
    const auto f2 = folner_set(level, 2);
    CHECK(f2.size() == 9);
    for (const auto& g : f2) CHECK(g.support_end() <= 2);
    CHECK(std::set<GroupElement>(f2.begin(), f2.end()).size() == 9);
    CHECK(f2.front().is_zero());
    CHECK(f2[1] == GroupElement{0, 1});

    const auto e3 = GroupElement::unit(2);
    const auto shifted = folner_set(level.translated([e3](std::int64_t) { return e3; }), 2);
    REQUIRE(shifted.size() == 9);
    for (std::size_t i = 0; i < 9; ++i) CHECK(shifted[i] == z3.combine(f2[i], e3));
}

TEST_CASE("folner families have the predicted sizes") {
    CHECK(FolnerFamily::box(GroupDescriptor::lattice(3)).window(4).size() == 64);
    CHECK(FolnerFamily::level_subgroup(GroupDescriptor::poly_ring(5)).window(3).size() == 125);
    CHECK(FolnerFamily::full_field(GroupDescriptor::finite_field(3, 3)).window(1).size() == 27);
    CHECK(FolnerFamily::level_box(GroupDescriptor::free_sum(), 3).window(2).size() == 36);
    CHECK(FolnerFamily::level_subgroup(GroupDescriptor::prime_sum(3)).predicted_size(30) == Integer(205891132094649LL));
}

TEST_CASE("folner_set respects the budget") {
    const auto level = FolnerFamily::level_subgroup(GroupDescriptor::prime_sum(3));
    try {
        (void)level.window(20, 1000);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK(e.requested() == 3486784401ULL);
        CHECK(std::string(e.what()).find("3486784401") != std::string::npos);
    }
}

TEST_CASE("folner_defect examples") {
    const auto line = GroupDescriptor::integer_line();
    CHECK(folner_defect(FolnerFamily::interval(line), 10, GroupElement{1}) == Rational(2, 10));

    const auto level = FolnerFamily::level_subgroup(GroupDescriptor::prime_sum(3));
    CHECK(folner_defect(level, 2, GroupElement{2}) == 0);
    CHECK(folner_defect(level, 1, GroupElement::unit(1)) == 2);
}

TEST_CASE("folner_defect matches a brute-force symmetric difference") {
    auto rng = std::mt19937_64(7);
    const auto lattice = GroupDescriptor::lattice(2);
    const auto box = FolnerFamily::box(lattice);
    for (int trial = 0; trial < 20; ++trial) {
        const std::int64_t n = testing::uniform(rng, 1, 6);
        const GroupElement g = lattice.reduce({testing::uniform(rng, -7, 7), testing::uniform(rng, -7, 7)});
        const auto f = folner_set(box, n);
        std::set<GroupElement> a(f.begin(), f.end()), b;
        for (const auto& x : f) b.insert(lattice.combine(x, g));
        std::size_t sym = 0;
        for (const auto& x : a) sym += b.count(x) ? 0 : 1;
        for (const auto& x : b) sym += a.count(x) ? 0 : 1;
        CHECK(folner_defect(box, n, g) == Rational(static_cast<long long>(sym), static_cast<long long>(f.size())));
    }
}

TEST_CASE("char_eval examples") {
    const auto z3 = GroupDescriptor::prime_sum(3);
    CHECK(char_eval(Character::trivial(z3), GroupElement{1, 2, 1}).is_one());

    const auto v = char_eval(Character::residues(z3, {1}), GroupElement{2});
    CHECK(v.exponent == 2);
    CHECK(v.modulus == 3);
    CHECK(v.to_cyclotomic() == CyclotomicValue::monomial(3, 2));

    const auto line = GroupDescriptor::integer_line();
    const auto w = char_eval(Character::angles(line, {Rational(1, 4)}), GroupElement{6});
    CHECK(w.angle() == Rational(1, 2));
    CHECK(w.to_cyclotomic() == CyclotomicValue::constant(1, -1));
    CHECK(std::abs(w.to_complex() - std::complex<double>(-1.0, 0.0)) < 1e-15);
}

TEST_CASE("free_sum characters use the tail angle past the prefix") {
    const auto g = GroupDescriptor::free_sum();
    const auto chi = Character::angles(g, {}, Rational(1, 3));
    CHECK(chi.eval(GroupElement{1, 1, 1}).is_one());
    CHECK(chi.eval(GroupElement{0, 0, 0, 0, 0, 2}).angle() == Rational(2, 3));
}

TEST_CASE("cyclotomic arithmetic") {
    const auto z = CyclotomicValue::monomial(5, 1);
    CyclotomicValue sum(5);
    for (int k = 0; k < 5; ++k) sum += CyclotomicValue::monomial(5, k);
    CHECK(sum.is_zero());
    CHECK(CyclotomicValue(5, {3, 3, 3, 3, 3}).is_zero());
    CHECK(CyclotomicValue(5, {1, 2, 3, 4, 7}).coefficients().back() == 0);
    CHECK(z * CyclotomicValue::monomial(5, 4) == CyclotomicValue::constant(5, 1));
    CHECK(z.conj() == CyclotomicValue::monomial(5, 4));
    CHECK(std::abs(z.to_complex() - std::complex<long double>(std::cos(2 * M_PIl / 5), std::sin(2 * M_PIl / 5))) < 1e-15L);
    CHECK_THROWS_AS(z + CyclotomicValue::monomial(3, 1), InvalidInput);
    CHECK(CyclotomicValue::constant(1, 2) + z == CyclotomicValue(5, {2, 1, 0, 0, 0}));
}

TEST_CASE("character_sum examples") {
    const auto z3 = GroupDescriptor::prime_sum(3);
    const auto level = FolnerFamily::level_subgroup(z3);
    const auto chi = Character::residues(z3, {1});

    // a = identity: the summand is chi(h) for every g, so the sum is |F| chi(h).
    const auto s = character_sum(chi, GroupSelfMap::identity(), GroupElement{2}, level, 1);
    REQUIRE(s.is_exact());
    CHECK(*s.exact == CyclotomicValue::monomial(3, 2) * CyclotomicValue::constant(3, 3));

    // The plain character sum over the level subgroup vanishes.
    CyclotomicValue direct(3);
    for (const auto& g : folner_set(level, 1)) direct += chi.eval(z3.combine(g, GroupElement{2})).to_cyclotomic();
    CHECK(direct.is_zero());

    const auto f9 = GroupDescriptor::finite_field(3, 2);
    const auto square = GroupSelfMap::ring_polynomial({GroupElement{}, GroupElement{}, GroupElement{1}});
    const auto full = FolnerFamily::full_field(f9);
    for (const auto& h : folner_set(full, 1)) {
        if (h.is_zero()) continue;
        for (const auto& y : folner_set(full, 1)) {
            if (y.is_zero()) continue;
            CHECK(character_sum(Character::residues(f9, y.coords()), square, h, full, 1).is_zero());
        }
    }

    const auto zinf = GroupDescriptor::free_sum();
    const auto squares = GroupSelfMap::power(Rational(2));
    const auto phase = Character::angles(zinf, {}, Rational(1, 3));
    const GroupElement h{3, 0, 6};
    const auto box = level_box_window(zinf, 3, 3);
    const auto cs = character_sum(phase, squares, h, box);
    REQUIRE(cs.exact_average());
    const auto h2 = squares.apply(zinf, h);
    CHECK(*cs.exact_average() == to_rational(phase.eval(h2).to_cyclotomic()));
    CHECK(std::abs(std::abs(cs.average()) - 1.0) < 1e-12);
}

TEST_CASE("finite field examples") {
    const auto f3 = ff_make(3, 1);
    CHECK(ff_mul(f3, GroupElement{2}, GroupElement{2}) == GroupElement{1});

    const auto f9 = ff_make(3, 2);
    const auto& m = f9.modulus();
    REQUIRE(m.size() == 3);
    for (std::int64_t x = 0; x < 3; ++x) CHECK((m[0] + m[1] * x + m[2] * x * x) % 3 != 0);
    CHECK(m == std::vector<std::int64_t>{1, 0, 1});

    const auto f125 = ff_make(5, 3);
    auto rng = std::mt19937_64(20);
    for (int i = 0; i < 20; ++i) {
        GroupElement x;
        while (x.is_zero()) x = f125.reduce({testing::uniform(rng, 0, 4), testing::uniform(rng, 0, 4), testing::uniform(rng, 0, 4)});
        // x^(p^k - 2) by repeated multiplication.
        GroupElement power{1};
        for (int e = 0; e < 123; ++e) power = ff_mul(f125, power, x);
        CHECK(ff_mul(f125, x, power) == GroupElement{1});
        CHECK(ff_pow(f125, x, 123) == power);
        CHECK(ff_inv(f125, x) == power);
    }
    CHECK_THROWS_AS(ff_inv(f125, GroupElement{}), InvalidInput);
    CHECK_THROWS_AS(ff_make(3, 17), InvalidInput);
}

namespace {

/// Irreducible iff no monic factor of degree 1..k/2 divides it.
bool irreducible_by_factor_search(const PolyFp& f, std::int64_t p) {
    const int k = poly::degree(f);
    for (int d = 1; d <= k / 2; ++d) {
        std::int64_t total = 1;
        for (int i = 0; i < d; ++i) total *= p;
        for (std::int64_t code = 0; code < total; ++code) {
            PolyFp g(static_cast<std::size_t>(d) + 1, 0);
            std::int64_t c = code;
            for (int i = 0; i < d; ++i, c /= p) g[static_cast<std::size_t>(i)] = c % p;
            g[static_cast<std::size_t>(d)] = 1;
            if (poly::rem(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("irreducibility agrees with factor search") {
    for (std::int64_t p : {3, 5}) {
        for (int k = 1; k <= 4; ++k) {
            std::int64_t total = 1;
            for (int i = 0; i < k; ++i) total *= p;
            bool found_first = false;
            for (std::int64_t code = 0; code < total; ++code) {
                PolyFp f(static_cast<std::size_t>(k) + 1, 0);
                std::int64_t c = code;
                // Lexicographic on (c_0, ..., c_{k-1}) with c_0 most significant.
                for (int i = k - 1; i >= 0; --i, c /= p) f[static_cast<std::size_t>(i)] = c % p;
                f[static_cast<std::size_t>(k)] = 1;
                const bool expect = irreducible_by_factor_search(f, p);
                CHECK(is_irreducible(f, p) == expect);
                if (expect && !found_first) {
                    CHECK(first_irreducible(p, k) == f);
                    found_first = true;
                }
            }
        }
    }
}

TEST_CASE("apply_selfmap examples") {
    const auto line = GroupDescriptor::integer_line();
    CHECK(apply_selfmap(GroupSelfMap::power(Rational(3, 2)), line, GroupElement{10}) == GroupElement{31});
    const auto f3t = GroupDescriptor::poly_ring(3);
    const auto sq = GroupSelfMap::ring_polynomial({GroupElement{}, GroupElement{}, GroupElement{1}});
    CHECK(apply_selfmap(sq, f3t, GroupElement{1, 1}) == GroupElement{1, 2, 1});
    const GroupElement g{4, 0, -2};
    CHECK(apply_selfmap(GroupSelfMap::identity(), GroupDescriptor::free_sum(), g) == g);
    CHECK_THROWS_AS(apply_selfmap(GroupSelfMap::power(Rational(3, 2)), line, GroupElement{-4}), InvalidInput);
    CHECK(apply_selfmap(GroupSelfMap::power(Rational(2)), line, GroupElement{-4}) == GroupElement{16});
    CHECK_THROWS_AS(GroupSelfMap::power(Rational(9, 2)), InvalidInput);
    CHECK_THROWS_AS(GroupSelfMap::power(Rational(1)), InvalidInput);
    CHECK_THROWS(sq.check(GroupDescriptor::prime_sum(3)));
}

TEST_CASE("homomorphism and composition") {
    const auto z2 = GroupDescriptor::lattice(2);
    const auto hom = GroupSelfMap::homomorphism({{1, 1}, {0, 1}});
    CHECK(hom.apply(z2, GroupElement{2, 3}) == GroupElement{5, 3});
    const auto both = GroupSelfMap::compose({hom, GroupSelfMap::power(Rational(2))});
    CHECK(both.apply(z2, GroupElement{2, 3}) == GroupElement{25, 9});
}

TEST_CASE("floor_power is exact near perfect powers") {
    CHECK(floor_power(0, 3, 2) == 0);
    CHECK(floor_power(1, 3, 2) == 1);
    CHECK(floor_power(4, 3, 2) == 8);
    CHECK(floor_power(1'000'000, 3, 2) == 1'000'000'000);
    CHECK(floor_power(999'999, 3, 2) == 999'998'500);
    CHECK(floor_power(100, 4, 1) == 100'000'000);
    CHECK(integer_root(Integer(26), 3) == 2);
    CHECK(integer_root(Integer(27), 3) == 3);
}

TEST_CASE("canonical text round-trips") {
    for (const char* d : {"integer_line", "lattice d=2", "free_sum", "prime_sum p=3", "poly_ring p=5", "finite_field p=3 k=2"}) {
        const auto desc = parse_descriptor(d);
        CHECK(to_text(desc) == d);
        CHECK(parse_descriptor(to_text(desc)) == desc);
    }
    const auto z3 = parse_descriptor("prime_sum p=3");
    const auto chi = parse_character(z3, "char y=[1,0,2]");
    CHECK(chi.residue_vector() == std::vector<std::int64_t>{1, 0, 2});
    CHECK(parse_character(z3, to_text(chi)) == chi);
    const auto line = GroupDescriptor::integer_line();
    const auto power = parse_selfmap(line, "power 3/2");
    CHECK(to_text(power) == "power 3/2");
    CHECK(parse_selfmap(line, to_text(power)) == power);
    CHECK(parse_element(z3, to_text(GroupElement{1, 2})) == GroupElement{1, 2});
    CHECK_THROWS_AS(parse_descriptor("prime_sum p=4"), InvalidInput);
    CHECK_THROWS_AS(parse_selfmap(line, "squash 2"), ParseError);
}
