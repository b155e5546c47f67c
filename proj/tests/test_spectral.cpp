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

#include "ergo/spectral/spectral.hpp"
#include "support.hpp"

using namespace ergo;

namespace {

const GroupDescriptor kLine = GroupDescriptor::integer_line();

/// Fejer kernel (1/n) (sin(pi n x) / sin(pi x))^2.
double fejer_kernel(double x, std::int64_t n) {
    const double s = std::sin(M_PI * x);
    if (std::abs(s) < 1e-15) return static_cast<double>(n);
    const double t = std::sin(M_PI * static_cast<double>(n) * x);
    return t * t / (s * s) / static_cast<double>(n);
}

double circle_distance(double a, double b) {
    double d = std::fmod(std::abs(a - b), 1.0);
    return std::min(d, 1.0 - d);
}

/// Translation of (Z/p)^level acting on itself; x is read in base p with x_1 most significant.
System level_translation(std::int64_t p, std::int64_t level) {
    std::size_t size = 1;
    for (std::int64_t i = 0; i < level; ++i) size *= static_cast<std::size_t>(p);
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
    return System::finite(GroupDescriptor::prime_sum(p), std::vector<Rational>(size, Rational(1, static_cast<long long>(size))), gens,
                          std::vector<std::int64_t>(static_cast<std::size_t>(level), p));
}

CorrelationSequence rotation_correlations(std::int64_t n) {
    const System rot = System::torus(kLine, 1, {{Angle::tag(AngleTag::Sqrt2m1)}});
    return correlation_sequence(rot, Observable::wave(rot.space(), {1}), n);
}

}  // namespace

TEST_CASE("fejer_density examples") {
    std::vector<Scalar> delta(16, Scalar(0));
    delta[0] = Scalar(1);
    const auto flat = fejer_density(CorrelationSequence::hermitian(delta), 64);
    CHECK(flat.resolution == 64);
    for (double s : flat.samples) CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(flat.flatness() == doctest::Approx(0.0));

    const std::int64_t n = 32;
    std::vector<Scalar> quarter;
    for (std::int64_t k = 0; k < n; ++k) quarter.push_back(Scalar::unit(Rational(k, 4)));
    const auto peak = fejer_density(CorrelationSequence::hermitian(quarter), 128);
    const auto top = std::max_element(peak.samples.begin(), peak.samples.end()) - peak.samples.begin();
    CHECK(top == 32);
    CHECK(peak.samples[32] == doctest::Approx(static_cast<double>(n)).epsilon(1e-9));
    for (std::size_t j = 0; j < peak.samples.size(); ++j)
        CHECK(peak.samples[j] == doctest::Approx(fejer_kernel(static_cast<double>(j) / 128 - 0.25, n)).epsilon(1e-9).scale(1.0));
}

TEST_CASE("rotation density concentrates at the angle") {
    const std::int64_t n = 4096;
    const auto gamma = rotation_correlations(n);
    const auto d = fejer_density(gamma, 4096);
    const double alpha = std::sqrt(2.0) - 1.0;
    double total = 0.0, near2 = 0.0, near32 = 0.0;
    for (std::size_t j = 0; j < d.samples.size(); ++j) {
        const double theta = static_cast<double>(j) / static_cast<double>(d.resolution);
        CHECK(d.samples[j] == doctest::Approx(fejer_kernel(theta - alpha, n)).scale(1.0).epsilon(1e-7));
        total += d.samples[j];
        const double dist = circle_distance(theta, alpha);
        if (dist <= 2.0 / n) near2 += d.samples[j];
        if (dist <= 32.0 / n) near32 += d.samples[j];
    }
    CHECK(d.mean() == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(d.min() >= -1e-9);
    CHECK(near2 / total >= 0.9);
    CHECK(near32 / total >= 0.99);
}

TEST_CASE("wiener_atom_mass examples") {
    const double beta = std::sqrt(3.0) - 1.0;
    std::vector<std::complex<double>> g;
    for (int k = 0; k <= 256; ++k) g.push_back(testing::cis(k * beta));
    for (std::int64_t n : {1, 10, 256}) CHECK(wiener_atom_mass(g, beta, n) == doctest::Approx(1.0).epsilon(1e-12));

    std::vector<Scalar> r;
    for (std::int64_t k = 0; k <= 30; ++k) r.push_back(Scalar::unit(Rational(k, 5)));
    const auto rs = CorrelationSequence::hermitian(r);
    for (std::int64_t n : {7, 10, 29}) {
        // |sum_{k=1}^n e(-k/3)| / n from the geometric sum.
        const std::int64_t rem = n % 3;
        const double exact = (rem == 0 ? 0.0 : 1.0) / static_cast<double>(n);
        const double m = wiener_atom_mass(rs, 1.0 / 5 + 1.0 / 3, n);
        CHECK(m == doctest::Approx(exact).scale(1.0).epsilon(1e-12));
        CHECK(m <= 2.0 / static_cast<double>(n));
    }

    const System bern = System::bernoulli(kLine, {Rational(1, 2), Rational(1, 2)});
    const Observable f = Observable::chaos(bern.space(), {{Word{Site{GroupElement{}, 1}}, Scalar(1)}});
    const auto gb = correlation_sequence(bern, f, 64);
    for (double theta : {0.0, 0.1, 0.5}) CHECK(wiener_atom_mass(gb, theta, 63) == 0.0);
}

TEST_CASE("atom scan finds the rotation angle") {
    const auto gamma = rotation_correlations(4096);
    const auto scan = scan_atoms(gamma, 4096);
    REQUIRE_FALSE(scan.atoms.empty());
    CHECK(circle_distance(scan.atoms.front().theta, std::sqrt(2.0) - 1.0) < 1e-6);
    CHECK(scan.atoms.front().mass >= 0.9);
    CHECK(scan.total_mass <= 1.0 + 1e-6);
}

TEST_CASE("dual_level_measure examples") {
    const auto sys = level_translation(3, 2);
    const auto one = sys.one();
    const auto m1 = dual_level_measure(sys, one, 2);
    REQUIRE(m1.masses.size() == 9);
    CHECK(m1.characters.front() == std::vector<std::int64_t>{0, 0});
    CHECK(m1.masses.front() == Scalar(1));
    for (std::size_t i = 1; i < 9; ++i) CHECK(m1.masses[i].is_exact_zero());
    CHECK(m1.parseval);
    CHECK(m1.nonnegative);

    const System still = System::finite(GroupDescriptor::prime_sum(3), {Rational(1, 2), Rational(1, 2)}, {}, {});
    const Observable unit = Observable::finite(still.space(), {Scalar(1), Scalar(-1)});
    const auto m2 = dual_level_measure(still, unit, 1);
    CHECK(m2.masses[0] == Scalar(1));
    CHECK(m2.masses[1].is_exact_zero());
    CHECK(m2.masses[2].is_exact_zero());

    // Z/3 through the first coordinate, f = (1, w, w^2): gamma(g) = w^{g_1}.
    const auto z3 = level_translation(3, 1);
    const Observable w = Observable::finite(z3.space(), {Scalar::unit(CharValue{0, 3}), Scalar::unit(CharValue{1, 3}), Scalar::unit(CharValue{2, 3})});
    const auto m3 = dual_level_measure(z3, w, 1);
    // (1/3) sum_g gamma(g) conj chi_y(g), term by term.
    for (std::size_t i = 0; i < 3; ++i) {
        Scalar direct(0);
        for (std::int64_t g = 0; g < 3; ++g)
            direct += z3.correlation(w, GroupElement{g}) * Scalar::unit(CharValue{(g * static_cast<std::int64_t>(i)) % 3, 3}).conj();
        CHECK(m3.masses[i] == direct / Rational(3));
    }
    CHECK(m3.masses[1] == Scalar(1));
    CHECK(m3.masses[0].is_exact_zero());
    CHECK(m3.masses[2].is_exact_zero());
}

TEST_CASE("dual_level_measure rejects actions that do not factor") {
    const auto sys = level_translation(3, 2);
    const Observable f = Observable::finite(sys.space(), {Scalar(1), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0)});
    try {
        (void)dual_level_measure(sys, f, 1);
        FAIL("expected CapabilityError");
    } catch (const CapabilityError& e) {
        CHECK(std::string(e.what()).find("[") != std::string::npos);
    }
    CHECK_THROWS_AS(dual_level_measure(System::torus(kLine, 1, {{Angle::tag(AngleTag::Golden)}}),
                                       System::torus(kLine, 1, {{Angle::tag(AngleTag::Golden)}}).one(), 1),
                    CapabilityError);
}

TEST_CASE("classify_spectrum examples") {
    const System bern = System::bernoulli(kLine, {Rational(1, 2), Rational(1, 2)});
    const Observable f = Observable::chaos(bern.space(), {{Word{Site{GroupElement{}, 1}}, Scalar(1)}});
    const auto eb = estimate_spectrum(correlation_sequence(bern, f, 256), 256);
    CHECK(eb.density->flatness() == 0.0);
    CHECK(classify_spectrum(eb).tag == SpectralTag::LebesgueLike);

    const auto er = estimate_spectrum(rotation_correlations(4096), 4096);
    const auto cr = classify_spectrum(er);
    CHECK(cr.tag == SpectralTag::AtomicDominant);
    CHECK(cr.atom_share >= 0.9);

    const Angle beta = Angle::tag(AngleTag::Sqrt2m1);
    std::vector<Scalar> mix;
    for (std::int64_t k = 0; k < 4096; ++k) mix.push_back(Scalar(Rational(1, 2)) * Scalar::unit(beta.scaled(k)) + (k == 0 ? Scalar(Rational(1, 2)) : Scalar(0)));
    const auto cm = classify_spectrum(estimate_spectrum(CorrelationSequence::hermitian(mix), 4096));
    CHECK(cm.tag == SpectralTag::Mixed);
    CHECK(cm.atom_share == doctest::Approx(0.5).epsilon(0.01));

    const auto dual = dual_level_estimate(level_translation(3, 2), level_translation(3, 2).one(), 2);
    CHECK(classify_spectrum(dual).tag == SpectralTag::AtomicDominant);

    SpectralEstimate broken = eb;
    broken.density->samples[3] = -1.0;
    CHECK(classify_spectrum(broken).tag == SpectralTag::Inconclusive);
    CHECK(spectral_tag_name(SpectralTag::LebesgueLike) == "lebesgue_like");
}

TEST_CASE("correlation sequences") {
    const System rot = System::torus(GroupDescriptor::lattice(2), 2,
                                     {{Angle::rational(Rational(1, 3)), Angle::rational(0)}, {Angle::rational(0), Angle::rational(Rational(1, 5))}});
    const auto g = correlation_sequence(rot, Observable::wave(rot.space(), {1, 1}), 4);
    CHECK(g.dim == 2);
    CHECK(g.values.size() == 49);
    CHECK(g.at({2, -1}) == Scalar::unit(Rational(2, 3) - Rational(1, 5)));
    require_hermitian(g);
    auto bad = CorrelationSequence::hermitian({Scalar(1), Scalar(Rational(1, 2))});
    bad.values[0] = Scalar(Rational(1, 3));
    CHECK_THROWS_AS(require_hermitian(bad), InvalidInput);
    const auto d = fejer_density(g, 8);
    CHECK(d.samples.size() == 64);
    CHECK(d.mean() == doctest::Approx(1.0).epsilon(1e-9));
}
