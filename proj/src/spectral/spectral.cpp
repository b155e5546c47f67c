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

#include "ergo/spectral/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "ergo/core/text_util.hpp"
#include "ergo/group/folner.hpp"
#include "ergo/group/group_text.hpp"

namespace ergo {

namespace {

using cd = std::complex<double>;

std::size_t side_of(std::int64_t n) { return static_cast<std::size_t>(2 * n - 1); }

std::size_t power(std::size_t base, std::size_t exp, std::size_t budget, const char* what) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < exp; ++i) {
        if (__builtin_mul_overflow(r, base, &r) || r > budget) throw BudgetExceeded(what, r, budget);
    }
    return r;
}

/// e(-x) with x reduced mod 1 first.
cd unit_minus(double x) {
    const double f = x - std::floor(x);
    return std::polar(1.0, -2.0 * std::numbers::pi * f);
}

/// Offsets in (-n, n)^dim in storage order.
std::vector<std::vector<std::int64_t>> all_offsets(std::size_t dim, std::int64_t n) {
    std::vector<std::vector<std::int64_t>> out;
    std::vector<std::int64_t> k(dim, -(n - 1));
    while (true) {
        out.push_back(k);
        std::size_t i = dim;
        while (i > 0) {
            --i;
            if (++k[i] <= n - 1) break;
            k[i] = -(n - 1);
            if (i == 0) return out;
        }
        if (dim == 0) return out;
    }
}

std::vector<double> density_1d(const std::vector<cd>& nonneg, std::int64_t n, std::size_t grid) {
    std::vector<cd> tw(grid);
    for (std::size_t m = 0; m < grid; ++m) tw[m] = unit_minus(static_cast<double>(m) / static_cast<double>(grid));
    const auto g = static_cast<std::int64_t>(grid);
    std::vector<double> out(grid, 0.0);
    for (std::size_t j = 0; j < grid; ++j) {
        double acc = nonneg[0].real();
        for (std::int64_t k = 1; k < n; ++k) {
            const cd c = nonneg[static_cast<std::size_t>(k)];
            if (c == cd(0.0)) continue;
            const double w = 1.0 - static_cast<double>(k) / static_cast<double>(n);
            // gamma(k) e(-k theta) + conj(gamma(k)) e(k theta) = 2 Re(gamma(k) e(-k theta))
            acc += 2.0 * w * (c * tw[static_cast<std::size_t>(mod_floor(k * static_cast<std::int64_t>(j), g))]).real();
        }
        out[j] = acc;
    }
    return out;
}

std::vector<cd> nonneg_values(const CorrelationSequence& gamma) {
    if (gamma.dim != 1) throw CapabilityError("atom scans are one-dimensional");
    std::vector<cd> out;
    for (std::int64_t k = 0; k < gamma.n; ++k) out.push_back(gamma.at(k).value());
    return out;
}

cd wiener_coefficient(const std::vector<cd>& nonneg, double theta, std::int64_t n) {
    cd acc = 0.0;
    const auto stored = static_cast<std::int64_t>(nonneg.size());
    for (std::int64_t k = 1; k <= n && k < stored; ++k) acc += nonneg[static_cast<std::size_t>(k)] * unit_minus(static_cast<double>(k) * theta);
    return acc / static_cast<double>(n);
}

double median_of(std::vector<double> v) {
    const auto mid = v.begin() + static_cast<std::ptrdiff_t>(v.size() / 2);
    std::nth_element(v.begin(), mid, v.end());
    return *mid;
}

}  // namespace

std::size_t CorrelationSequence::offset(const std::vector<std::int64_t>& k) const {
    if (k.size() != dim) throw InvalidInput("correlation index has the wrong dimension");
    const std::size_t side = side_of(n);
    std::size_t idx = 0;
    for (auto x : k) {
        if (x <= -n || x >= n) throw InvalidInput("correlation index outside (-n, n)");
        idx = idx * side + static_cast<std::size_t>(x + n - 1);
    }
    return idx;
}

const Scalar& CorrelationSequence::at(const std::vector<std::int64_t>& k) const { return values.at(offset(k)); }

const Scalar& CorrelationSequence::gamma0() const { return at(std::vector<std::int64_t>(dim, 0)); }

CorrelationSequence CorrelationSequence::from_values(std::vector<Scalar> values, std::int64_t n, std::size_t dim) {
    if (n < 1 || dim < 1) throw InvalidInput("correlation sequences need n >= 1 and dim >= 1");
    std::size_t expected = 1;
    for (std::size_t i = 0; i < dim; ++i) expected *= side_of(n);
    if (values.size() != expected) throw InvalidInput("expected " + std::to_string(expected) + " correlation values");
    return CorrelationSequence{dim, n, std::move(values)};
}

CorrelationSequence CorrelationSequence::hermitian(const std::vector<Scalar>& nonneg) {
    if (nonneg.empty()) throw InvalidInput("empty correlation sequence");
    const auto n = static_cast<std::int64_t>(nonneg.size());
    std::vector<Scalar> values(side_of(n));
    for (std::int64_t k = 0; k < n; ++k) {
        values[static_cast<std::size_t>(n - 1 + k)] = nonneg[static_cast<std::size_t>(k)];
        values[static_cast<std::size_t>(n - 1 - k)] = nonneg[static_cast<std::size_t>(k)].conj();
    }
    return CorrelationSequence{1, n, std::move(values)};
}

CorrelationSequence correlation_sequence(const System& sys, const Observable& f, std::int64_t n, std::size_t budget) {
    const auto& g = sys.group();
    if (g.kind() != GroupKind::IntegerLine && !(g.kind() == GroupKind::IntegerLattice && g.rank() <= 3))
        throw CapabilityError("correlation sequences need integer_line or a lattice of rank <= 3");
    if (n < 1) throw InvalidInput("correlation sequences need n >= 1");
    const std::size_t dim = g.rank();
    power(side_of(n), dim, budget, "correlation sequence");
    std::vector<Scalar> values;
    for (const auto& k : all_offsets(dim, n)) values.push_back(sys.correlation(f, GroupElement(k)));
    return CorrelationSequence{dim, n, std::move(values)};
}

void require_hermitian(const CorrelationSequence& gamma, double tol) {
    for (const auto& k : all_offsets(gamma.dim, gamma.n)) {
        std::vector<std::int64_t> minus(k);
        for (auto& x : minus) x = -x;
        const Scalar& a = gamma.at(minus);
        const Scalar b = gamma.at(k).conj();
        const bool ok = (a.is_exact() && b.is_exact()) ? a == b : std::abs(a.value() - b.value()) <= tol;
        if (!ok) {
            std::vector<std::string> parts;
            for (auto x : k) parts.push_back(std::to_string(x));
            throw InvalidInput("correlations are not conjugate symmetric at k = [" + text::join(parts, ",") + "]");
        }
    }
}

double FejerDensity::mean() const {
    double s = 0.0;
    for (double x : samples) s += x;
    return samples.empty() ? 0.0 : s / static_cast<double>(samples.size());
}

double FejerDensity::min() const { return samples.empty() ? 0.0 : *std::min_element(samples.begin(), samples.end()); }

double FejerDensity::flatness() const {
    const double m = mean();
    if (!(m > 0.0)) return std::numeric_limits<double>::infinity();
    double worst = 0.0;
    for (double x : samples) worst = std::max(worst, std::abs(x - m));
    return worst / m;
}

FejerDensity fejer_density(const CorrelationSequence& gamma, std::size_t resolution, std::size_t budget) {
    require_hermitian(gamma);
    FejerDensity d;
    d.dim = gamma.dim;
    d.resolution = std::max<std::size_t>(resolution, static_cast<std::size_t>(gamma.n));
    if (gamma.dim == 1) {
        d.samples = density_1d(nonneg_values(gamma), gamma.n, d.resolution);
        return d;
    }
    const std::size_t points = power(d.resolution, gamma.dim, budget, "density grid");
    struct Term {
        std::vector<std::int64_t> k;
        cd c;
    };
    std::vector<Term> terms;
    for (const auto& k : all_offsets(gamma.dim, gamma.n)) {
        const Scalar& v = gamma.at(k);
        if (v.is_exact_zero()) continue;
        double w = 1.0;
        for (auto x : k) w *= 1.0 - static_cast<double>(std::llabs(x)) / static_cast<double>(gamma.n);
        terms.push_back({k, w * v.value()});
    }
    if (terms.size() > 0 && points > budget / terms.size()) throw BudgetExceeded("density evaluation", points * terms.size(), budget);
    const auto g = static_cast<std::int64_t>(d.resolution);
    std::vector<cd> tw(d.resolution);
    for (std::size_t m = 0; m < d.resolution; ++m) tw[m] = unit_minus(static_cast<double>(m) / static_cast<double>(d.resolution));
    d.samples.assign(points, 0.0);
    std::vector<std::int64_t> j(gamma.dim, 0);
    for (std::size_t idx = 0; idx < points; ++idx) {
        std::size_t rest = idx;
        for (std::size_t i = gamma.dim; i > 0; --i) {
            j[i - 1] = static_cast<std::int64_t>(rest % d.resolution);
            rest /= d.resolution;
        }
        cd acc = 0.0;
        for (const auto& t : terms) {
            std::int64_t e = 0;
            for (std::size_t i = 0; i < gamma.dim; ++i) e += t.k[i] * j[i];
            acc += t.c * tw[static_cast<std::size_t>(mod_floor(e, g))];
        }
        d.samples[idx] = acc.real();
    }
    return d;
}

double wiener_atom_mass(const std::vector<cd>& nonneg, double theta, std::int64_t n) {
    if (n < 1) throw InvalidInput("Wiener averages need n >= 1");
    return std::abs(wiener_coefficient(nonneg, theta, n));
}

double wiener_atom_mass(const CorrelationSequence& gamma, double theta, std::int64_t n) { return wiener_atom_mass(nonneg_values(gamma), theta, n); }

AtomScan scan_atoms(const CorrelationSequence& gamma, std::size_t resolution, const AtomScanOptions& opts) {
    require_hermitian(gamma);
    std::vector<cd> residual = nonneg_values(gamma);
    const std::int64_t n = gamma.n;
    const double gamma0 = residual[0].real();
    const std::size_t grid = std::max<std::size_t>(resolution, static_cast<std::size_t>(n));
    const double min_mass = 1e-6 * std::max(gamma0, 1e-300);
    AtomScan scan;
    while (scan.atoms.size() < opts.max_atoms && scan.total_mass < gamma0) {
        const auto s = density_1d(residual, n, grid);
        const double cut = opts.median_factor * median_of(s);
        std::size_t best = grid;
        for (std::size_t j = 0; j < grid; ++j) {
            const double left = s[(j + grid - 1) % grid], right = s[(j + 1) % grid];
            if (s[j] > cut && s[j] >= left && s[j] >= right && (best == grid || s[j] > s[best])) best = j;
        }
        if (best == grid) break;
        double lo = (static_cast<double>(best) - 1.0) / static_cast<double>(grid);
        double hi = (static_cast<double>(best) + 1.0) / static_cast<double>(grid);
        for (int it = 0; it < opts.refine_iterations; ++it) {
            const double m1 = lo + (hi - lo) / 3.0, m2 = hi - (hi - lo) / 3.0;
            if (wiener_atom_mass(residual, m1, n) < wiener_atom_mass(residual, m2, n))
                lo = m1;
            else
                hi = m2;
        }
        double theta = 0.5 * (lo + hi);
        theta -= std::floor(theta);
        const double mass = std::min(wiener_atom_mass(residual, theta, n), gamma0 - scan.total_mass);
        if (mass < min_mass) break;
        for (std::int64_t k = 0; k < n; ++k) residual[static_cast<std::size_t>(k)] -= mass * std::conj(unit_minus(static_cast<double>(k) * theta));
        scan.atoms.push_back({theta, mass});
        scan.total_mass += mass;
    }
    return scan;
}

SpectralEstimate estimate_spectrum(const CorrelationSequence& gamma, std::size_t resolution, const AtomScanOptions& opts) {
    SpectralEstimate e;
    e.source = "correlations";
    e.n = gamma.n;
    e.gamma0 = gamma.gamma0().value().real();
    e.density = fejer_density(gamma, resolution);
    if (gamma.dim == 1) e.atoms = scan_atoms(gamma, resolution, opts);
    return e;
}

FiniteDualMass dual_level_measure(const System& sys, const Observable& f, std::int64_t level, std::size_t budget) {
    const auto& group = sys.group();
    if (group.kind() != GroupKind::PrimeDirectSum && group.kind() != GroupKind::PolynomialRing)
        throw CapabilityError("dual level masses need prime_sum or poly_ring");
    if (level < 1) throw InvalidInput("dual level must be >= 1");
    sys.require_observable(f);
    const auto p = static_cast<std::size_t>(group.prime());
    const std::size_t size = power(p, static_cast<std::size_t>(level), budget, "dual level");
    power(size, 2, budget, "dual level inversion");
    const FolnerWindow window = FolnerFamily::level_subgroup(group).window(level, budget);
    std::vector<GroupElement> elements = window.elements();
    std::vector<Scalar> gamma;
    for (const auto& g : elements) gamma.push_back(sys.correlation(f, g));
    constexpr std::int64_t kProbe = 16;
    for (std::int64_t j = level; j < level + kProbe; ++j) {
        std::vector<std::int64_t> ej(static_cast<std::size_t>(j + 1), 0);
        ej.back() = 1;
        const GroupElement step(ej);
        for (std::size_t i = 0; i < elements.size(); ++i) {
            const GroupElement moved = group.combine(elements[i], step);
            if (!(sys.correlation(f, moved) == gamma[i]))
                throw CapabilityError("correlations do not factor through level " + std::to_string(level) + ": witness g = " + to_text(moved) +
                                      " differs from " + to_text(elements[i]));
        }
    }
    FiniteDualMass out;
    out.level = level;
    ScalarSum total;
    for (const auto& yg : elements) {
        std::vector<std::int64_t> y(static_cast<std::size_t>(level), 0);
        for (std::size_t i = 0; i < yg.support_end(); ++i) y[i] = yg[i];
        const Character chi = Character::residues(group, y);
        std::vector<ScalarSum> by_exponent(p);
        for (std::size_t i = 0; i < elements.size(); ++i) by_exponent[static_cast<std::size_t>(chi.eval(elements[i]).exponent)].add(gamma[i]);
        ScalarSum mass;
        for (std::size_t r = 0; r < p; ++r) {
            const Scalar part = by_exponent[r].result();
            if (part.is_exact_zero()) continue;
            mass.add(part * Scalar::unit(CharValue{static_cast<std::int64_t>((p - r) % p), static_cast<std::int64_t>(p)}));
        }
        Scalar m = mass.result() / Rational(static_cast<long long>(size));
        const auto sign = m.exact_real_sign();
        out.nonnegative = out.nonnegative && sign && *sign >= 0;
        total.add(m);
        out.characters.push_back(std::move(y));
        out.masses.push_back(std::move(m));
    }
    const Scalar sum = total.result();
    const Scalar& g0 = gamma.front();
    out.parseval = sum.is_exact() && g0.is_exact() && sum == g0;
    return out;
}

SpectralEstimate dual_level_estimate(const System& sys, const Observable& f, std::int64_t level, std::size_t budget) {
    SpectralEstimate e;
    e.source = "dual level";
    e.n = level;
    e.dual = dual_level_measure(sys, f, level, budget);
    e.gamma0 = sys.correlation(f, sys.group().identity()).value().real();
    return e;
}

std::string spectral_tag_name(SpectralTag tag) {
    switch (tag) {
        case SpectralTag::AtomicDominant: return "atomic_dominant";
        case SpectralTag::LebesgueLike: return "lebesgue_like";
        case SpectralTag::Mixed: return "mixed";
        case SpectralTag::Inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Classification classify_spectrum(const SpectralEstimate& e, const ClassifyThresholds& th) {
    Classification c;
    c.thresholds = th;
    if (!(e.gamma0 > 0.0)) return c;
    if (e.dual) {
        const auto& d = *e.dual;
        c.normalized = d.nonnegative && d.parseval;
        double mx = 0.0, mean = 0.0;
        for (const auto& m : d.masses) {
            mx = std::max(mx, m.value().real());
            mean += m.value().real();
        }
        mean /= static_cast<double>(d.masses.size());
        for (const auto& m : d.masses) c.flatness = std::max(c.flatness, std::abs(m.value().real() - mean) / mean);
        c.atom_share = mx / e.gamma0;
        if (!c.normalized)
            c.tag = SpectralTag::Inconclusive;
        else if (c.atom_share >= th.atomic_share)
            c.tag = SpectralTag::AtomicDominant;
        else if (c.flatness <= th.flatness)
            c.tag = SpectralTag::LebesgueLike;
        else
            c.tag = SpectralTag::Mixed;
        return c;
    }
    if (!e.density) return c;
    c.normalized = std::abs(e.density->mean() - e.gamma0) <= th.mean_tolerance * std::max(1.0, e.gamma0) && e.density->min() >= th.min_tolerance;
    c.flatness = e.density->flatness();
    c.atom_share = e.atoms ? e.atoms->total_mass / e.gamma0 : 0.0;
    if (!c.normalized)
        c.tag = SpectralTag::Inconclusive;
    else if (c.atom_share >= th.atomic_share)
        c.tag = SpectralTag::AtomicDominant;
    else if (c.atom_share <= th.lebesgue_share && c.flatness <= th.flatness)
        c.tag = SpectralTag::LebesgueLike;
    else
        c.tag = SpectralTag::Mixed;
    return c;
}

std::string estimate_table(const SpectralEstimate& e) {
    std::ostringstream out;
    if (e.dual) {
        out << "y mass exactness\n";
        for (std::size_t i = 0; i < e.dual->masses.size(); ++i) {
            std::vector<std::string> parts;
            for (auto x : e.dual->characters[i]) parts.push_back(std::to_string(x));
            const auto& m = e.dual->masses[i];
            out << "[" << text::join(parts, ",") << "] " << m.to_text() << " " << (m.is_exact() ? "exact" : "float") << "\n";
        }
    }
    if (e.atoms) {
        out << "theta mass\n";
        for (const auto& a : e.atoms->atoms) out << text::format_sci(a.theta, 9) << " " << text::format_sci(a.mass) << "\n";
    }
    if (e.density && e.density->dim == 1) {
        out << "theta density\n";
        const auto& d = *e.density;
        for (std::size_t j = 0; j < d.samples.size(); ++j)
            out << text::format_sci(static_cast<double>(j) / static_cast<double>(d.resolution), 9) << " " << text::format_sci(d.samples[j]) << "\n";
    }
    return out.str();
}

}  // namespace ergo
