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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ergo/core/errors.hpp"
#include "ergo/systems/scalar.hpp"
#include "ergo/systems/system.hpp"

namespace ergo {

/// gamma(k) for k in (-n, n)^dim, row-major with the first coordinate most
/// significant.
struct CorrelationSequence {
    std::size_t dim = 1;
    std::int64_t n = 0;
    std::vector<Scalar> values;

    std::size_t offset(const std::vector<std::int64_t>& k) const;
    const Scalar& at(const std::vector<std::int64_t>& k) const;
    const Scalar& at(std::int64_t k) const { return at(std::vector<std::int64_t>{k}); }
    const Scalar& gamma0() const;

    /// gamma(k) for |k| < n on the integer line.
    static CorrelationSequence from_values(std::vector<Scalar> gamma_nonneg_and_neg, std::int64_t n, std::size_t dim = 1);
    /// Builds gamma(-k) = conj gamma(k) from gamma(0..n-1).
    static CorrelationSequence hermitian(const std::vector<Scalar>& gamma_nonneg);
};

/// gamma(k) = <T_k f, f> for |k_i| < n; integer_line or lattices with d <= 3.
CorrelationSequence correlation_sequence(const System& sys, const Observable& f, std::int64_t n, std::size_t budget = kDefaultBudget);

/// InvalidInput unless gamma(-k) = conj gamma(k) within tol (exactly when both sides are exact).
void require_hermitian(const CorrelationSequence& gamma, double tol = 1e-9);

struct FejerDensity {
    std::size_t dim = 1;
    /// Grid points per axis; sample j sits at theta = j / resolution.
    std::size_t resolution = 0;
    std::vector<double> samples;
    double mean() const;
    double min() const;
    /// max |sample - mean| / mean; infinity when the mean is not positive.
    double flatness() const;
};

struct Atom {
    double theta = 0.0;
    double mass = 0.0;
};

struct AtomScan {
    std::vector<Atom> atoms;
    double total_mass = 0.0;
};

struct FiniteDualMass {
    std::int64_t level = 0;
    /// Residue vectors y of the level-n characters, in enumeration order.
    std::vector<std::vector<std::int64_t>> characters;
    std::vector<Scalar> masses;
    /// Every mass is an exact real >= 0.
    bool nonnegative = true;
    /// sum of masses == gamma(e_G) exactly.
    bool parseval = true;
};

struct SpectralEstimate {
    std::string source;
    std::int64_t n = 0;
    double gamma0 = 0.0;
    std::optional<FejerDensity> density;
    std::optional<AtomScan> atoms;
    std::optional<FiniteDualMass> dual;
};

/// sample(theta) = sum_{|k| < n} prod_i (1 - |k_i|/n) gamma(k) e(-k . theta) on
/// a grid of max(resolution, n) points per axis.
FejerDensity fejer_density(const CorrelationSequence& gamma, std::size_t resolution = 4096, std::size_t budget = kDefaultBudget);

/// |(1/n) sum_{k=1}^{n} gamma(k) e(-k theta)|; uses gamma(1..n-1) of the stored sequence and gamma(n) = 0 if absent.
double wiener_atom_mass(const CorrelationSequence& gamma, double theta, std::int64_t n);
double wiener_atom_mass(const std::vector<std::complex<double>>& gamma_nonneg, double theta, std::int64_t n);

struct AtomScanOptions {
    /// Candidates are local maxima above factor * median of the density.
    double median_factor = 3.0;
    std::size_t max_atoms = 16;
    int refine_iterations = 60;
};

/// Candidate frequencies from density maxima, each refined by ternary search
/// on the Wiener mass and then subtracted; masses are capped at gamma(0).
AtomScan scan_atoms(const CorrelationSequence& gamma, std::size_t resolution = 4096, const AtomScanOptions& opts = {});

SpectralEstimate estimate_spectrum(const CorrelationSequence& gamma, std::size_t resolution = 4096, const AtomScanOptions& opts = {});

/// Exact masses of the spectral measure on the level-n dual quotient of
/// prime_sum or poly_ring. CapabilityError naming a witness when the
/// correlations do not factor through the level.
FiniteDualMass dual_level_measure(const System& sys, const Observable& f, std::int64_t level, std::size_t budget = kDefaultBudget);
SpectralEstimate dual_level_estimate(const System& sys, const Observable& f, std::int64_t level, std::size_t budget = kDefaultBudget);

enum class SpectralTag { AtomicDominant, LebesgueLike, Mixed, Inconclusive };
std::string spectral_tag_name(SpectralTag tag);

struct ClassifyThresholds {
    double atomic_share = 0.9;
    double lebesgue_share = 0.05;
    double flatness = 0.10;
    double mean_tolerance = 1e-6;
    double min_tolerance = -1e-9;
};

struct Classification {
    SpectralTag tag = SpectralTag::Inconclusive;
    double atom_share = 0.0;
    double flatness = 0.0;
    bool normalized = false;
    ClassifyThresholds thresholds;
};

/// A diagnostic label for finite data, not a statement about the spectral type.
Classification classify_spectrum(const SpectralEstimate& estimate, const ClassifyThresholds& thresholds = {});

/// Rows "theta mass" for atoms, "theta density" for a 1-d density, "y mass" for dual masses.
std::string estimate_table(const SpectralEstimate& estimate);

}  // namespace ergo
