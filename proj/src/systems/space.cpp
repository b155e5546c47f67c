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

#include "ergo/systems/space.hpp"

#include "ergo/core/errors.hpp"

namespace ergo {

namespace {

Rational expectation(const std::vector<Rational>& probs, const std::vector<Rational>& u, const std::vector<Rational>& v) {
    Rational s = 0;
    for (std::size_t a = 0; a < probs.size(); ++a) s += probs[a] * u[a] * v[a];
    return s;
}

Rational abs_rational(const Rational& r) { return r < 0 ? Rational(-r) : r; }

}  // namespace

AlphabetBasis::AlphabetBasis(std::vector<Rational> probabilities) : probs(std::move(probabilities)) {
    if (probs.size() < 2) throw InvalidInput("alphabet needs at least two letters");
    Rational total = 0;
    for (const auto& p : probs) {
        if (p <= 0) throw InvalidInput("letter probabilities must be positive, got " + to_string(p));
        total += p;
    }
    if (total != 1) throw InvalidInput("letter probabilities sum to " + to_string(total) + ", not 1");
    const std::size_t n = probs.size();
    phi.push_back(std::vector<Rational>(n, Rational(1)));
    norms.push_back(1);
    for (std::size_t a = 0; a + 1 < n; ++a) {
        std::vector<Rational> v(n, Rational(0));
        v[a] = 1;
        const std::vector<Rational> e = v;
        for (std::size_t j = 0; j < phi.size(); ++j) {
            const Rational c = expectation(probs, e, phi[j]) / norms[j];
            for (std::size_t b = 0; b < n; ++b) v[b] -= c * phi[j][b];
        }
        norms.push_back(expectation(probs, v, v));
        phi.push_back(std::move(v));
    }
    product.assign(n, std::vector<std::vector<Rational>>(n, std::vector<Rational>(n, Rational(0))));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::vector<Rational> w(n);
            for (std::size_t a = 0; a < n; ++a) w[a] = phi[i][a] * phi[j][a];
            for (std::size_t l = 0; l < n; ++l) product[i][j][l] = expectation(probs, w, phi[l]) / norms[l];
        }
    }
    for (const auto& f : phi) {
        Rational m = 0;
        for (const auto& x : f) m = std::max(m, abs_rational(x));
        sup.push_back(m);
    }
}

std::vector<Rational> AlphabetBasis::indicator(std::size_t a) const {
    if (a >= size()) throw InvalidInput("letter " + std::to_string(a) + " outside the alphabet");
    std::vector<Rational> c(size());
    for (std::size_t l = 0; l < size(); ++l) c[l] = probs[a] * phi[l][a] / norms[l];
    return c;
}

std::shared_ptr<const Space> Space::finite(std::vector<Rational> weights) {
    if (weights.empty()) throw InvalidInput("finite space needs at least one atom");
    Rational total = 0;
    for (const auto& w : weights) {
        if (w < 0) throw InvalidInput("atom weights must be nonnegative, got " + to_string(w));
        total += w;
    }
    if (total != 1) throw InvalidInput("atom weights sum to " + to_string(total) + ", not 1");
    std::shared_ptr<Space> s(new Space(SpaceKind::Finite, GroupDescriptor::integer_line()));
    s->weights_ = std::move(weights);
    return s;
}

std::shared_ptr<const Space> Space::torus(std::size_t dimension) {
    if (dimension < 1) throw InvalidInput("torus dimension must be at least 1");
    std::shared_ptr<Space> s(new Space(SpaceKind::Torus, GroupDescriptor::integer_line()));
    s->dimension_ = dimension;
    return s;
}

std::shared_ptr<const Space> Space::bernoulli(GroupDescriptor group, std::vector<Rational> probs) {
    std::shared_ptr<Space> s(new Space(SpaceKind::Bernoulli, std::move(group)));
    s->basis_ = std::make_shared<const AlphabetBasis>(std::move(probs));
    return s;
}

const AlphabetBasis& Space::basis() const {
    if (!basis_) throw CapabilityError("only Bernoulli spaces have an alphabet basis");
    return *basis_;
}

}  // namespace ergo
