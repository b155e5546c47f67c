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

#include "ergo/group/character.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "ergo/core/errors.hpp"

namespace ergo {

std::complex<double> CharValue::to_complex() const {
    if (exponent == 0) return {1.0, 0.0};
    // quarter turns are returned exactly
    if (2 * exponent == modulus) return {-1.0, 0.0};
    if (4 * exponent == modulus) return {0.0, 1.0};
    if (4 * exponent == 3 * modulus) return {0.0, -1.0};
    const long double a = 2.0L * std::numbers::pi_v<long double> * static_cast<long double>(exponent) / static_cast<long double>(modulus);
    return {static_cast<double>(std::cos(a)), static_cast<double>(std::sin(a))};
}

CyclotomicValue CharValue::to_cyclotomic() const {
    const std::int64_t d = std::gcd(exponent, modulus);
    const std::int64_t k = exponent / d, q = modulus / d;
    if (q == 1) return CyclotomicValue::constant(1, 1);
    if (q == 2) return CyclotomicValue::constant(1, -1);
    if (!is_odd_prime(q)) throw CapabilityError("e(" + std::to_string(k) + "/" + std::to_string(q) + ") has no exact representation here");
    return CyclotomicValue::monomial(q, k);
}

Character Character::trivial(const GroupDescriptor& desc) {
    Character c(desc);
    c.finish();
    return c;
}

Character Character::residues(const GroupDescriptor& desc, std::vector<std::int64_t> y) {
    if (!desc.is_torsion()) throw InvalidInput("residue characters need a p-torsion group, got " + kind_name(desc.kind()));
    if (desc.is_finite_rank() && y.size() > desc.rank()) throw InvalidInput("character has more coordinates than the group");
    Character c(desc);
    for (auto& v : y) v = mod_floor(v, desc.prime());
    while (!y.empty() && y.back() == 0) y.pop_back();
    c.y_ = std::move(y);
    c.finish();
    return c;
}

Character Character::angles(const GroupDescriptor& desc, std::vector<Rational> theta, Rational tail) {
    if (desc.is_torsion()) throw InvalidInput("angle characters need an integer group, got " + kind_name(desc.kind()));
    if (desc.is_finite_rank() && theta.size() > desc.rank()) throw InvalidInput("character has more coordinates than the group");
    if (tail != 0 && desc.kind() != GroupKind::FreeAbelianDirectSum) throw InvalidInput("only free_sum characters carry a tail angle");
    Character c(desc);
    for (auto& t : theta) t = frac(t);
    c.tail_ = frac(tail);
    while (!theta.empty() && theta.back() == c.tail_) theta.pop_back();
    c.theta_ = std::move(theta);
    c.finish();
    return c;
}

void Character::finish() {
    if (desc_.is_torsion()) {
        q_ = y_.empty() ? 1 : desc_.prime();
        weights_ = y_;
        return;
    }
    Integer q = denominator_of(tail_);
    for (const auto& t : theta_) q = boost::multiprecision::lcm(q, denominator_of(t));
    if (q >= Integer(std::int64_t{1} << 31)) throw InvalidInput("character angles need a common denominator below 2^31");
    q_ = q.convert_to<std::int64_t>();
    for (const auto& t : theta_) weights_.push_back(to_int64(numerator_of(t * q)));
    tail_weight_ = to_int64(numerator_of(tail_ * q));
}

CharValue Character::eval(const GroupElement& g) const {
    desc_.validate(g);
    if (q_ == 1) return {0, 1};
    std::int64_t acc = 0;
    const auto& c = g.coords();
    for (std::size_t i = 0; i < c.size(); ++i) {
        const std::int64_t w = i < weights_.size() ? weights_[i] : tail_weight_;
        if (w == 0) continue;
        acc = (acc + mod_floor(c[i], q_) * w) % q_;
    }
    return {acc, q_};
}

CharValue char_eval(const Character& chi, const GroupElement& g) { return chi.eval(g); }

}  // namespace ergo
