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

#include "ergo/group/finite_field.hpp"

#include <algorithm>

#include "ergo/core/errors.hpp"

namespace ergo {

namespace poly {

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t p) {
    // p < 2^31, so reduced operands multiply without overflow
    return (mod_floor(a, p) * mod_floor(b, p)) % p;
}

std::int64_t powmod(std::int64_t a, std::uint64_t e, std::int64_t p) {
    std::int64_t result = 1 % p;
    a = mod_floor(a, p);
    while (e) {
        if (e & 1) result = mulmod(result, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return result;
}

std::int64_t inverse(std::int64_t a, std::int64_t p) {
    a = mod_floor(a, p);
    if (a == 0) throw InvalidInput("zero has no inverse mod " + std::to_string(p));
    return powmod(a, static_cast<std::uint64_t>(p - 2), p);
}

void trim(PolyFp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const PolyFp& a) { return static_cast<int>(a.size()) - 1; }

PolyFp add(const PolyFp& a, const PolyFp& b, std::int64_t p) {
    PolyFp out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::int64_t s = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        out[i] = s % p;
    }
    trim(out);
    return out;
}

PolyFp sub(const PolyFp& a, const PolyFp& b, std::int64_t p) {
    PolyFp out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::int64_t s = (i < a.size() ? a[i] : 0) - (i < b.size() ? b[i] : 0);
        out[i] = mod_floor(s, p);
    }
    trim(out);
    return out;
}

PolyFp mul(const PolyFp& a, const PolyFp& b, std::int64_t p) {
    if (a.empty() || b.empty()) return {};
    PolyFp out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = (out[i + j] + mulmod(a[i], b[j], p)) % p;
    }
    trim(out);
    return out;
}

PolyFp rem(PolyFp a, const PolyFp& b, std::int64_t p) {
    if (b.empty()) throw InvalidInput("polynomial division by zero");
    trim(a);
    const std::int64_t lead_inv = inverse(b.back(), p);
    while (a.size() >= b.size()) {
        const std::int64_t factor = mulmod(a.back(), lead_inv, p);
        const std::size_t shift = a.size() - b.size();
        for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = mod_floor(a[shift + j] - mulmod(factor, b[j], p), p);
        trim(a);
    }
    return a;
}

PolyFp gcd(PolyFp a, PolyFp b, std::int64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        PolyFp r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const std::int64_t inv = inverse(a.back(), p);
        for (auto& x : a) x = mulmod(x, inv, p);
    }
    return a;
}

PolyFp powmod(PolyFp base, std::uint64_t e, const PolyFp& m, std::int64_t p) {
    PolyFp result = rem({1}, m, p);
    base = rem(std::move(base), m, p);
    while (e) {
        if (e & 1) result = rem(mul(result, base, p), m, p);
        base = rem(mul(base, base, p), m, p);
        e >>= 1;
    }
    return result;
}

PolyFp derivative(const PolyFp& a, std::int64_t p) {
    if (a.size() <= 1) return {};
    PolyFp out(a.size() - 1, 0);
    for (std::size_t i = 1; i < a.size(); ++i) out[i - 1] = mulmod(a[i], static_cast<std::int64_t>(i) % p, p);
    trim(out);
    return out;
}

}  // namespace poly

bool is_irreducible(const PolyFp& monic, std::int64_t p) {
    const int k = poly::degree(monic);
    if (k < 1 || monic.back() != 1) throw InvalidInput("irreducibility test needs a monic nonconstant polynomial");
    if (k == 1) return true;
    const PolyFp t{0, 1};
    PolyFp x = t;
    for (int i = 1; i <= k / 2; ++i) {
        x = poly::powmod(x, static_cast<std::uint64_t>(p), monic, p);
        if (poly::degree(poly::gcd(monic, poly::sub(x, t, p), p)) != 0) return false;
    }
    return true;
}

PolyFp first_irreducible(std::int64_t p, std::int64_t k) {
    if (!is_odd_prime(p)) throw InvalidInput("p must be an odd prime, got " + std::to_string(p));
    if (k < 1 || k > 16) throw InvalidInput("field degree must be in [1, 16], got " + std::to_string(k));
    const auto n = static_cast<std::size_t>(k);
    // digits[0] = c_0 is the most significant position of the odometer
    std::vector<std::int64_t> digits(n, 0);
    while (true) {
        PolyFp f(digits.begin(), digits.end());
        f.push_back(1);
        if (is_irreducible(f, p)) return f;
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (++digits[i] < p) break;
            digits[i] = 0;
            if (i == 0) throw Error("no irreducible polynomial found");
        }
    }
}

GroupDescriptor ff_make(std::int64_t p, std::int64_t k) { return GroupDescriptor::finite_field(p, k); }

namespace {

void require_field(const GroupDescriptor& f) {
    if (f.kind() != GroupKind::FiniteFieldLevel) throw InvalidInput("finite field operation on " + kind_name(f.kind()));
}

}  // namespace

GroupElement ff_add(const GroupDescriptor& f, const GroupElement& x, const GroupElement& y) {
    require_field(f);
    return f.combine(x, y);
}

GroupElement ff_mul(const GroupDescriptor& f, const GroupElement& x, const GroupElement& y) {
    require_field(f);
    f.validate(x);
    f.validate(y);
    return GroupElement(poly::rem(poly::mul(x.coords(), y.coords(), f.prime()), f.modulus(), f.prime()));
}

GroupElement ff_scale(const GroupDescriptor& f, std::int64_t c, const GroupElement& x) {
    require_field(f);
    return f.scale(x, c);
}

GroupElement ff_pow(const GroupDescriptor& f, GroupElement x, std::uint64_t e) {
    require_field(f);
    f.validate(x);
    return GroupElement(poly::powmod(x.coords(), e, f.modulus(), f.prime()));
}

GroupElement ff_inv(const GroupDescriptor& f, const GroupElement& x) {
    require_field(f);
    if (x.is_zero()) throw InvalidInput("zero has no multiplicative inverse");
    std::uint64_t order = 1;
    for (std::int64_t i = 0; i < f.degree(); ++i) {
        if (__builtin_mul_overflow(order, static_cast<std::uint64_t>(f.prime()), &order))
            throw InvalidInput("field too large for inversion by exponentiation");
    }
    return ff_pow(f, x, order - 2);
}

}  // namespace ergo
