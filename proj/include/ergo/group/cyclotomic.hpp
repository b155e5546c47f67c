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

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "ergo/core/errors.hpp"
#include "ergo/core/rational.hpp"

namespace ergo {

/// An element sum_k c_k zeta_p^k of Q(zeta_p) (or Z[zeta_p]) for an odd prime
/// p, or of Q itself when the conductor is 1.
///
/// Canonical form keeps c_{p-1} = 0, using 1 + zeta + ... + zeta^{p-1} = 0.
/// Since {1, zeta, ..., zeta^{p-2}} is a basis, two values are equal iff their
/// canonical coefficients agree, and a value is zero iff they all vanish.
template <class T>
class BasicCyclotomic {
   public:
    BasicCyclotomic() : p_(1), c_{T(0)} {}

    explicit BasicCyclotomic(std::int64_t p) : p_(p), c_(static_cast<std::size_t>(p), T(0)) { check_conductor(p); }

    BasicCyclotomic(std::int64_t p, std::vector<T> coefficients) : p_(p), c_(std::move(coefficients)) {
        check_conductor(p);
        if (c_.size() != static_cast<std::size_t>(p))
            throw InvalidInput("cyclotomic value needs " + std::to_string(p) + " coefficients");
        canonicalize();
    }

    /// zeta_p^k (k taken mod p).
    static BasicCyclotomic monomial(std::int64_t p, std::int64_t k) {
        BasicCyclotomic v(p);
        v.c_[static_cast<std::size_t>(mod(k, p))] = T(1);
        v.canonicalize();
        return v;
    }

    static BasicCyclotomic constant(std::int64_t p, T value) {
        BasicCyclotomic v(p);
        v.c_[0] = std::move(value);
        v.canonicalize();
        return v;
    }

    std::int64_t conductor() const noexcept { return p_; }
    const std::vector<T>& coefficients() const noexcept { return c_; }

    bool is_zero() const {
        for (const auto& x : c_)
            if (x != T(0)) return false;
        return true;
    }

    /// True when the value lies in the base ring (only c_0 may be nonzero).
    bool is_rational() const {
        for (std::size_t k = 1; k < c_.size(); ++k)
            if (c_[k] != T(0)) return false;
        return true;
    }

    const T& rational_part() const { return c_[0]; }

    /// Value lifted into Q(zeta_p); only conductor 1 can be lifted.
    BasicCyclotomic lifted(std::int64_t p) const {
        if (p == p_) return *this;
        if (p_ != 1) throw InvalidInput("cannot mix cyclotomic conductors " + std::to_string(p_) + " and " + std::to_string(p));
        return constant(p, c_[0]);
    }

    BasicCyclotomic conj() const {
        if (p_ == 1) return *this;
        BasicCyclotomic out(p_);
        for (std::int64_t k = 0; k < p_; ++k) out.c_[static_cast<std::size_t>(mod(-k, p_))] = c_[static_cast<std::size_t>(k)];
        out.canonicalize();
        return out;
    }

    std::complex<long double> to_complex() const {
        if (p_ == 1) return {to_ld(c_[0]), 0.0L};
        long double re = 0.0L;
        long double im = 0.0L;
        const long double two_pi = 2.0L * std::numbers::pi_v<long double>;
        for (std::int64_t k = 0; k < p_; ++k) {
            const auto& x = c_[static_cast<std::size_t>(k)];
            if (x == T(0)) continue;
            const long double v = to_ld(x);
            const long double a = two_pi * static_cast<long double>(k) / static_cast<long double>(p_);
            re += v * std::cos(a);
            im += v * std::sin(a);
        }
        return {re, im};
    }

    /// Sum of |c_k|, a bound on |to_complex()|.
    long double coefficient_norm() const {
        long double s = 0.0L;
        for (const auto& x : c_) s += std::fabs(to_ld(x));
        return s;
    }

    BasicCyclotomic& operator+=(const BasicCyclotomic& rhs) {
        unify(rhs);
        const auto& r = rhs.p_ == p_ ? rhs.c_ : rhs.lifted(p_).c_;
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += r[k];
        canonicalize();
        return *this;
    }

    BasicCyclotomic& operator-=(const BasicCyclotomic& rhs) {
        unify(rhs);
        const auto& r = rhs.p_ == p_ ? rhs.c_ : rhs.lifted(p_).c_;
        for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= r[k];
        canonicalize();
        return *this;
    }

    BasicCyclotomic& operator*=(const BasicCyclotomic& rhs) {
        if (rhs.p_ == 1) return *this *= rhs.c_[0];
        if (p_ == 1) {
            T s = c_[0];
            *this = rhs;
            return *this *= s;
        }
        if (rhs.p_ != p_)
            throw InvalidInput("cannot mix cyclotomic conductors " + std::to_string(p_) + " and " + std::to_string(rhs.p_));
        std::vector<T> out(c_.size(), T(0));
        const std::size_t p = c_.size();
        for (std::size_t i = 0; i < p; ++i) {
            if (c_[i] == T(0)) continue;
            for (std::size_t j = 0; j < p; ++j) {
                if (rhs.c_[j] == T(0)) continue;
                std::size_t k = i + j;
                if (k >= p) k -= p;
                out[k] += c_[i] * rhs.c_[j];
            }
        }
        c_ = std::move(out);
        canonicalize();
        return *this;
    }

    BasicCyclotomic& operator*=(const T& s) {
        for (auto& x : c_) x *= s;
        return *this;
    }

    BasicCyclotomic& operator/=(const T& s) {
        for (auto& x : c_) x /= s;
        return *this;
    }

    friend BasicCyclotomic operator+(BasicCyclotomic a, const BasicCyclotomic& b) { return a += b; }
    friend BasicCyclotomic operator-(BasicCyclotomic a, const BasicCyclotomic& b) { return a -= b; }
    friend BasicCyclotomic operator*(BasicCyclotomic a, const BasicCyclotomic& b) { return a *= b; }
    friend BasicCyclotomic operator*(BasicCyclotomic a, const T& s) { return a *= s; }
    friend BasicCyclotomic operator/(BasicCyclotomic a, const T& s) { return a /= s; }
    friend BasicCyclotomic operator-(BasicCyclotomic a) {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    friend bool operator==(const BasicCyclotomic& a, const BasicCyclotomic& b) {
        if (a.p_ == b.p_) return a.c_ == b.c_;
        if (a.p_ == 1) return b.is_rational() && b.c_[0] == a.c_[0];
        if (b.p_ == 1) return a.is_rational() && a.c_[0] == b.c_[0];
        return a.is_zero() && b.is_zero();
    }

    /// "p:[c0,c1,...]" with the canonical coefficients.
    std::string to_text() const {
        std::string out = std::to_string(p_) + ":[";
        for (std::size_t k = 0; k < c_.size(); ++k) {
            if (k) out += ",";
            out += coefficient_text(c_[k]);
        }
        return out + "]";
    }

   private:
    static std::int64_t mod(std::int64_t a, std::int64_t m) {
        const std::int64_t r = a % m;
        return r < 0 ? r + m : r;
    }

    static void check_conductor(std::int64_t p) {
        if (p < 1) throw InvalidInput("cyclotomic conductor must be positive");
        if (p != 1) {
            if (p % 2 == 0) throw InvalidInput("cyclotomic conductor must be 1 or an odd prime");
            for (std::int64_t d = 3; d * d <= p; d += 2)
                if (p % d == 0) throw InvalidInput("cyclotomic conductor must be 1 or an odd prime");
        }
    }

    static long double to_ld(const T& x) {
        if constexpr (std::is_arithmetic_v<T>)
            return static_cast<long double>(x);
        else
            return x.template convert_to<long double>();
    }

    static std::string coefficient_text(const T& x) {
        if constexpr (std::is_arithmetic_v<T>)
            return std::to_string(x);
        else
            return to_string(x);
    }

    void unify(const BasicCyclotomic& rhs) {
        if (rhs.p_ == p_ || rhs.p_ == 1) return;
        if (p_ == 1) {
            *this = lifted(rhs.p_);
            return;
        }
        throw InvalidInput("cannot mix cyclotomic conductors " + std::to_string(p_) + " and " + std::to_string(rhs.p_));
    }

    void canonicalize() {
        if (p_ == 1) return;
        const T top = c_.back();
        if (top == T(0)) return;
        for (auto& x : c_) x -= top;
    }

    std::int64_t p_;
    std::vector<T> c_;
};

using CyclotomicValue = BasicCyclotomic<std::int64_t>;
using CyclotomicRational = BasicCyclotomic<Rational>;

inline CyclotomicRational to_rational(const CyclotomicValue& v) {
    std::vector<Rational> c(v.coefficients().begin(), v.coefficients().end());
    if (v.conductor() == 1) return CyclotomicRational::constant(1, c[0]);
    return CyclotomicRational(v.conductor(), std::move(c));
}

}  // namespace ergo
