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
#include <optional>
#include <string>

#include "ergo/core/rational.hpp"
#include "ergo/group/character.hpp"
#include "ergo/group/cyclotomic.hpp"
#include "ergo/systems/angle.hpp"

namespace ergo {

/// A complex number that stays exact (in Q(zeta_p)) as long as every input
/// was exact, and falls back to double otherwise.
class Scalar {
   public:
    Scalar() : exact_(CyclotomicRational()), approx_(0.0) {}
    Scalar(int v) : Scalar(Rational(v)) {}
    Scalar(const Rational& r);
    explicit Scalar(const CyclotomicRational& v);
    explicit Scalar(std::complex<double> v) : approx_(v) {}

    static Scalar approximate(std::complex<double> v) { return Scalar(v); }
    /// e(angle): exact when the reduced denominator is 1, 2 or an odd prime.
    static Scalar unit(const Rational& angle);
    static Scalar unit(const Angle& angle);
    static Scalar unit(const CharValue& v);

    bool is_exact() const noexcept { return exact_.has_value(); }
    const std::optional<CyclotomicRational>& exact() const noexcept { return exact_; }
    std::complex<double> value() const noexcept { return approx_; }
    double abs() const { return std::abs(approx_); }

    /// Exact zero; false for any inexact value.
    bool is_exact_zero() const { return exact_ && exact_->is_zero(); }
    /// Sign of an exact real value, nullopt for inexact or non-real values.
    std::optional<int> exact_real_sign() const;

    Scalar conj() const;
    /// |z|^2, exact when z is.
    Scalar norm_sq() const;
    Scalar inexact() const { return Scalar(approx_); }

    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Rational& r);
    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Rational& r) { return a /= r; }
    friend Scalar operator-(const Scalar& a) { return Scalar(0) - a; }

    /// Exact equality when both sides are exact, otherwise equality of doubles.
    friend bool operator==(const Scalar& a, const Scalar& b);

    /// Exact values print as "1/3" or "p:[c0,...]"; floats as "(re,im)".
    std::string to_text() const;

   private:
    std::optional<CyclotomicRational> exact_;
    std::complex<double> approx_;
};

/// Sum of many scalars: exact while every term is exact, Neumaier-compensated
/// otherwise. Merging two sums is deterministic in argument order.
class ScalarSum {
   public:
    void add(const Scalar& s);
    void merge(const ScalarSum& other);
    Scalar result() const;
    bool is_exact() const noexcept { return exact_.has_value(); }

   private:
    void add_float(std::complex<double> v);

    std::optional<CyclotomicRational> exact_ = CyclotomicRational();
    double re_ = 0.0, re_c_ = 0.0, im_ = 0.0, im_c_ = 0.0;
};

}  // namespace ergo
