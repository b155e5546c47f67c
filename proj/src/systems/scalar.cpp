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

#include "ergo/systems/scalar.hpp"

#include <cmath>
#include <numbers>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "ergo/core/errors.hpp"
#include "ergo/core/text_util.hpp"

namespace ergo {

namespace {

bool compatible(const CyclotomicRational& a, const CyclotomicRational& b) {
    return a.conductor() == b.conductor() || a.conductor() == 1 || b.conductor() == 1;
}

std::complex<double> to_double(const CyclotomicRational& v) {
    const auto z = v.to_complex();
    return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

bool denominator_is_exact(const Integer& q) {
    if (q == 1 || q == 2) return true;
    if (q > Integer(std::int64_t{1} << 20)) return false;
    return is_odd_prime(q.convert_to<std::int64_t>());
}

}  // namespace

Scalar::Scalar(const Rational& r) : exact_(CyclotomicRational::constant(1, r)), approx_(static_cast<double>(to_long_double(r)), 0.0) {}

Scalar::Scalar(const CyclotomicRational& v) : exact_(v), approx_(to_double(v)) {}

Scalar Scalar::unit(const Rational& angle) {
    const Rational a = frac(angle);
    const Integer q = denominator_of(a);
    const std::int64_t num = to_int64(numerator_of(a));
    if (denominator_is_exact(q)) {
        const std::int64_t qi = q.convert_to<std::int64_t>();
        return Scalar(to_rational(CharValue{num, qi}.to_cyclotomic()));
    }
    if (q < Integer(INT64_MAX)) return Scalar(CharValue{num, q.convert_to<std::int64_t>()}.to_complex());
    const long double t = 2.0L * std::numbers::pi_v<long double> * to_long_double(a);
    return Scalar(std::complex<double>(static_cast<double>(std::cos(t)), static_cast<double>(std::sin(t))));
}

Scalar Scalar::unit(const Angle& angle) {
    if (angle.is_rational()) return unit(angle.rational_part());
    const long double t = 2.0L * std::numbers::pi_v<long double> * angle.value();
    return Scalar(std::complex<double>(static_cast<double>(std::cos(t)), static_cast<double>(std::sin(t))));
}

Scalar Scalar::unit(const CharValue& v) { return unit(v.angle()); }

std::optional<int> Scalar::exact_real_sign() const {
    if (!exact_) return std::nullopt;
    const auto& v = *exact_;
    if (v.is_rational()) {
        const auto& r = v.rational_part();
        return r > 0 ? 1 : (r < 0 ? -1 : 0);
    }
    if (!(v == v.conj())) return std::nullopt;
    const long double re = v.to_complex().real();
    const long double bound = v.coefficient_norm() * static_cast<long double>(v.conductor()) * 1e-16L;
    if (std::fabs(re) > bound) return re > 0 ? 1 : -1;
    using Big = boost::multiprecision::cpp_bin_float_50;
    Big acc = 0;
    const Big two_pi = 2 * boost::math::constants::pi<Big>();
    const auto& c = v.coefficients();
    for (std::size_t k = 0; k < c.size(); ++k) {
        if (c[k] == 0) continue;
        const Big coeff = Big(numerator_of(c[k])) / Big(denominator_of(c[k]));
        acc += coeff * cos(two_pi * k / static_cast<long long>(c.size()));
    }
    return acc > 0 ? 1 : -1;
}

Scalar Scalar::conj() const {
    if (exact_) return Scalar(exact_->conj());
    return Scalar(std::conj(approx_));
}

Scalar Scalar::norm_sq() const {
    if (exact_) return Scalar(*exact_ * exact_->conj());
    return Scalar(std::complex<double>(std::norm(approx_), 0.0));
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (exact_ && o.exact_ && compatible(*exact_, *o.exact_)) {
        *exact_ += *o.exact_;
        approx_ = to_double(*exact_);
    } else {
        exact_.reset();
        approx_ += o.approx_;
    }
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
    if (exact_ && o.exact_ && compatible(*exact_, *o.exact_)) {
        *exact_ -= *o.exact_;
        approx_ = to_double(*exact_);
    } else {
        exact_.reset();
        approx_ -= o.approx_;
    }
    return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
    if (exact_ && o.exact_ && compatible(*exact_, *o.exact_)) {
        *exact_ *= *o.exact_;
        approx_ = to_double(*exact_);
    } else {
        exact_.reset();
        approx_ *= o.approx_;
    }
    return *this;
}

Scalar& Scalar::operator/=(const Rational& r) {
    if (r == 0) throw InvalidInput("division by zero");
    if (exact_) {
        *exact_ /= r;
        approx_ = to_double(*exact_);
    } else {
        approx_ /= static_cast<double>(to_long_double(r));
    }
    return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.exact_ && b.exact_) {
        if (compatible(*a.exact_, *b.exact_)) return *a.exact_ == *b.exact_;
        return a.exact_->is_zero() && b.exact_->is_zero();
    }
    return a.approx_ == b.approx_;
}

std::string Scalar::to_text() const {
    if (exact_) {
        if (exact_->is_rational()) return to_string(exact_->rational_part());
        return exact_->to_text();
    }
    return "(" + text::format_double(approx_.real()) + "," + text::format_double(approx_.imag()) + ")";
}

void ScalarSum::add_float(std::complex<double> v) {
    auto neumaier = [](double& sum, double& comp, double x) {
        const double t = sum + x;
        if (std::fabs(sum) >= std::fabs(x))
            comp += (sum - t) + x;
        else
            comp += (x - t) + sum;
        sum = t;
    };
    neumaier(re_, re_c_, v.real());
    neumaier(im_, im_c_, v.imag());
}

void ScalarSum::add(const Scalar& s) {
    if (exact_ && s.is_exact() && compatible(*exact_, *s.exact())) {
        *exact_ += *s.exact();
        return;
    }
    if (exact_) {
        add_float(to_double(*exact_));
        exact_.reset();
    }
    add_float(s.value());
}

void ScalarSum::merge(const ScalarSum& other) {
    if (exact_ && other.exact_ && compatible(*exact_, *other.exact_)) {
        *exact_ += *other.exact_;
        return;
    }
    if (exact_) {
        add_float(to_double(*exact_));
        exact_.reset();
    }
    if (other.exact_) {
        add_float(to_double(*other.exact_));
    } else {
        add_float({other.re_, other.im_});
        add_float({other.re_c_, other.im_c_});
    }
}

Scalar ScalarSum::result() const {
    if (exact_) return Scalar(*exact_);
    return Scalar(std::complex<double>(re_ + re_c_, im_ + im_c_));
}

}  // namespace ergo
