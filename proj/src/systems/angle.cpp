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

#include "ergo/systems/angle.hpp"

#include <cmath>

#include "ergo/core/errors.hpp"
#include "ergo/core/text_util.hpp"

namespace ergo {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw InvalidInput("angle multiplicity overflow");
    return r;
}

/// frac(m * t) with the integer part of m split off first.
long double frac_multiple(std::int64_t m, long double t) {
    if (m == 0) return 0.0L;
    const std::int64_t hi = m / (std::int64_t{1} << 32);
    const std::int64_t lo = m - hi * (std::int64_t{1} << 32);
    long double x = static_cast<long double>(lo) * t;
    if (hi != 0) {
        const long double big = static_cast<long double>(std::int64_t{1} << 32) * t;
        long double f = big - std::floor(big);
        f = static_cast<long double>(hi) * f;
        x += f - std::floor(f);
    }
    return x - std::floor(x);
}

}  // namespace

std::string tag_name(AngleTag tag) {
    switch (tag) {
        case AngleTag::Sqrt2m1:
            return "sqrt2m1";
        case AngleTag::Sqrt3m1:
            return "sqrt3m1";
        case AngleTag::Golden:
            return "golden";
    }
    return "?";
}

long double tag_value(AngleTag tag) {
    switch (tag) {
        case AngleTag::Sqrt2m1:
            return std::sqrt(2.0L) - 1.0L;
        case AngleTag::Sqrt3m1:
            return std::sqrt(3.0L) - 1.0L;
        case AngleTag::Golden:
            return (std::sqrt(5.0L) - 1.0L) / 2.0L;
    }
    return 0.0L;
}

Angle Angle::rational(const Rational& r) {
    Angle a;
    a.r_ = frac(r);
    return a;
}

Angle Angle::tag(AngleTag t, std::int64_t multiplicity) {
    Angle a;
    a.m_[static_cast<std::size_t>(t)] = multiplicity;
    return a;
}

bool Angle::is_rational() const noexcept {
    for (auto m : m_)
        if (m != 0) return false;
    return true;
}

long double Angle::value() const {
    long double x = to_long_double(r_);
    for (std::size_t j = 0; j < kAngleTagCount; ++j) x += frac_multiple(m_[j], tag_value(static_cast<AngleTag>(j)));
    x -= std::floor(x);
    if (x >= 1.0L) x = 0.0L;
    return x;
}

Angle Angle::operator+(const Angle& o) const {
    Angle a;
    a.r_ = frac(r_ + o.r_);
    for (std::size_t j = 0; j < kAngleTagCount; ++j) {
        if (__builtin_add_overflow(m_[j], o.m_[j], &a.m_[j])) throw InvalidInput("angle multiplicity overflow");
    }
    return a;
}

Angle Angle::operator-() const {
    Angle a;
    a.r_ = frac(-r_);
    for (std::size_t j = 0; j < kAngleTagCount; ++j) a.m_[j] = -m_[j];
    return a;
}

Angle Angle::scaled(std::int64_t n) const {
    Angle a;
    a.r_ = frac(r_ * n);
    for (std::size_t j = 0; j < kAngleTagCount; ++j) a.m_[j] = checked_mul(m_[j], n);
    return a;
}

std::string to_text(const Angle& a) {
    std::vector<std::string> terms;
    for (std::size_t j = 0; j < kAngleTagCount; ++j) {
        const auto m = a.multiplicities()[j];
        if (m == 0) continue;
        const std::string name = tag_name(static_cast<AngleTag>(j));
        terms.push_back(m == 1 ? name : std::to_string(m) + "*" + name);
    }
    if (a.rational_part() != 0 || terms.empty()) terms.push_back(to_string(a.rational_part()));
    return text::join(terms, "+");
}

Angle parse_angle(std::string_view input) {
    const std::string body(text::trim(input));
    if (body.empty()) throw ParseError("empty angle");
    Angle out;
    for (const auto& term : text::split_top_level(body, '+')) {
        const auto star = term.find('*');
        const std::string name = star == std::string::npos ? term : term.substr(star + 1);
        bool is_tag = false;
        for (std::size_t j = 0; j < kAngleTagCount; ++j) {
            if (name == tag_name(static_cast<AngleTag>(j))) {
                const std::int64_t m = star == std::string::npos ? 1 : text::parse_int64(term.substr(0, star));
                out = out + Angle::tag(static_cast<AngleTag>(j), m);
                is_tag = true;
            }
        }
        if (!is_tag) {
            if (star != std::string::npos) throw ParseError("unknown angle constant '" + name + "'");
            out = out + Angle::rational(parse_rational(term));
        }
    }
    return out;
}

}  // namespace ergo
