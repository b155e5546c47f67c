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

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "ergo/core/rational.hpp"

namespace ergo {

/// Named irrational constants in [0, 1).
enum class AngleTag { Sqrt2m1 = 0, Sqrt3m1 = 1, Golden = 2 };
inline constexpr std::size_t kAngleTagCount = 3;

std::string tag_name(AngleTag tag);
/// sqrt(2)-1, sqrt(3)-1 and (sqrt(5)-1)/2 rounded once from sqrtl.
long double tag_value(AngleTag tag);

/// A point of R/Z of the form r + sum_j m_j * tag_j with r rational and m_j
/// integers; the rational part and the multiplicities are exact, the
/// evaluation is long double.
class Angle {
   public:
    Angle() = default;
    static Angle rational(const Rational& r);
    static Angle tag(AngleTag t, std::int64_t multiplicity = 1);

    const Rational& rational_part() const noexcept { return r_; }
    const std::array<std::int64_t, kAngleTagCount>& multiplicities() const noexcept { return m_; }
    bool is_rational() const noexcept;
    bool is_zero() const noexcept { return is_rational() && r_ == 0; }

    /// Representative in [0, 1).
    long double value() const;

    Angle operator+(const Angle& o) const;
    Angle operator-() const;
    Angle operator-(const Angle& o) const { return *this + (-o); }
    Angle scaled(std::int64_t n) const;

    friend bool operator==(const Angle&, const Angle&) = default;

   private:
    Rational r_ = 0;
    std::array<std::int64_t, kAngleTagCount> m_{};
};

/// "1/3", "sqrt2m1", "2*golden+1/5", ...
std::string to_text(const Angle& a);
Angle parse_angle(std::string_view text);

}  // namespace ergo
