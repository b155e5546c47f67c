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

#include "ergo/core/rational.hpp"

#include <cctype>

#include "ergo/core/errors.hpp"

namespace ergo {

namespace {

Integer parse_integer(std::string_view text, std::string_view whole) {
    if (text.empty()) throw ParseError("empty integer in '" + std::string(whole) + "'");
    std::size_t i = 0;
    bool negative = false;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        i = 1;
    }
    if (i == text.size()) throw ParseError("bad integer '" + std::string(whole) + "'");
    Integer value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError("bad integer '" + std::string(whole) + "'");
        value = value * 10 + (text[i] - '0');
    }
    return negative ? Integer(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
    Integer num = parse_integer(text.substr(0, slash), text);
    Integer den = parse_integer(text.substr(slash + 1), text);
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string to_string(const Integer& n) { return n.str(); }

std::string to_string(const Rational& r) {
    const Integer den = denominator_of(r);
    if (den == 1) return numerator_of(r).str();
    return numerator_of(r).str() + "/" + den.str();
}

Integer floor(const Rational& r) {
    const Integer num = numerator_of(r);
    const Integer den = denominator_of(r);
    Integer q = num / den;
    if (num < 0 && q * den != num) q -= 1;
    return q;
}

Rational frac(const Rational& r) { return r - Rational(floor(r)); }

long double to_long_double(const Rational& r) { return r.convert_to<long double>(); }

std::int64_t to_int64(const Integer& n) {
    if (n > Integer(INT64_MAX) || n < Integer(INT64_MIN)) throw InvalidInput("integer " + n.str() + " exceeds 64 bits");
    return n.convert_to<std::int64_t>();
}

}  // namespace ergo
