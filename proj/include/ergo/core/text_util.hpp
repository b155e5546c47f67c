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

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ergo::text {

std::string_view trim(std::string_view s);

/// Splits on `sep` outside of (), [] and {}.
std::vector<std::string> split_top_level(std::string_view s, char sep);

/// Splits on runs of whitespace outside of brackets.
std::vector<std::string> split_words(std::string_view s);

/// A token `key=value`; a bare token has an empty key.
struct Field {
    std::string key;
    std::string value;
};
std::vector<Field> parse_fields(std::string_view s);

/// "[a,b,c]" -> {"a","b","c"}; "[]" -> {}.
std::vector<std::string> parse_list(std::string_view s);
/// "[a,b;c,d]" -> {{"a","b"},{"c","d"}}.
std::vector<std::vector<std::string>> parse_rows(std::string_view s);
/// "(x)" -> "x"; anything else is returned trimmed.
std::string strip_parens(std::string_view s);

std::int64_t parse_int64(std::string_view s);
double parse_double(std::string_view s);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

/// Shortest round-trip decimal for a double; fixed across runs.
std::string format_double(double x);
/// printf-style "%.{digits}e" formatting.
std::string format_sci(double x, int digits = 6);

}  // namespace ergo::text
