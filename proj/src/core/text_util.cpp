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

#include "ergo/core/text_util.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <cstdlib>

#include "ergo/core/errors.hpp"

namespace ergo::text {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

namespace {

int depth_delta(char c) {
    switch (c) {
        case '(':
        case '[':
        case '{':
            return 1;
        case ')':
        case ']':
        case '}':
            return -1;
        default:
            return 0;
    }
}

}  // namespace

std::vector<std::string> split_top_level(std::string_view s, char sep) {
    std::vector<std::string> out;
    int depth = 0;
    std::size_t start = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        depth += depth_delta(s[i]);
        if (depth < 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
        if (depth == 0 && s[i] == sep) {
            out.emplace_back(trim(s.substr(start, i - start)));
            start = i + 1;
        }
    }
    if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
    out.emplace_back(trim(s.substr(start)));
    return out;
}

std::vector<std::string> split_words(std::string_view s) {
    std::vector<std::string> out;
    int depth = 0;
    std::string current;
    for (char c : s) {
        depth += depth_delta(c);
        if (depth < 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
        if (depth == 0 && std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) out.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    if (depth != 0) throw ParseError("unbalanced brackets in '" + std::string(s) + "'");
    if (!current.empty()) out.push_back(std::move(current));
    return out;
}

std::vector<Field> parse_fields(std::string_view s) {
    std::vector<Field> out;
    for (const auto& word : split_words(s)) {
        const auto eq = word.find('=');
        const auto bracket = word.find_first_of("([{");
        if (eq != std::string::npos && (bracket == std::string::npos || eq < bracket)) {
            out.push_back({word.substr(0, eq), word.substr(eq + 1)});
        } else {
            out.push_back({"", word});
        }
    }
    return out;
}

std::vector<std::string> parse_list(std::string_view s) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("expected a bracketed list, got '" + std::string(s) + "'");
    const auto inner = trim(s.substr(1, s.size() - 2));
    if (inner.empty()) return {};
    return split_top_level(inner, ',');
}

std::vector<std::vector<std::string>> parse_rows(std::string_view s) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '[' || s.back() != ']')
        throw ParseError("expected a bracketed table, got '" + std::string(s) + "'");
    const auto inner = trim(s.substr(1, s.size() - 2));
    std::vector<std::vector<std::string>> rows;
    if (inner.empty()) return rows;
    for (const auto& row : split_top_level(inner, ';')) {
        if (row.empty()) {
            rows.emplace_back();
            continue;
        }
        rows.push_back(split_top_level(row, ','));
    }
    return rows;
}

std::string strip_parens(std::string_view s) {
    s = trim(s);
    if (s.size() >= 2 && s.front() == '(' && s.back() == ')') return std::string(trim(s.substr(1, s.size() - 2)));
    return std::string(s);
}

std::int64_t parse_int64(std::string_view s) {
    s = trim(s);
    std::int64_t value = 0;
    const char* first = s.data();
    if (!s.empty() && s.front() == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw ParseError("expected an integer, got '" + std::string(s) + "'");
    return value;
}

double parse_double(std::string_view s) {
    const std::string copy(trim(s));
    char* end = nullptr;
    const double value = std::strtod(copy.c_str(), &end);
    if (copy.empty() || end != copy.c_str() + copy.size())
        throw ParseError("expected a number, got '" + copy + "'");
    return value;
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) out += sep;
        out += parts[i];
    }
    return out;
}

std::string format_double(double x) {
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    if (ec != std::errc()) return "nan";
    return std::string(buf, ptr);
}

std::string format_sci(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits, x);
    return buf;
}

}  // namespace ergo::text
