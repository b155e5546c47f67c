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

#include "ergo/group/group_text.hpp"

#include <map>

#include "ergo/core/errors.hpp"
#include "ergo/core/text_util.hpp"

namespace ergo {

namespace {

std::map<std::string, std::string> keyed(const std::vector<text::Field>& fields, std::size_t from, std::string_view context) {
    std::map<std::string, std::string> out;
    for (std::size_t i = from; i < fields.size(); ++i) {
        if (fields[i].key.empty()) throw ParseError("unexpected token '" + fields[i].value + "' in " + std::string(context));
        if (!out.emplace(fields[i].key, fields[i].value).second)
            throw ParseError("duplicate key '" + fields[i].key + "' in " + std::string(context));
    }
    return out;
}

std::string take(std::map<std::string, std::string>& kv, const std::string& key, std::string_view context) {
    auto it = kv.find(key);
    if (it == kv.end()) throw ParseError("missing '" + key + "' in " + std::string(context));
    std::string v = it->second;
    kv.erase(it);
    return v;
}

void require_empty(const std::map<std::string, std::string>& kv, std::string_view context) {
    if (!kv.empty()) throw ParseError("unknown key '" + kv.begin()->first + "' in " + std::string(context));
}

std::string ints_text(const std::vector<std::int64_t>& v) {
    std::vector<std::string> parts;
    for (auto x : v) parts.push_back(std::to_string(x));
    return "[" + text::join(parts, ",") + "]";
}

}  // namespace

std::string to_text(const GroupDescriptor& desc) {
    switch (desc.kind()) {
        case GroupKind::IntegerLine:
            return "integer_line";
        case GroupKind::IntegerLattice:
            return "lattice d=" + std::to_string(desc.dimension());
        case GroupKind::FreeAbelianDirectSum:
            return "free_sum";
        case GroupKind::PrimeDirectSum:
            return "prime_sum p=" + std::to_string(desc.prime());
        case GroupKind::PolynomialRing:
            return "poly_ring p=" + std::to_string(desc.prime());
        case GroupKind::FiniteFieldLevel:
            return "finite_field p=" + std::to_string(desc.prime()) + " k=" + std::to_string(desc.degree());
    }
    return "";
}

GroupDescriptor parse_descriptor(std::string_view input) {
    const std::string body = text::strip_parens(input);
    const auto fields = text::parse_fields(body);
    if (fields.empty() || !fields[0].key.empty()) throw ParseError("expected a group kind in '" + body + "'");
    const std::string& kind = fields[0].value;
    auto kv = keyed(fields, 1, body);
    GroupDescriptor out = GroupDescriptor::integer_line();
    if (kind == "integer_line") {
        out = GroupDescriptor::integer_line();
    } else if (kind == "lattice") {
        out = GroupDescriptor::lattice(text::parse_int64(take(kv, "d", body)));
    } else if (kind == "free_sum") {
        out = GroupDescriptor::free_sum();
    } else if (kind == "prime_sum") {
        out = GroupDescriptor::prime_sum(text::parse_int64(take(kv, "p", body)));
    } else if (kind == "poly_ring") {
        out = GroupDescriptor::poly_ring(text::parse_int64(take(kv, "p", body)));
    } else if (kind == "finite_field") {
        const auto p = text::parse_int64(take(kv, "p", body));
        const auto k = text::parse_int64(take(kv, "k", body));
        out = GroupDescriptor::finite_field(p, k);
    } else {
        throw ParseError("unknown group kind '" + kind + "'");
    }
    require_empty(kv, body);
    return out;
}

std::string to_text(const GroupElement& g) { return ints_text(g.coords()); }

GroupElement parse_element(const GroupDescriptor& desc, std::string_view input) {
    std::vector<std::int64_t> c;
    for (const auto& part : text::parse_list(input)) c.push_back(text::parse_int64(part));
    if (!c.empty() && c.back() == 0) throw ParseError("element '" + std::string(input) + "' has trailing zeros");
    GroupElement g(std::move(c));
    desc.validate(g);
    return g;
}

std::string to_text(const Character& chi) {
    if (chi.uses_residues()) return "char y=" + ints_text(chi.residue_vector());
    std::vector<std::string> parts;
    for (const auto& t : chi.angle_vector()) parts.push_back(to_string(t));
    std::string out = "char theta=[" + text::join(parts, ",") + "]";
    if (chi.tail() != 0) out += " tail=" + to_string(chi.tail());
    return out;
}

Character parse_character(const GroupDescriptor& desc, std::string_view input) {
    const std::string body(text::trim(input));
    const auto fields = text::parse_fields(body);
    if (fields.empty() || !fields[0].key.empty() || fields[0].value != "char") throw ParseError("expected 'char ...', got '" + body + "'");
    auto kv = keyed(fields, 1, body);
    Character out = Character::trivial(desc);
    if (desc.is_torsion()) {
        std::vector<std::int64_t> y;
        for (const auto& part : text::parse_list(take(kv, "y", body))) y.push_back(text::parse_int64(part));
        out = Character::residues(desc, std::move(y));
    } else {
        std::vector<Rational> theta;
        for (const auto& part : text::parse_list(take(kv, "theta", body))) theta.push_back(parse_rational(part));
        Rational tail = 0;
        if (kv.count("tail")) tail = parse_rational(take(kv, "tail", body));
        out = Character::angles(desc, std::move(theta), tail);
    }
    require_empty(kv, body);
    return out;
}

std::string to_text(const GroupSelfMap& a) {
    return std::visit(
        [](const auto& m) -> std::string {
            using M = std::decay_t<decltype(m)>;
            if constexpr (std::is_same_v<M, selfmap::Identity>) {
                return "identity";
            } else if constexpr (std::is_same_v<M, selfmap::CoordinatewisePower>) {
                return "power " + std::to_string(m.num) + (m.den == 1 ? "" : "/" + std::to_string(m.den));
            } else if constexpr (std::is_same_v<M, selfmap::RingPolynomial>) {
                std::string out = "ringpoly";
                for (const auto& c : m.coefficients) out += " " + to_text(c);
                return out;
            } else if constexpr (std::is_same_v<M, selfmap::Homomorphism>) {
                std::vector<std::string> rows;
                for (const auto& row : m.matrix) {
                    std::vector<std::string> parts;
                    for (auto x : row) parts.push_back(std::to_string(x));
                    rows.push_back(text::join(parts, ","));
                }
                return "hom [" + text::join(rows, ";") + "]";
            } else {
                std::vector<std::string> parts;
                for (const auto& inner : m.maps) parts.push_back(to_text(inner));
                return "compose " + text::join(parts, " ; ");
            }
        },
        a.variant());
}

GroupSelfMap parse_selfmap(const GroupDescriptor& desc, std::string_view input) {
    const std::string body(text::trim(input));
    const auto words = text::split_words(body);
    if (words.empty()) throw ParseError("empty self-map");
    const std::string& head = words[0];
    GroupSelfMap out;
    if (head == "identity") {
        if (words.size() != 1) throw ParseError("identity takes no arguments");
    } else if (head == "power") {
        if (words.size() != 2) throw ParseError("power takes one exponent, got '" + body + "'");
        out = GroupSelfMap::power(parse_rational(words[1]));
    } else if (head == "ringpoly") {
        std::vector<GroupElement> coeffs;
        for (std::size_t i = 1; i < words.size(); ++i) {
            std::vector<std::int64_t> c;
            for (const auto& part : text::parse_list(words[i])) c.push_back(text::parse_int64(part));
            coeffs.push_back(desc.reduce(std::move(c)));
        }
        out = GroupSelfMap::ring_polynomial(std::move(coeffs));
    } else if (head == "hom") {
        if (words.size() != 2) throw ParseError("hom takes one matrix, got '" + body + "'");
        std::vector<std::vector<std::int64_t>> matrix;
        for (const auto& row : text::parse_rows(words[1])) {
            std::vector<std::int64_t> r;
            for (const auto& x : row) r.push_back(text::parse_int64(x));
            matrix.push_back(std::move(r));
        }
        out = GroupSelfMap::homomorphism(std::move(matrix));
    } else if (head == "compose") {
        const auto rest = text::trim(std::string_view(body).substr(head.size()));
        std::vector<GroupSelfMap> maps;
        for (const auto& part : text::split_top_level(rest, ';')) maps.push_back(parse_selfmap(desc, part));
        if (maps.size() < 2) throw ParseError("compose needs at least two maps");
        out = GroupSelfMap::compose(std::move(maps));
    } else {
        throw ParseError("unknown self-map '" + head + "'");
    }
    out.check(desc);
    return out;
}

}  // namespace ergo
