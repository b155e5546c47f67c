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

#include "ergo/systems/system_text.hpp"

#include <map>

#include "ergo/core/errors.hpp"
#include "ergo/core/text_util.hpp"
#include "ergo/group/group_text.hpp"

namespace ergo {

namespace {

std::string rationals_text(const std::vector<Rational>& v) {
    std::vector<std::string> parts;
    for (const auto& r : v) parts.push_back(to_string(r));
    return "[" + text::join(parts, ",") + "]";
}

std::vector<Rational> parse_rationals(std::string_view s) {
    std::vector<Rational> out;
    for (const auto& part : text::parse_list(s)) out.push_back(parse_rational(part));
    return out;
}

std::string group_suffix(const GroupDescriptor& g) {
    if (g.kind() == GroupKind::IntegerLine) return "";
    return " group=(" + to_text(g) + ")";
}

}  // namespace

std::string to_text(const System& sys) {
    return std::visit(
        [&](const auto& a) -> std::string {
            using A = std::decay_t<decltype(a)>;
            if constexpr (std::is_same_v<A, action::FinitePermutation>) {
                std::vector<std::string> perms;
                for (const auto& perm : a.generators) {
                    std::vector<std::string> parts;
                    for (auto x : perm) parts.push_back(std::to_string(x));
                    perms.push_back("[" + text::join(parts, ",") + "]");
                }
                std::vector<std::string> orders;
                for (auto o : a.orders) orders.push_back(std::to_string(o));
                return "finite weights=" + rationals_text(sys.space()->weights()) + " perms=[" + text::join(perms, ",") + "] orders=[" +
                       text::join(orders, ",") + "]" + group_suffix(sys.group());
            } else if constexpr (std::is_same_v<A, action::TorusRotation>) {
                std::string alpha;
                if (a.generators.size() == 1 && a.generators[0].size() == 1) {
                    alpha = to_text(a.generators[0][0]);
                } else {
                    std::vector<std::string> rows;
                    for (const auto& gen : a.generators) {
                        std::vector<std::string> parts;
                        for (const auto& x : gen) parts.push_back(to_text(x));
                        rows.push_back(text::join(parts, ","));
                    }
                    alpha = "[" + text::join(rows, ";") + "]";
                }
                return "torus d=" + std::to_string(sys.space()->dimension()) + " alpha=" + alpha + group_suffix(sys.group());
            } else {
                return "bernoulli p=" + rationals_text(sys.space()->basis().probs) + group_suffix(sys.group());
            }
        },
        sys.action());
}

System parse_system(std::string_view input) {
    const std::string body(text::trim(input));
    const auto fields = text::parse_fields(body);
    if (fields.empty() || !fields[0].key.empty()) throw ParseError("expected a system kind in '" + body + "'");
    std::map<std::string, std::string> kv;
    for (std::size_t i = 1; i < fields.size(); ++i) {
        if (fields[i].key.empty()) throw ParseError("unexpected token '" + fields[i].value + "' in system");
        if (!kv.emplace(fields[i].key, fields[i].value).second) throw ParseError("duplicate key '" + fields[i].key + "' in system");
    }
    auto take = [&](const std::string& key) {
        auto it = kv.find(key);
        if (it == kv.end()) throw ParseError("missing '" + key + "' in system '" + body + "'");
        std::string v = it->second;
        kv.erase(it);
        return v;
    };
    GroupDescriptor group = GroupDescriptor::integer_line();
    if (kv.count("group")) group = parse_descriptor(take("group"));
    const std::string& kind = fields[0].value;
    auto finish = [&](System s) {
        if (!kv.empty()) throw ParseError("unknown key '" + kv.begin()->first + "' in system");
        return s;
    };
    if (kind == "finite") {
        auto weights = parse_rationals(take("weights"));
        std::vector<Permutation> perms;
        for (const auto& p : text::parse_list(take("perms"))) {
            Permutation perm;
            for (const auto& x : text::parse_list(p)) {
                const auto v = text::parse_int64(x);
                if (v < 0) throw ParseError("negative atom index in permutation");
                perm.push_back(static_cast<std::size_t>(v));
            }
            perms.push_back(std::move(perm));
        }
        std::vector<std::int64_t> orders;
        for (const auto& x : text::parse_list(take("orders"))) orders.push_back(text::parse_int64(x));
        return finish(System::finite(group, std::move(weights), std::move(perms), std::move(orders)));
    }
    if (kind == "torus") {
        const auto d = text::parse_int64(take("d"));
        if (d < 1) throw ParseError("torus dimension must be positive");
        const std::string alpha = take("alpha");
        std::vector<std::vector<Angle>> gens;
        if (!alpha.empty() && alpha.front() == '[') {
            for (const auto& row : text::parse_rows(alpha)) {
                std::vector<Angle> gen;
                for (const auto& x : row) gen.push_back(parse_angle(x));
                gens.push_back(std::move(gen));
            }
        } else {
            gens.push_back({parse_angle(alpha)});
        }
        return finish(System::torus(group, static_cast<std::size_t>(d), std::move(gens)));
    }
    if (kind == "bernoulli") {
        auto probs = parse_rationals(take("p"));
        return finish(System::bernoulli(group, std::move(probs)));
    }
    throw ParseError("unknown system kind '" + kind + "'");
}

}  // namespace ergo
