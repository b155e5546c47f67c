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

#include "ergo/systems/observable.hpp"

#include <algorithm>
#include <cmath>

#include "ergo/core/errors.hpp"
#include "ergo/core/text_util.hpp"
#include "ergo/group/group_text.hpp"

namespace ergo {

namespace {

template <class Map>
void add_term(Map& m, const typename Map::key_type& key, const Scalar& c) {
    auto it = m.find(key);
    if (it == m.end()) {
        if (!c.is_exact_zero()) m.emplace(key, c);
        return;
    }
    it->second += c;
    if (it->second.is_exact_zero()) m.erase(it);
}

template <class Map>
void drop_zeros(Map& m) {
    for (auto it = m.begin(); it != m.end();) {
        if (it->second.is_exact_zero())
            it = m.erase(it);
        else
            ++it;
    }
}

double rational_double(const Rational& r) { return static_cast<double>(to_long_double(r)); }

/// Sup bound of prod phi_{basis} over the sites of a word.
double word_sup(const AlphabetBasis& basis, const Word& w) {
    double s = 1.0;
    for (const auto& site : w) s *= rational_double(basis.sup[site.basis]);
    return s;
}

}  // namespace

Observable Observable::constant(const SpaceHandle& space, const Scalar& c) {
    switch (space->kind()) {
        case SpaceKind::Finite:
            return Observable(space, FiniteData(space->atoms(), c));
        case SpaceKind::Torus: {
            TrigData t;
            add_term(t, Frequency(space->dimension(), 0), c);
            return Observable(space, std::move(t));
        }
        case SpaceKind::Bernoulli: {
            ChaosData t;
            add_term(t, Word{}, c);
            return Observable(space, std::move(t));
        }
    }
    throw InvalidInput("unknown space");
}

Observable Observable::finite(const SpaceHandle& space, std::vector<Scalar> values) {
    if (space->kind() != SpaceKind::Finite) throw InvalidInput("atom values need a finite space");
    if (values.size() != space->atoms())
        throw InvalidInput("observable has " + std::to_string(values.size()) + " values for " + std::to_string(space->atoms()) + " atoms");
    return Observable(space, std::move(values));
}

Observable Observable::trig(const SpaceHandle& space, TrigData terms) {
    if (space->kind() != SpaceKind::Torus) throw InvalidInput("trigonometric polynomial needs a torus");
    for (const auto& [k, c] : terms)
        if (k.size() != space->dimension()) throw InvalidInput("frequency dimension does not match the torus");
    drop_zeros(terms);
    return Observable(space, std::move(terms));
}

Observable Observable::wave(const SpaceHandle& space, const Frequency& k, const Scalar& c) {
    TrigData t;
    t.emplace(k, c);
    return trig(space, std::move(t));
}

Observable Observable::chaos(const SpaceHandle& space, ChaosData terms) {
    if (space->kind() != SpaceKind::Bernoulli) throw InvalidInput("chaos expansion needs a Bernoulli space");
    const auto& basis = space->basis();
    for (const auto& [w, c] : terms) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            space->group().validate(w[i].position);
            if (w[i].basis == 0 || w[i].basis >= basis.size()) throw InvalidInput("basis index out of range in chaos term");
            if (i > 0 && !(w[i - 1].position < w[i].position)) throw InvalidInput("chaos word positions must be strictly increasing");
        }
    }
    drop_zeros(terms);
    return Observable(space, std::move(terms));
}

Observable Observable::cylinder(const SpaceHandle& space, const std::vector<GroupElement>& positions, const std::vector<std::size_t>& letters,
                                const Scalar& c) {
    if (space->kind() != SpaceKind::Bernoulli) throw InvalidInput("cylinder functions need a Bernoulli space");
    if (positions.size() != letters.size()) throw InvalidInput("cylinder needs one letter per position");
    Observable out = constant(space, c);
    for (std::size_t i = 0; i < positions.size(); ++i) {
        const auto coeffs = space->basis().indicator(letters[i]);
        ChaosData t;
        for (std::size_t l = 0; l < coeffs.size(); ++l) {
            if (coeffs[l] == 0) continue;
            Word w;
            if (l > 0) w.push_back({positions[i], l});
            t.emplace(std::move(w), Scalar(coeffs[l]));
        }
        out = multiply(out, chaos(space, std::move(t)));
    }
    return out;
}

const FiniteData& Observable::finite_values() const {
    if (auto* d = std::get_if<FiniteData>(&data_)) return *d;
    throw CapabilityError("observable is not defined on a finite space");
}

const TrigData& Observable::trig_terms() const {
    if (auto* d = std::get_if<TrigData>(&data_)) return *d;
    throw CapabilityError("observable is not a trigonometric polynomial");
}

const ChaosData& Observable::chaos_terms() const {
    if (auto* d = std::get_if<ChaosData>(&data_)) return *d;
    throw CapabilityError("observable is not a chaos expansion");
}

bool Observable::is_exact() const {
    return std::visit(
        [](const auto& d) {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, FiniteData>) {
                return std::all_of(d.begin(), d.end(), [](const Scalar& s) { return s.is_exact(); });
            } else {
                return std::all_of(d.begin(), d.end(), [](const auto& kv) { return kv.second.is_exact(); });
            }
        },
        data_);
}

bool Observable::is_zero() const {
    return std::visit(
        [](const auto& d) {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, FiniteData>) {
                return std::all_of(d.begin(), d.end(), [](const Scalar& s) { return s.is_exact_zero() || s.value() == 0.0; });
            } else {
                return std::all_of(d.begin(), d.end(), [](const auto& kv) { return kv.second.value() == 0.0; });
            }
        },
        data_);
}

void Observable::refresh_bound() {
    bound_ = std::visit(
        [&](const auto& d) {
            using D = std::decay_t<decltype(d)>;
            double b = 0.0;
            if constexpr (std::is_same_v<D, FiniteData>) {
                for (const auto& s : d) b = std::max(b, s.abs());
            } else if constexpr (std::is_same_v<D, TrigData>) {
                for (const auto& [k, c] : d) b += c.abs();
            } else {
                const auto& basis = space_->basis();
                for (const auto& [w, c] : d) b += c.abs() * word_sup(basis, w);
            }
            return b;
        },
        data_);
}

void Observable::require_compatible(const Observable& o) const {
    if (space_ != o.space_ && !(space_->kind() == o.space_->kind() && space_->kind() != SpaceKind::Bernoulli &&
                                space_->weights() == o.space_->weights() && space_->dimension() == o.space_->dimension()))
        throw InvalidInput("observables live on different spaces");
}

Observable& Observable::operator+=(const Observable& o) {
    require_compatible(o);
    std::visit(
        [&](auto& d) {
            using D = std::decay_t<decltype(d)>;
            const auto& od = std::get<D>(o.data_);
            if constexpr (std::is_same_v<D, FiniteData>) {
                for (std::size_t i = 0; i < d.size(); ++i) d[i] += od[i];
            } else {
                for (const auto& [k, c] : od) add_term(d, k, c);
            }
        },
        data_);
    refresh_bound();
    return *this;
}

Observable& Observable::operator-=(const Observable& o) { return *this += o * Scalar(-1); }

Observable& Observable::operator*=(const Scalar& c) {
    std::visit(
        [&](auto& d) {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, FiniteData>) {
                for (auto& s : d) s *= c;
            } else {
                for (auto& kv : d) kv.second *= c;
                drop_zeros(d);
            }
        },
        data_);
    refresh_bound();
    return *this;
}

Observable& Observable::operator/=(const Rational& r) {
    std::visit(
        [&](auto& d) {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, FiniteData>) {
                for (auto& s : d) s /= r;
            } else {
                for (auto& kv : d) kv.second /= r;
            }
        },
        data_);
    refresh_bound();
    return *this;
}

Observable Observable::conj() const {
    Observable out = *this;
    std::visit(
        [&](auto& d) {
            using D = std::decay_t<decltype(d)>;
            if constexpr (std::is_same_v<D, FiniteData>) {
                for (auto& s : d) s = s.conj();
            } else if constexpr (std::is_same_v<D, TrigData>) {
                TrigData t;
                for (const auto& [k, c] : d) {
                    Frequency neg(k);
                    for (auto& x : neg) x = -x;
                    t.emplace(std::move(neg), c.conj());
                }
                d = std::move(t);
            } else {
                for (auto& kv : d) kv.second = kv.second.conj();
            }
        },
        out.data_);
    return out;
}

bool operator==(const Observable& a, const Observable& b) {
    if (a.data_.index() != b.data_.index()) return false;
    return a.data_ == b.data_;
}

Scalar inner(const Observable& f, const Observable& g) {
    f.require_compatible(g);
    ScalarSum acc;
    std::visit(
        [&](const auto& d) {
            using D = std::decay_t<decltype(d)>;
            const auto& e = std::get<D>(g.data_);
            if constexpr (std::is_same_v<D, FiniteData>) {
                const auto& w = f.space()->weights();
                for (std::size_t i = 0; i < d.size(); ++i) {
                    if (w[i] == 0) continue;
                    acc.add(d[i] * e[i].conj() * Scalar(w[i]));
                }
            } else if constexpr (std::is_same_v<D, TrigData>) {
                for (const auto& [k, c] : d) {
                    auto it = e.find(k);
                    if (it != e.end()) acc.add(c * it->second.conj());
                }
            } else {
                const auto& basis = f.space()->basis();
                for (const auto& [w, c] : d) {
                    auto it = e.find(w);
                    if (it == e.end()) continue;
                    Rational n = 1;
                    for (const auto& site : w) n *= basis.norms[site.basis];
                    acc.add(c * it->second.conj() * Scalar(n));
                }
            }
        },
        f.data_);
    return acc.result();
}

Scalar integral(const Observable& f) { return inner(f, Observable::constant(f.space(), Scalar(1))); }

double l2_norm(const Observable& f) { return std::sqrt(std::max(0.0, inner(f, f).value().real())); }

namespace {

/// Expands prod of two words into a chaos map, scaled by c.
void multiply_words(const AlphabetBasis& basis, const Word& a, const Word& b, const Scalar& c, ChaosData& out, std::size_t budget) {
    struct Choice {
        std::size_t basis;
        Rational coeff;
    };
    std::vector<GroupElement> positions;
    std::vector<std::vector<Choice>> choices;
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].position < b[j].position)) {
            positions.push_back(a[i].position);
            choices.push_back({{a[i].basis, Rational(1)}});
            ++i;
        } else if (i == a.size() || b[j].position < a[i].position) {
            positions.push_back(b[j].position);
            choices.push_back({{b[j].basis, Rational(1)}});
            ++j;
        } else {
            positions.push_back(a[i].position);
            std::vector<Choice> opts;
            const auto& s = basis.product[a[i].basis][b[j].basis];
            for (std::size_t l = 0; l < s.size(); ++l)
                if (s[l] != 0) opts.push_back({l, s[l]});
            choices.push_back(std::move(opts));
            ++i;
            ++j;
        }
    }
    for (const auto& opts : choices)
        if (opts.empty()) return;
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
        Word w;
        Rational coeff = 1;
        for (std::size_t k = 0; k < choices.size(); ++k) {
            const auto& ch = choices[k][pick[k]];
            coeff *= ch.coeff;
            if (ch.basis != 0) w.push_back({positions[k], ch.basis});
        }
        add_term(out, w, c * Scalar(coeff));
        if (out.size() > budget) throw BudgetExceeded("product expansion", out.size(), budget);
        std::size_t k = choices.size();
        while (k > 0) {
            --k;
            if (++pick[k] < choices[k].size()) break;
            pick[k] = 0;
            if (k == 0) return;
        }
        if (choices.empty()) return;
    }
}

}  // namespace

Observable multiply(const Observable& f, const Observable& g, std::size_t term_budget) {
    f.require_compatible(g);
    Observable out = f;
    std::visit(
        [&](const auto& d) {
            using D = std::decay_t<decltype(d)>;
            const auto& e = std::get<D>(g.data_);
            if constexpr (std::is_same_v<D, FiniteData>) {
                FiniteData r(d.size());
                for (std::size_t i = 0; i < d.size(); ++i) r[i] = d[i] * e[i];
                out.data_ = std::move(r);
            } else if constexpr (std::is_same_v<D, TrigData>) {
                TrigData r;
                for (const auto& [k1, c1] : d) {
                    for (const auto& [k2, c2] : e) {
                        Frequency k(k1);
                        for (std::size_t i = 0; i < k.size(); ++i) {
                            if (__builtin_add_overflow(k[i], k2[i], &k[i])) throw InvalidInput("frequency overflow");
                        }
                        add_term(r, k, c1 * c2);
                        if (r.size() > term_budget) throw BudgetExceeded("trigonometric product", r.size(), term_budget);
                    }
                }
                out.data_ = std::move(r);
            } else {
                ChaosData r;
                const auto& basis = f.space()->basis();
                for (const auto& [w1, c1] : d)
                    for (const auto& [w2, c2] : e) multiply_words(basis, w1, w2, c1 * c2, r, term_budget);
                out.data_ = std::move(r);
            }
        },
        f.data_);
    out.refresh_bound();
    out.bound_ = std::min(out.bound_, f.bound_ * g.bound_);
    return out;
}

std::string to_text(const Observable& f) {
    return std::visit(
        [](const auto& d) -> std::string {
            using D = std::decay_t<decltype(d)>;
            std::vector<std::string> parts;
            if constexpr (std::is_same_v<D, FiniteData>) {
                for (const auto& s : d) parts.push_back(s.to_text());
                return "values [" + text::join(parts, ",") + "]";
            } else if constexpr (std::is_same_v<D, TrigData>) {
                for (const auto& [k, c] : d) {
                    std::vector<std::string> entries;
                    for (auto x : k) entries.push_back(std::to_string(x));
                    parts.push_back("[" + text::join(entries, ",") + "]:" + c.to_text());
                }
                return "trig {" + text::join(parts, " ") + "}";
            } else {
                for (const auto& [w, c] : d) {
                    std::vector<std::string> sites;
                    for (const auto& s : w) sites.push_back(to_text(s.position) + "^" + std::to_string(s.basis));
                    parts.push_back("(" + text::join(sites, ",") + "):" + c.to_text());
                }
                return "chaos {" + text::join(parts, " ") + "}";
            }
        },
        f.data());
}

}  // namespace ergo
