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

#include "ergo/systems/system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "ergo/core/errors.hpp"
#include "ergo/group/finite_field.hpp"

namespace ergo {

namespace {

Permutation compose(const Permutation& a, const Permutation& b) {
    // (a then b): x -> b[a[x]]
    Permutation out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) out[x] = b[a[x]];
    return out;
}

Permutation identity_perm(std::size_t n) {
    Permutation p(n);
    std::iota(p.begin(), p.end(), std::size_t{0});
    return p;
}

class UnionFind {
   public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), std::size_t{0}); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent_[std::max(a, b)] = std::min(a, b);
    }

   private:
    std::vector<std::size_t> parent_;
};

}  // namespace

System::System(GroupDescriptor group, SpaceHandle space, Action action)
    : group_(std::move(group)), space_(std::move(space)), action_(std::move(action)) {}

System System::finite(GroupDescriptor group, std::vector<Rational> weights, std::vector<Permutation> generators,
                      std::vector<std::int64_t> orders) {
    return finite(std::move(group), Space::finite(std::move(weights)), std::move(generators), std::move(orders));
}

System System::finite(GroupDescriptor group, SpaceHandle space, std::vector<Permutation> generators, std::vector<std::int64_t> orders) {
    if (space->kind() != SpaceKind::Finite) throw InvalidInput("finite system needs a finite space");
    System s(std::move(group), std::move(space), action::FinitePermutation{std::move(generators), std::move(orders)});
    s.validate_finite();
    const auto& fp = std::get<action::FinitePermutation>(s.action_);
    for (std::size_t i = 0; i < fp.generators.size(); ++i) {
        std::vector<Permutation> pw{identity_perm(s.space_->atoms())};
        for (std::int64_t e = 1; e < fp.orders[i]; ++e) pw.push_back(compose(pw.back(), fp.generators[i]));
        s.powers_.push_back(std::move(pw));
    }
    return s;
}

System System::torus(GroupDescriptor group, std::size_t dimension, std::vector<std::vector<Angle>> generators) {
    System s(std::move(group), Space::torus(dimension), action::TorusRotation{std::move(generators)});
    s.validate_torus();
    return s;
}

System System::bernoulli(GroupDescriptor group, std::vector<Rational> probs) {
    SpaceHandle space = Space::bernoulli(group, std::move(probs));
    return System(std::move(group), std::move(space), action::BernoulliShift{});
}

void System::validate_finite() const {
    const auto& fp = std::get<action::FinitePermutation>(action_);
    const std::size_t n = space_->atoms();
    const auto& w = space_->weights();
    if (fp.generators.size() != fp.orders.size()) throw InvalidInput("finite system needs one declared order per generator");
    if (group_.is_finite_rank() && fp.generators.size() > group_.rank())
        throw InvalidInput("more generators than coordinates of " + kind_name(group_.kind()));
    for (std::size_t i = 0; i < fp.generators.size(); ++i) {
        const auto& perm = fp.generators[i];
        if (perm.size() != n) throw InvalidInput("generator " + std::to_string(i) + " has the wrong number of atoms");
        std::vector<bool> seen(n, false);
        for (auto y : perm) {
            if (y >= n || seen[y]) throw InvalidInput("generator " + std::to_string(i) + " is not a permutation");
            seen[y] = true;
        }
        for (std::size_t x = 0; x < n; ++x)
            if (w[perm[x]] != w[x]) throw InvalidInput("generator " + std::to_string(i) + " does not preserve the atom weights");
        const std::int64_t m = fp.orders[i];
        if (m < 1) throw InvalidInput("declared orders must be positive");
        if (group_.is_torsion() && m != 1 && m != group_.prime())
            throw InvalidInput("generator orders of a p-torsion group must divide p = " + std::to_string(group_.prime()));
        Permutation acc = identity_perm(n);
        for (std::int64_t e = 0; e < m; ++e) acc = compose(acc, perm);
        if (acc != identity_perm(n)) throw InvalidInput("generator " + std::to_string(i) + " does not satisfy g^" + std::to_string(m) + " = id");
        for (std::size_t j = 0; j < i; ++j)
            if (compose(perm, fp.generators[j]) != compose(fp.generators[j], perm))
                throw InvalidInput("generators " + std::to_string(j) + " and " + std::to_string(i) + " do not commute");
    }
}

void System::validate_torus() const {
    const auto& tr = std::get<action::TorusRotation>(action_);
    if (group_.is_finite_rank() && tr.generators.size() > group_.rank())
        throw InvalidInput("more rotation generators than coordinates of " + kind_name(group_.kind()));
    for (const auto& gen : tr.generators) {
        if (gen.size() != space_->dimension()) throw InvalidInput("rotation generator has the wrong torus dimension");
        if (group_.is_torsion()) {
            for (const auto& a : gen) {
                if (!a.is_rational() || !a.scaled(group_.prime()).is_zero())
                    throw InvalidInput("rotations of a p-torsion group need angles in (1/p)Z");
            }
        }
    }
}

void System::require_observable(const Observable& f) const {
    if (f.space() != space_) Observable::constant(space_, Scalar(0)).require_compatible(f);
}

Permutation System::permutation(const GroupElement& g) const {
    const auto& fp = std::get_if<action::FinitePermutation>(&action_);
    if (!fp) throw CapabilityError("permutation needs a finite system");
    group_.validate(g);
    Permutation out = identity_perm(space_->atoms());
    for (std::size_t i = 0; i < fp->generators.size() && i < g.support_end(); ++i) {
        const std::int64_t e = mod_floor(g[i], fp->orders[i]);
        if (e != 0) out = compose(out, powers_[i][static_cast<std::size_t>(e)]);
    }
    return out;
}

std::vector<Angle> System::rotation(const GroupElement& g) const {
    const auto* tr = std::get_if<action::TorusRotation>(&action_);
    if (!tr) throw CapabilityError("rotation needs a torus system");
    group_.validate(g);
    std::vector<Angle> out(space_->dimension());
    for (std::size_t i = 0; i < tr->generators.size() && i < g.support_end(); ++i) {
        if (g[i] == 0) continue;
        for (std::size_t j = 0; j < out.size(); ++j) out[j] = out[j] + tr->generators[i][j].scaled(g[i]);
    }
    return out;
}

Angle System::phase(const Frequency& k, const GroupElement& g) const {
    const auto alpha = rotation(g);
    if (k.size() != alpha.size()) throw InvalidInput("frequency dimension does not match the torus");
    Angle out;
    for (std::size_t j = 0; j < k.size(); ++j)
        if (k[j] != 0) out = out + alpha[j].scaled(k[j]);
    return out;
}

Observable System::act(const GroupElement& g, const Observable& f) const {
    require_observable(f);
    group_.validate(g);
    if (g.is_zero()) return f;
    Observable out = f;
    switch (kind()) {
        case SpaceKind::Finite: {
            const Permutation pi = permutation(g);
            const auto& v = f.finite_values();
            FiniteData r(v.size());
            for (std::size_t x = 0; x < v.size(); ++x) r[x] = v[pi[x]];
            out.data_ = std::move(r);
            break;
        }
        case SpaceKind::Torus: {
            const auto alpha = rotation(g);
            TrigData r;
            for (const auto& [k, c] : f.trig_terms()) {
                Angle ph;
                for (std::size_t j = 0; j < k.size(); ++j)
                    if (k[j] != 0) ph = ph + alpha[j].scaled(k[j]);
                r.emplace(k, c * Scalar::unit(ph));
            }
            out.data_ = std::move(r);
            break;
        }
        case SpaceKind::Bernoulli: {
            ChaosData r;
            for (const auto& [w, c] : f.chaos_terms()) {
                Word shifted;
                for (const auto& site : w) shifted.push_back({group_.combine(site.position, g), site.basis});
                std::sort(shifted.begin(), shifted.end());
                r.emplace(std::move(shifted), c);
            }
            out.data_ = std::move(r);
            break;
        }
    }
    return out;
}

Scalar System::correlation(const Observable& f, const GroupElement& g) const { return inner(act(g, f), f); }

std::vector<std::vector<std::size_t>> System::orbits_of(const std::vector<Permutation>& gens) const {
    const std::size_t n = space_->atoms();
    UnionFind uf(n);
    for (const auto& perm : gens)
        for (std::size_t x = 0; x < n; ++x) uf.unite(x, perm[x]);
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t x = 0; x < n; ++x) groups[uf.find(x)].push_back(x);
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups) out.push_back(std::move(members));
    return out;
}

std::vector<std::vector<std::size_t>> System::orbits() const {
    const auto* fp = std::get_if<action::FinitePermutation>(&action_);
    if (!fp) throw CapabilityError("orbits need a finite system");
    return orbits_of(fp->generators);
}

bool System::single_positive_orbit(const std::vector<Permutation>& gens) const {
    const auto& w = space_->weights();
    int positive = 0;
    for (const auto& orbit : orbits_of(gens)) {
        Rational mass = 0;
        for (auto x : orbit) mass += w[x];
        if (mass > 0) ++positive;
    }
    return positive == 1;
}

Observable System::invariant_projection(const Observable& f) const {
    require_observable(f);
    if (kind() == SpaceKind::Bernoulli) return Observable::constant(space_, integral(f));
    if (kind() == SpaceKind::Torus) {
        // e(k . x) is invariant iff k . alpha_i = 0 in R/Z for every generator
        const auto& gens = std::get<action::TorusRotation>(action_).generators;
        TrigData kept;
        for (const auto& [k, c] : f.trig_terms()) {
            bool invariant = true;
            for (std::size_t i = 0; i < gens.size() && invariant; ++i) {
                std::vector<std::int64_t> e(i + 1, 0);
                e.back() = 1;
                invariant = phase(k, GroupElement(e)).is_zero();
            }
            if (invariant) kept.emplace(k, c);
        }
        return Observable::trig(space_, std::move(kept));
    }
    const auto& v = f.finite_values();
    const auto& w = space_->weights();
    FiniteData r(v.size());
    for (const auto& orbit : orbits()) {
        Rational mass = 0;
        for (auto x : orbit) mass += w[x];
        ScalarSum acc;
        if (mass > 0) {
            for (auto x : orbit)
                if (w[x] != 0) acc.add(v[x] * Scalar(w[x] / mass));
        } else {
            for (auto x : orbit) acc.add(v[x] / Rational(static_cast<long long>(orbit.size())));
        }
        const Scalar mean = acc.result();
        for (auto x : orbit) r[x] = mean;
    }
    Observable out = f;
    out.data_ = std::move(r);
    out.refresh_bound();
    return out;
}

bool System::is_ergodic() const {
    const auto* fp = std::get_if<action::FinitePermutation>(&action_);
    if (!fp) throw CapabilityError("ergodicity is decided only for finite systems");
    return single_positive_orbit(fp->generators);
}

bool System::is_totally_ergodic(std::int64_t m, std::size_t subgroup_budget) const {
    const auto* fp = std::get_if<action::FinitePermutation>(&action_);
    if (!fp) throw CapabilityError("total ergodicity is decided only for finite systems");
    if (m < 1) throw InvalidInput("index bound must be positive");
    const auto& orders = fp->orders;
    std::size_t q_size = 1;
    for (auto o : orders) {
        q_size *= static_cast<std::size_t>(o);
        if (q_size > subgroup_budget) throw BudgetExceeded("quotient group", q_size, subgroup_budget);
    }
    // elements of Q in mixed radix, index <-> exponent vector
    auto decode = [&](std::size_t idx) {
        std::vector<std::int64_t> e(orders.size());
        for (std::size_t i = orders.size(); i-- > 0;) {
            e[i] = static_cast<std::int64_t>(idx % static_cast<std::size_t>(orders[i]));
            idx /= static_cast<std::size_t>(orders[i]);
        }
        return e;
    };
    auto encode = [&](const std::vector<std::int64_t>& e) {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * static_cast<std::size_t>(orders[i]) + static_cast<std::size_t>(e[i]);
        return idx;
    };
    auto add = [&](std::size_t a, std::size_t b) {
        auto ea = decode(a);
        const auto eb = decode(b);
        for (std::size_t i = 0; i < ea.size(); ++i) ea[i] = (ea[i] + eb[i]) % orders[i];
        return encode(ea);
    };
    auto closure = [&](std::vector<bool> members, std::size_t extra) {
        std::deque<std::size_t> todo{extra};
        members[extra] = true;
        std::vector<std::size_t> current;
        for (std::size_t x = 0; x < q_size; ++x)
            if (members[x]) current.push_back(x);
        while (!todo.empty()) {
            const std::size_t x = todo.front();
            todo.pop_front();
            const auto snapshot = current;
            for (auto y : snapshot) {
                const std::size_t z = add(x, y);
                if (!members[z]) {
                    members[z] = true;
                    current.push_back(z);
                    todo.push_back(z);
                }
            }
        }
        return members;
    };
    std::vector<bool> trivial(q_size, false);
    trivial[0] = true;
    std::set<std::vector<bool>> seen{trivial};
    std::deque<std::vector<bool>> queue{trivial};
    while (!queue.empty()) {
        const auto h = queue.front();
        queue.pop_front();
        const auto size = static_cast<std::size_t>(std::count(h.begin(), h.end(), true));
        if (static_cast<std::int64_t>(q_size / size) <= m) {
            std::vector<Permutation> gens;
            for (std::size_t x = 0; x < q_size; ++x) {
                if (!h[x]) continue;
                const auto e = decode(x);
                Permutation perm = identity_perm(space_->atoms());
                for (std::size_t i = 0; i < e.size(); ++i)
                    if (e[i] != 0) perm = compose(perm, powers_[i][static_cast<std::size_t>(e[i])]);
                gens.push_back(std::move(perm));
            }
            if (!single_positive_orbit(gens)) return false;
        }
        for (std::size_t x = 0; x < q_size; ++x) {
            if (h[x]) continue;
            auto bigger = closure(h, x);
            if (seen.insert(bigger).second) {
                if (seen.size() > subgroup_budget) throw BudgetExceeded("subgroup lattice", seen.size(), subgroup_budget);
                queue.push_back(std::move(bigger));
            }
        }
    }
    return true;
}

bool System::is_totally_ergodic_ring(std::int64_t max_degree) const {
    const auto* fp = std::get_if<action::FinitePermutation>(&action_);
    if (!fp) throw CapabilityError("total ergodicity is decided only for finite systems");
    if (group_.kind() != GroupKind::PolynomialRing) throw CapabilityError("the ring notion of total ergodicity needs poly_ring");
    if (max_degree < 0) throw InvalidInput("degree bound must be nonnegative");
    const std::int64_t p = group_.prime();
    const std::size_t span = fp->generators.size();
    // monic m of degree d <= max_degree, lower coefficients as an odometer
    for (std::int64_t d = 0; d <= max_degree; ++d) {
        std::vector<std::int64_t> low(static_cast<std::size_t>(d), 0);
        while (true) {
            PolyFp m(low.begin(), low.end());
            m.push_back(1);
            std::vector<Permutation> gens;
            for (std::size_t j = 0; j < span; ++j) {
                PolyFp shifted(j, 0);
                shifted.insert(shifted.end(), m.begin(), m.end());
                GroupElement h(std::move(shifted));
                gens.push_back(permutation(h));
            }
            if (!single_positive_orbit(gens)) return false;
            std::size_t i = low.size();
            bool done = true;
            while (i > 0) {
                --i;
                if (++low[i] < p) {
                    done = false;
                    break;
                }
                low[i] = 0;
            }
            if (done) break;
        }
    }
    return true;
}

std::optional<std::set<GroupElement>> System::correlation_support(const Observable& f) const {
    if (kind() != SpaceKind::Bernoulli) throw CapabilityError("correlation support is computed only for Bernoulli systems");
    require_observable(f);
    const auto& terms = f.chaos_terms();
    auto it = terms.find(Word{});
    if (it != terms.end() && it->second.value() != 0.0) return std::nullopt;
    std::set<GroupElement> positions;
    for (const auto& [w, c] : terms)
        for (const auto& site : w) positions.insert(site.position);
    std::set<GroupElement> out{group_.identity()};
    for (const auto& a : positions)
        for (const auto& b : positions) out.insert(group_.subtract(b, a));
    return out;
}

Observable act(const System& sys, const GroupElement& g, const Observable& f) { return sys.act(g, f); }
Scalar correlation(const System& sys, const Observable& f, const GroupElement& g) { return sys.correlation(f, g); }

}  // namespace ergo
