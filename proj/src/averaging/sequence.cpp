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

#include "ergo/averaging/sequence.hpp"

#include <cmath>

#include "ergo/core/errors.hpp"

namespace ergo {

Scalar inner(const HilbertVector& x, const HilbertVector& y) {
    if (x.index() != y.index()) throw InvalidInput("inner product of a scalar with an observable");
    if (const auto* s = std::get_if<Scalar>(&x)) return *s * std::get<Scalar>(y).conj();
    return inner(std::get<Observable>(x), std::get<Observable>(y));
}

double norm(const HilbertVector& x) {
    if (const auto* s = std::get_if<Scalar>(&x)) return s->abs();
    return l2_norm(std::get<Observable>(x));
}

std::string to_text(const HilbertVector& x) {
    if (const auto* s = std::get_if<Scalar>(&x)) return s->to_text();
    return to_text(std::get<Observable>(x));
}

HilbertVector product(const HilbertVector& x, const HilbertVector& y) {
    const auto* sx = std::get_if<Scalar>(&x);
    const auto* sy = std::get_if<Scalar>(&y);
    if (sx && sy) return *sx * *sy;
    if (sx) return std::get<Observable>(y) * *sx;
    if (sy) return std::get<Observable>(x) * *sy;
    return multiply(std::get<Observable>(x), std::get<Observable>(y));
}

void HilbertSum::add(const HilbertVector& v) {
    if (const auto* s = std::get_if<Scalar>(&v)) {
        if (!state_) state_ = ScalarSum{};
        auto* acc = std::get_if<ScalarSum>(&*state_);
        if (!acc) throw InvalidInput("cannot add a scalar to an observable sum");
        acc->add(*s);
        return;
    }
    const auto& f = std::get<Observable>(v);
    if (!state_) state_ = ObservableSum{f.space(), f.data().index(), {}, {}, {}};
    auto* acc = std::get_if<ObservableSum>(&*state_);
    if (!acc) throw InvalidInput("cannot add an observable to a scalar sum");
    if (acc->kind != f.data().index()) throw InvalidInput("observables of different kinds in one sum");
    if (const auto* d = std::get_if<FiniteData>(&f.data())) {
        if (acc->finite.empty()) acc->finite.resize(d->size());
        for (std::size_t i = 0; i < d->size(); ++i) acc->finite[i].add((*d)[i]);
    } else if (const auto* t = std::get_if<TrigData>(&f.data())) {
        for (const auto& [k, c] : *t) acc->trig[k].add(c);
    } else {
        for (const auto& [w, c] : std::get<ChaosData>(f.data())) acc->chaos[w].add(c);
    }
}

void HilbertSum::merge(const HilbertSum& other) {
    if (!other.state_) return;
    if (!state_) {
        state_ = other.state_;
        return;
    }
    if (state_->index() != other.state_->index()) throw InvalidInput("cannot merge scalar and observable sums");
    if (auto* s = std::get_if<ScalarSum>(&*state_)) {
        s->merge(std::get<ScalarSum>(*other.state_));
        return;
    }
    auto& a = std::get<ObservableSum>(*state_);
    const auto& b = std::get<ObservableSum>(*other.state_);
    if (a.finite.empty()) a.finite.resize(b.finite.size());
    for (std::size_t i = 0; i < b.finite.size(); ++i) a.finite[i].merge(b.finite[i]);
    for (const auto& [k, c] : b.trig) a.trig[k].merge(c);
    for (const auto& [w, c] : b.chaos) a.chaos[w].merge(c);
}

HilbertVector HilbertSum::average(std::size_t count, const HilbertVector& like) const {
    if (count == 0) throw InvalidInput("average over an empty set");
    const Rational n(static_cast<long long>(count));
    if (!state_) {
        if (std::holds_alternative<Scalar>(like)) return Scalar(0);
        return Observable::zero(std::get<Observable>(like).space());
    }
    if (const auto* s = std::get_if<ScalarSum>(&*state_)) return s->result() / n;
    const auto& acc = std::get<ObservableSum>(*state_);
    switch (acc.space->kind()) {
        case SpaceKind::Finite: {
            std::vector<Scalar> values;
            for (const auto& s : acc.finite) values.push_back(s.result() / n);
            return Observable::finite(acc.space, std::move(values));
        }
        case SpaceKind::Torus: {
            TrigData t;
            for (const auto& [k, s] : acc.trig) t.emplace(k, s.result() / n);
            return Observable::trig(acc.space, std::move(t));
        }
        case SpaceKind::Bernoulli: {
            ChaosData t;
            for (const auto& [w, s] : acc.chaos) t.emplace(w, s.result() / n);
            return Observable::chaos(acc.space, std::move(t));
        }
    }
    throw InvalidInput("unknown space");
}

struct VectorSequence::Impl {
    Impl(Kind kind_, GroupDescriptor group_) : kind(kind_), group(std::move(group_)) {}

    Kind kind;
    GroupDescriptor group;
    double bound = 0.0;
    std::string description;
    std::optional<HilbertVector> value;
    std::optional<System> sys;
    std::optional<Observable> f;
    GroupSelfMap a;
    std::optional<Character> chi;
    Frequency k;
    std::vector<VectorSequence> factors;
    GroupElement h;
    Scalar c;
    Rule rule;
};

VectorSequence VectorSequence::constant(GroupDescriptor group, HilbertVector v) {
    auto impl = std::make_shared<Impl>(Kind::Constant, std::move(group));
    if (const auto* s = std::get_if<Scalar>(&v))
        impl->bound = s->abs();
    else
        impl->bound = std::get<Observable>(v).bound();
    impl->description = "constant";
    impl->value = std::move(v);
    return VectorSequence(std::move(impl));
}

VectorSequence VectorSequence::orbit(System sys, Observable f, GroupSelfMap a) {
    sys.require_observable(f);
    a.check(sys.group());
    auto impl = std::make_shared<Impl>(Kind::Orbit, sys.group());
    impl->bound = f.bound();
    impl->description = "orbit";
    impl->sys = std::move(sys);
    impl->f = std::move(f);
    impl->a = std::move(a);
    return VectorSequence(std::move(impl));
}

VectorSequence VectorSequence::character_phase(Character chi, GroupSelfMap a) {
    a.check(chi.descriptor());
    auto impl = std::make_shared<Impl>(Kind::CharacterPhase, chi.descriptor());
    impl->bound = 1.0;
    impl->description = "character";
    impl->chi = std::move(chi);
    impl->a = std::move(a);
    return VectorSequence(std::move(impl));
}

VectorSequence VectorSequence::eigen_phase(System torus, Frequency k, GroupSelfMap a) {
    if (torus.kind() != SpaceKind::Torus) throw InvalidInput("eigen phases need a torus system");
    if (k.size() != torus.space()->dimension()) throw InvalidInput("frequency dimension does not match the torus");
    a.check(torus.group());
    auto impl = std::make_shared<Impl>(Kind::EigenPhase, torus.group());
    impl->bound = 1.0;
    impl->description = "eigen phase";
    impl->sys = std::move(torus);
    impl->k = std::move(k);
    impl->a = std::move(a);
    return VectorSequence(std::move(impl));
}

VectorSequence VectorSequence::product(std::vector<VectorSequence> factors) {
    if (factors.empty()) throw InvalidInput("product of no sequences");
    auto impl = std::make_shared<Impl>(Kind::Product, factors.front().group());
    impl->bound = 1.0;
    for (const auto& u : factors) {
        require_same(impl->group, u.group(), "sequence product");
        impl->bound *= u.bound();
    }
    impl->description = "product";
    impl->factors = std::move(factors);
    return VectorSequence(std::move(impl));
}

VectorSequence VectorSequence::shifted(VectorSequence u, GroupElement h) {
    u.group().validate(h);
    auto impl = std::make_shared<Impl>(Kind::Shifted, u.group());
    impl->bound = u.bound();
    impl->description = "shifted";
    impl->factors = {std::move(u)};
    impl->h = std::move(h);
    return VectorSequence(std::move(impl));
}

VectorSequence VectorSequence::scaled(VectorSequence u, Scalar c) {
    auto impl = std::make_shared<Impl>(Kind::Scaled, u.group());
    impl->bound = u.bound() * c.abs();
    impl->description = "scaled";
    impl->factors = {std::move(u)};
    impl->c = std::move(c);
    return VectorSequence(std::move(impl));
}

VectorSequence VectorSequence::rule(GroupDescriptor group, Rule rule, double bound, std::string description) {
    if (!(bound >= 0.0)) throw InvalidInput("sequence bound must be nonnegative");
    auto impl = std::make_shared<Impl>(Kind::Rule, std::move(group));
    impl->bound = bound;
    impl->description = std::move(description);
    impl->rule = std::move(rule);
    return VectorSequence(std::move(impl));
}

const GroupDescriptor& VectorSequence::group() const { return impl_->group; }
VectorSequence::Kind VectorSequence::kind() const { return impl_->kind; }
double VectorSequence::bound() const { return impl_->bound; }
std::string VectorSequence::description() const { return impl_->description; }

const System* VectorSequence::orbit_system() const { return impl_->kind == Kind::Orbit ? &*impl_->sys : nullptr; }
const Observable* VectorSequence::orbit_observable() const { return impl_->kind == Kind::Orbit ? &*impl_->f : nullptr; }
const GroupSelfMap* VectorSequence::orbit_map() const { return impl_->kind == Kind::Orbit ? &impl_->a : nullptr; }

HilbertVector VectorSequence::operator()(const GroupElement& g) const {
    const auto& d = *impl_;
    switch (d.kind) {
        case Kind::Constant:
            return *d.value;
        case Kind::Orbit:
            return d.sys->act(d.a.apply(d.group, g), *d.f);
        case Kind::CharacterPhase:
            return Scalar::unit(d.chi->eval(d.a.apply(d.group, g)));
        case Kind::EigenPhase:
            return Scalar::unit(d.sys->phase(d.k, d.a.apply(d.group, g)));
        case Kind::Product: {
            HilbertVector acc = d.factors.front()(g);
            for (std::size_t i = 1; i < d.factors.size(); ++i) acc = ergo::product(acc, d.factors[i](g));
            return acc;
        }
        case Kind::Shifted:
            return d.factors.front()(d.group.combine(g, d.h));
        case Kind::Scaled:
            return ergo::product(d.factors.front()(g), HilbertVector(d.c));
        case Kind::Rule:
            return d.rule(g);
    }
    throw InvalidInput("unknown sequence kind");
}

double VectorSequence::spot_check_bound(const std::vector<GroupElement>& sample, double tol) const {
    double worst = 0.0;
    for (const auto& g : sample) {
        const double n = norm((*this)(g));
        worst = std::max(worst, n);
        if (n > bound() + tol) throw InvalidInput("sequence norm " + std::to_string(n) + " exceeds its declared bound " + std::to_string(bound()));
    }
    return worst;
}

}  // namespace ergo
