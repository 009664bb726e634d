#include "qtorus/torus.hpp"

#include <cassert>

#include "qtorus/errors.hpp"

namespace qtorus {

std::pair<ScalarRat, Monomial> mono_mul(const Monomial& a, const Monomial& b) {
    const long long e = a.m * b.h + a.n * b.m - a.n * b.h;
    return {ScalarRat::qpow(2 * e), a + b};
}

TorusElem TorusElem::monomial(const Monomial& t, ScalarRat c) {
    TorusElem x;
    if (!c.is_zero()) x.terms_.emplace(t, std::move(c));
    return x;
}

TorusElem TorusElem::gen(int axis, int exponent) {
    if (axis < 1 || axis > 3) throw IndexOutOfRange(axis);
    Monomial t;
    (axis == 1 ? t.n : axis == 2 ? t.m : t.h) = exponent;
    return monomial(t);
}

ScalarRat TorusElem::component(const Monomial& t) const {
    auto it = terms_.find(t);
    return it == terms_.end() ? ScalarRat::zero() : it->second;
}

void TorusElem::add_term(const Monomial& t, const ScalarRat& c) {
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    } else if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

TorusElem TorusElem::operator+(const TorusElem& other) const {
    TorusElem r(*this);
    for (const auto& [t, c] : other.terms_) r.add_term(t, c);
    return r;
}

TorusElem TorusElem::operator-(const TorusElem& other) const {
    TorusElem r(*this);
    for (const auto& [t, c] : other.terms_) r.add_term(t, -c);
    return r;
}

TorusElem TorusElem::operator*(const TorusElem& other) const {
    TorusElem r;
    for (const auto& [a, ca] : terms_)
        for (const auto& [b, cb] : other.terms_) {
            auto [q, t] = mono_mul(a, b);
            r.add_term(t, ca * cb * q);
        }
    return r;
}

TorusElem TorusElem::scaled(const ScalarRat& c) const {
    TorusElem r;
    if (c.is_zero()) return r;
    for (const auto& [t, ct] : terms_) r.terms_.emplace(t, c * ct);
    return r;
}

TorusElem TorusElem::pow(long e) const {
    assert(e >= 0);
    TorusElem acc = unit();
    for (long i = 0; i < e; ++i) acc = acc * *this;
    return acc;
}

TorusElem add_scale(const ScalarRat& c, const TorusElem& x, const TorusElem& y) {
    return x.scaled(c) + y;
}

TorusElem bracket(const TorusElem& x, const TorusElem& y) {
    TorusElem r;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            const long long e1 = a.m * b.h + a.n * b.m - a.n * b.h;
            const long long e2 = a.h * b.m - a.h * b.n + a.m * b.n;
            const ScalarRat factor = ScalarRat::qpow(2 * e1) - ScalarRat::qpow(2 * e2);
            if (!factor.is_zero()) r.add_term(a + b, ca * cb * factor);
        }
    return r;
}

TorusElem phi(const TorusElem& x) {
    TorusElem r;
    for (const auto& [t, c] : x.terms()) {
        const long long twist = t.h * (t.n - t.m);
        r.add_term({t.m, t.n, t.h}, c * ScalarRat::qpow(2 * twist));
    }
    return r;
}

TorusElem pi_project(const TorusElem& x) {
    TorusElem r;
    for (const auto& [t, c] : x.terms())
        if (t.is_diagonal()) r.add_term(t, c);
    return r;
}

std::map<long long, TorusElem> lambda_decompose(const TorusElem& x) {
    std::map<long long, TorusElem> parts;
    for (const auto& [t, c] : x.terms()) parts[t.total_degree()].add_term(t, c);
    return parts;
}

LqMembership in_lq(const TorusElem& x) {
    TorusElem w = pi_project(x);
    return {w.is_zero(), std::move(w)};
}

}  // namespace qtorus
