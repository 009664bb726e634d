#include "qtorus/fo.hpp"

#include <cassert>
#include <deque>
#include <stdexcept>

#include "qtorus/errors.hpp"

namespace qtorus {

FoElem FoElem::monomial(const FoMonomial& t, ScalarRat c) {
    FoElem x;
    if (!c.is_zero()) x.terms_.emplace(t, std::move(c));
    return x;
}

FoElem FoElem::gen(int k) {
    if (k < 1 || k > 3) throw IndexOutOfRange(k);
    FoMonomial t;
    (k == 1 ? t.h : k == 2 ? t.m : t.n) = 1;
    return monomial(t);
}

void FoElem::add_term(const FoMonomial& t, const ScalarRat& c) {
    auto [it, inserted] = terms_.emplace(t, c);
    if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
    } else if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

FoElem FoElem::operator+(const FoElem& other) const {
    FoElem r(*this);
    for (const auto& [t, c] : other.terms_) r.add_term(t, c);
    return r;
}

FoElem FoElem::operator-(const FoElem& other) const {
    FoElem r(*this);
    for (const auto& [t, c] : other.terms_) r.add_term(t, -c);
    return r;
}

FoElem FoElem::scaled(const ScalarRat& c) const {
    FoElem r;
    if (c.is_zero()) return r;
    for (const auto& [t, ct] : terms_) r.terms_.emplace(t, c * ct);
    return r;
}

namespace {

// Index of the reducible adjacent pair chosen by the strategy, or -1.
int find_redex(const std::vector<std::uint8_t>& w, RewriteStrategy strategy) {
    if (strategy == RewriteStrategy::LeftmostFirst) {
        for (std::size_t i = 0; i + 1 < w.size(); ++i)
            if (w[i] > w[i + 1]) return static_cast<int>(i);
    } else {
        for (std::size_t i = w.size(); i >= 2; --i)
            if (w[i - 2] > w[i - 1]) return static_cast<int>(i - 2);
    }
    return -1;
}

FoMonomial sorted_word_monomial(const std::vector<std::uint8_t>& w) {
    FoMonomial t;
    for (auto g : w) (g == 1 ? t.h : g == 2 ? t.m : t.n)++;
    return t;
}

}  // namespace

FoElem fo_normalize(const std::vector<FoWord>& words, RewriteStrategy strategy) {
    FoElem out;
    std::deque<FoWord> work(words.begin(), words.end());
    while (!work.empty()) {
        FoWord w = std::move(work.front());
        work.pop_front();
        if (w.coeff.is_zero()) continue;
        const int i = find_redex(w.letters, strategy);
        if (i < 0) {
            out.add_term(sorted_word_monomial(w.letters), w.coeff);
            continue;
        }
        const std::uint8_t a = w.letters[static_cast<std::size_t>(i)];
        const std::uint8_t b = w.letters[static_cast<std::size_t>(i) + 1];
        // a > b: swap with coefficient cq, plus a one-letter remainder with cr.
        ScalarRat cq, cr;
        std::uint8_t rest;
        if (a == 2 && b == 1) {
            cq = ScalarRat::qpow(2);  // q
            cr = -ScalarRat::qpow(1); // -q^{1/2}
            rest = 3;
        } else if (a == 3 && b == 2) {
            cq = ScalarRat::qpow(2);
            cr = -ScalarRat::qpow(1);
            rest = 1;
        } else {
            assert(a == 3 && b == 1);
            cq = ScalarRat::qpow(-2);  // q^{-1}
            cr = ScalarRat::qpow(-1);  // +q^{-1/2}
            rest = 2;
        }
        FoWord swapped;
        swapped.coeff = w.coeff * cq;
        swapped.letters = w.letters;
        std::swap(swapped.letters[static_cast<std::size_t>(i)],
                  swapped.letters[static_cast<std::size_t>(i) + 1]);
        FoWord shorter;
        shorter.coeff = w.coeff * cr;
        shorter.letters.assign(w.letters.begin(), w.letters.begin() + i);
        shorter.letters.push_back(rest);
        shorter.letters.insert(shorter.letters.end(), w.letters.begin() + i + 2,
                               w.letters.end());
        work.push_front(std::move(shorter));
        work.push_front(std::move(swapped));
    }
    return out;
}

FoElem fo_mul(const FoElem& x, const FoElem& y) {
    std::vector<FoWord> words;
    for (const auto& [a, ca] : x.terms())
        for (const auto& [b, cb] : y.terms()) {
            FoWord w;
            w.coeff = ca * cb;
            auto append = [&w](std::uint8_t g, unsigned count) {
                w.letters.insert(w.letters.end(), count, g);
            };
            append(1, a.h); append(2, a.m); append(3, a.n);
            append(1, b.h); append(2, b.m); append(3, b.n);
            words.push_back(std::move(w));
        }
    return fo_normalize(words);
}

TorusElem gen_G(int k) {
    if (k < 1 || k > 3) throw IndexOutOfRange(k);
    // Defining products, normal-ordered on the fly:
    //   G1 = q^{-1/2} z3^{-1}z1^{-1} + q^{1/2} z3^{-1}z1 + q^{-1/2} z3 z1
    //   G2 = q^{-1/2} z2^{-1}z3^{-1} + q^{1/2} z2^{-1}z3 + q^{-1/2} z2 z3
    //   G3 = q^{-1/2} z1^{-1}z2^{-1} + q^{1/2} z1^{-1}z2 + q^{-1/2} z1 z2
    const int first = k == 1 ? 3 : k == 2 ? 2 : 1;
    const int second = k == 1 ? 1 : k == 2 ? 3 : 2;
    auto part = [&](int e1, int e2, long qhalf) {
        return TorusElem::gen(first, e1).scaled(ScalarRat::qpow(qhalf)) *
               TorusElem::gen(second, e2);
    };
    return part(-1, -1, -1) + part(-1, 1, 1) + part(1, 1, -1);
}

TorusElem gen_I(int k) {
    // q - q^{-1}
    static const ScalarRat denom = ScalarRat::qpow(2) - ScalarRat::qpow(-2);
    return gen_G(k).scaled(denom.inv());
}

TorusElem embed(const FoElem& x) {
    const TorusElem i1 = gen_I(1), i2 = gen_I(2), i3 = gen_I(3);
    // Per-call memo of generator powers; exponents stay desk-scale.
    std::map<unsigned, TorusElem> p1, p2, p3;
    auto power = [](std::map<unsigned, TorusElem>& memo, const TorusElem& base,
                    unsigned e) -> const TorusElem& {
        auto it = memo.find(e);
        if (it != memo.end()) return it->second;
        TorusElem v = e == 0 ? TorusElem::unit() : TorusElem(base).pow(static_cast<long>(e));
        return memo.emplace(e, std::move(v)).first->second;
    };
    TorusElem out;
    for (const auto& [t, c] : x.terms()) {
        TorusElem img = power(p1, i1, t.h) * power(p2, i2, t.m) * power(p3, i3, t.n);
        out = add_scale(c, img, out);
    }
    return out;
}

namespace {

TorusElem compute_casimir() {
    const TorusElem i1 = gen_I(1), i2 = gen_I(2), i3 = gen_I(3);
    const ScalarRat q = ScalarRat::qpow(2);
    const ScalarRat qm = ScalarRat::qpow(-2);
    const TorusElem c = (i1 * i2 * i3).scaled(-ScalarRat::qpow(1) * (q - qm)) +
                        (i1 * i1).scaled(q) + (i2 * i2).scaled(qm) + (i3 * i3).scaled(q);

    // Cross-check against the G-element form.
    const TorusElem g1 = gen_G(1), g2 = gen_G(2), g3 = gen_G(3);
    const TorusElem rhs = (g1 * g2 * g3).scaled(ScalarRat(-1)) +
                          (g1 * g1).scaled(ScalarRat::qpow(1)) +
                          (g2 * g2).scaled(ScalarRat::qpow(-3)) +
                          (g3 * g3).scaled(ScalarRat::qpow(1));
    const ScalarRat q2m1 = ScalarRat::qpow(4) - ScalarRat(1);
    const ScalarRat factor = ScalarRat::qpow(-5) * q2m1 * q2m1;
    if (!(c.scaled(factor) == rhs))
        throw std::logic_error("Casimir cross-check failed: definition vs G-element form");
    return c;
}

}  // namespace

TorusElem casimir() {
    static const TorusElem c = compute_casimir();
    return c;
}

TorusElem poly_in_casimir(const std::vector<ScalarRat>& coeffs) {
    const TorusElem c = casimir();
    TorusElem out;
    TorusElem cpow = TorusElem::unit();
    for (std::size_t j = 0; j < coeffs.size(); ++j) {
        if (j > 0) cpow = cpow * c;
        out = add_scale(coeffs[j], cpow, out);
    }
    return out;
}

}  // namespace qtorus
