#include "qtorus/lie.hpp"

#include <cassert>
#include <utility>

#include "qtorus/errors.hpp"

namespace qtorus {

int gen_axis(Gen g) {
    switch (g) {
        case Gen::z1: case Gen::z1_inv: return 1;
        case Gen::z2: case Gen::z2_inv: return 2;
        default: return 3;
    }
}

int gen_exponent(Gen g) {
    return (g == Gen::z1_inv || g == Gen::z2_inv || g == Gen::z3_inv) ? -1 : 1;
}

Gen make_gen(int axis, int exponent) {
    if (axis < 1 || axis > 3) throw IndexOutOfRange(axis);
    assert(exponent == 1 || exponent == -1);
    static constexpr Gen pos[] = {Gen::z1, Gen::z2, Gen::z3};
    static constexpr Gen neg[] = {Gen::z1_inv, Gen::z2_inv, Gen::z3_inv};
    return exponent > 0 ? pos[axis - 1] : neg[axis - 1];
}

LieExpr LieExpr::leaf(Gen g) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Leaf;
    n->gen = g;
    return LieExpr(std::move(n));
}

LieExpr LieExpr::bracket(LieExpr left, LieExpr right) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Bracket;
    n->children = {std::move(left), std::move(right)};
    return LieExpr(std::move(n));
}

LieExpr LieExpr::scale(ScalarRat c, LieExpr body) {
    assert(!c.is_zero());
    // Collapse nested scales so certificates stay readable.
    if (body.kind() == Kind::Scale) {
        ScalarRat merged = c * body.coeff();
        return scale(std::move(merged), body.children()[0]);
    }
    auto n = std::make_shared<Node>();
    n->kind = Kind::Scale;
    n->coeff = std::move(c);
    n->children = {std::move(body)};
    return LieExpr(std::move(n));
}

LieExpr LieExpr::sum(std::vector<LieExpr> parts) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Sum;
    n->children = std::move(parts);
    return LieExpr(std::move(n));
}

TorusElem LieExpr::eval() const {
    switch (kind()) {
        case Kind::Leaf:
            return TorusElem::gen(gen_axis(gen()), gen_exponent(gen()));
        case Kind::Bracket:
            return qtorus::bracket(children()[0].eval(), children()[1].eval());
        case Kind::Scale:
            return children()[0].eval().scaled(coeff());
        case Kind::Sum: {
            TorusElem acc;
            for (const auto& part : children()) acc = acc + part.eval();
            return acc;
        }
    }
    return {};
}

LieExpr LieExpr::map_phi() const {
    switch (kind()) {
        case Kind::Leaf: {
            const int axis = gen_axis(gen()) % 3 + 1;  // 1->2->3->1
            return leaf(make_gen(axis, gen_exponent(gen())));
        }
        case Kind::Bracket:
            return bracket(children()[0].map_phi(), children()[1].map_phi());
        case Kind::Scale:
            return scale(coeff(), children()[0].map_phi());
        case Kind::Sum: {
            std::vector<LieExpr> parts;
            parts.reserve(children().size());
            for (const auto& part : children()) parts.push_back(part.map_phi());
            return sum(std::move(parts));
        }
    }
    return *this;
}

std::string LieExpr::to_string() const {
    switch (kind()) {
        case Kind::Leaf: {
            std::string s = "z" + std::to_string(gen_axis(gen()));
            if (gen_exponent(gen()) < 0) s += "^-1";
            return s;
        }
        case Kind::Bracket:
            return "[" + children()[0].to_string() + "," + children()[1].to_string() + "]";
        case Kind::Scale: {
            const LieExpr& body = children()[0];
            std::string b = body.to_string();
            if (body.kind() == Kind::Sum) b = "(" + b + ")";
            return coeff().to_string() + " * " + b;
        }
        case Kind::Sum: {
            std::string s;
            for (const auto& part : children()) {
                if (!s.empty()) s += " + ";
                std::string p = part.to_string();
                if (part.kind() == Kind::Sum) p = "(" + p + ")";
                s += p;
            }
            return s.empty() ? "0" : s;
        }
    }
    return {};
}

LieExpr ad_pow(const LieExpr& base, long count, LieExpr body) {
    assert(count >= 0);
    for (long i = 0; i < count; ++i) body = LieExpr::bracket(base, std::move(body));
    return body;
}

LieExpr cert_comm0() {
    const auto z1 = LieExpr::leaf(Gen::z1);
    const auto z2 = LieExpr::leaf(Gen::z2);
    const auto z3 = LieExpr::leaf(Gen::z3);
    return LieExpr::scale(one_minus_qpow(1).pow(-3),
                          LieExpr::bracket(z3, LieExpr::bracket(z2, LieExpr::bracket(z2, z1))));
}

LieExpr cert_commT(long long T) {
    const auto core = LieExpr::bracket(
        LieExpr::bracket(LieExpr::leaf(Gen::z3_inv), LieExpr::leaf(Gen::z2_inv)),
        LieExpr::leaf(Gen::z2_inv));
    if (T >= 0) {
        const ScalarRat c = ScalarRat::qpow(2 * T) * one_minus_qpow(1).pow(-T - 2);
        return LieExpr::scale(c, ad_pow(LieExpr::leaf(Gen::z1), T, core));
    }
    const ScalarRat sign = (T % 2 != 0) ? ScalarRat(-1) : ScalarRat(1);
    const ScalarRat c = sign * one_minus_qpow(1).pow(T - 2);
    return LieExpr::scale(c, ad_pow(LieExpr::leaf(Gen::z1_inv), -T, core));
}

LieExpr cert_single_power(int axis, long long h) {
    if (axis < 1 || axis > 3) throw IndexOutOfRange(axis);
    if (h == 0) throw DiagonalNotInLq(0);
    if (axis != 1) {
        LieExpr e = cert_single_power(1, h);
        e = e.map_phi();
        if (axis == 3) e = e.map_phi();
        return e;
    }
    if (h == 1) return LieExpr::leaf(Gen::z1);
    if (h == -1) return LieExpr::leaf(Gen::z1_inv);
    const ScalarRat c = ScalarRat::qpow(6) * one_minus_qpow(h).inv();
    return LieExpr::scale(c, LieExpr::bracket(cert_comm0(), cert_commT(h - 1)));
}

LieExpr cert_pair(int first, int second, long long a, long long b) {
    const bool valid = (first == 3 && second == 2) || (first == 3 && second == 1) ||
                       (first == 2 && second == 1);
    if (!valid) throw InvalidPair(first, second);
    assert(a != 0 && b != 0);
    const long long e = (first == 3 && second == 1) ? -a * b : a * b;
    return LieExpr::scale(
        one_minus_qpow(e).inv(),
        LieExpr::bracket(cert_single_power(first, a), cert_single_power(second, b)));
}

LieExpr cert_monomial(long long h, long long m, long long n) {
    if (h == m && m == n) throw DiagonalNotInLq(h);
    const int nonzero = (h != 0) + (m != 0) + (n != 0);
    if (nonzero == 1) {
        if (h != 0) return cert_single_power(3, h);
        if (m != 0) return cert_single_power(2, m);
        return cert_single_power(1, n);
    }
    if (nonzero == 2) {
        if (n == 0) return cert_pair(3, 2, h, m);
        if (m == 0) return cert_pair(3, 1, h, n);
        return cert_pair(2, 1, m, n);
    }
    if (h != m) {
        // [z3^h z2^m, z1^n] = (1 - q^{n(m-h)}) z3^h z2^m z1^n
        return LieExpr::scale(one_minus_qpow(n * (m - h)).inv(),
                              LieExpr::bracket(cert_pair(3, 2, h, m), cert_single_power(1, n)));
    }
    // h = m != n: [z3^h, z2^h z1^n] = (1 - q^{h(h-n)}) z3^h z2^h z1^n
    return LieExpr::scale(one_minus_qpow(h * (h - n)).inv(),
                          LieExpr::bracket(cert_single_power(3, h), cert_pair(2, 1, h, n)));
}

}  // namespace qtorus
