#include "qtorus/scalar.hpp"

#include <cassert>
#include <cstdlib>
#include <utility>

namespace qtorus {

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::monomial(int degree, Int coeff) {
    IntPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(static_cast<std::size_t>(degree) + 1, Int(0));
        p.coeffs_.back() = std::move(coeff);
    }
    return p;
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& other) const {
    IntPoly r;
    r.coeffs_.resize(std::max(coeffs_.size(), other.coeffs_.size()), Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = coeffs_[i];
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i) r.coeffs_[i] += other.coeffs_[i];
    r.trim();
    return r;
}

IntPoly IntPoly::operator-(const IntPoly& other) const { return *this + (-other); }

IntPoly IntPoly::operator*(const IntPoly& other) const {
    if (is_zero() || other.is_zero()) return IntPoly();
    IntPoly r;
    r.coeffs_.assign(coeffs_.size() + other.coeffs_.size() - 1, Int(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < other.coeffs_.size(); ++j)
            r.coeffs_[i + j] += coeffs_[i] * other.coeffs_[j];
    }
    r.trim();
    return r;
}

IntPoly IntPoly::operator*(const Int& k) const {
    if (k == 0) return IntPoly();
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c *= k;
    return r;
}

Int IntPoly::content() const {
    Int g(0);
    for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

IntPoly IntPoly::primitive_part() const {
    if (is_zero()) return IntPoly();
    return divide_exact(content());
}

IntPoly IntPoly::divide_exact(const IntPoly& divisor) const {
    assert(!divisor.is_zero());
    IntPoly rem(*this);
    if (rem.is_zero()) return IntPoly();
    IntPoly quot;
    quot.coeffs_.assign(coeffs_.size() - divisor.coeffs_.size() + 1, Int(0));
    while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
        const int shift = rem.degree() - divisor.degree();
        Int qc;
        mpz_divexact(qc.get_mpz_t(), rem.leading().get_mpz_t(), divisor.leading().get_mpz_t());
        quot.coeffs_[static_cast<std::size_t>(shift)] = qc;
        rem = rem - divisor * IntPoly::monomial(shift, qc);
    }
    assert(rem.is_zero() && "division was not exact");
    quot.trim();
    return quot;
}

IntPoly IntPoly::divide_exact(const Int& k) const {
    assert(k != 0);
    IntPoly r(*this);
    for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), k.get_mpz_t());
    return r;
}

IntPoly IntPoly::gcd(IntPoly a, IntPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    while (!b.is_zero()) {
        // One pseudo-division step, reduced to primitive part each round.
        IntPoly rem = std::move(a);
        while (!rem.is_zero() && rem.degree() >= b.degree()) {
            const int shift = rem.degree() - b.degree();
            rem = rem * b.leading() - b * IntPoly::monomial(shift, rem.leading());
        }
        a = std::move(b);
        b = rem.primitive_part();
    }
    if (!a.is_zero() && a.leading() < 0) a = -a;
    return a;
}

std::string IntPoly::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (int d = degree(); d >= 0; --d) {
        const Int& c = coeffs_[static_cast<std::size_t>(d)];
        if (c == 0) continue;
        const bool first = out.empty();
        if (c < 0)
            out += first ? "-" : "-";
        else if (!first)
            out += "+";
        Int a = abs(c);
        if (d == 0) {
            out += a.get_str();
        } else {
            if (a != 1) out += a.get_str() + "*";
            out += (d == 1) ? "s" : "s^" + std::to_string(d);
        }
    }
    return out;
}

ScalarRat::ScalarRat(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den)) {
    assert(!den_.is_zero());
    canonicalize();
}

void ScalarRat::canonicalize() {
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    IntPoly g = IntPoly::gcd(num_, den_);
    if (g.degree() > 0 || !g.is_one()) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    Int cn = num_.content();
    Int cd = den_.content();
    Int ci;
    mpz_gcd(ci.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (ci != 1) {
        num_ = num_.divide_exact(ci);
        den_ = den_.divide_exact(ci);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

ScalarRat ScalarRat::qpow(long k) {
    if (k >= 0) return ScalarRat(IntPoly::monomial(static_cast<int>(k), 1), IntPoly(1));
    return ScalarRat(IntPoly(1), IntPoly::monomial(static_cast<int>(-k), 1));
}

ScalarRat ScalarRat::operator-() const {
    ScalarRat r(*this);
    r.num_ = -r.num_;
    return r;
}

ScalarRat ScalarRat::operator+(const ScalarRat& other) const {
    return ScalarRat(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

ScalarRat ScalarRat::operator-(const ScalarRat& other) const { return *this + (-other); }

ScalarRat ScalarRat::operator*(const ScalarRat& other) const {
    return ScalarRat(num_ * other.num_, den_ * other.den_);
}

ScalarRat ScalarRat::inv() const {
    if (is_zero()) throw ZeroInversion();
    return ScalarRat(den_, num_);
}

ScalarRat ScalarRat::pow(long e) const {
    ScalarRat base = e >= 0 ? *this : inv();
    long k = std::labs(e);
    ScalarRat acc = one();
    for (long i = 0; i < k; ++i) acc = acc * base;
    return acc;
}

std::string ScalarRat::to_string() const {
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

ScalarRat one_minus_qpow(long k) { return ScalarRat(1) - ScalarRat::qpow(2 * k); }

}  // namespace qtorus
