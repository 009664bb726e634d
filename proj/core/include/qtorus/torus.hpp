#pragma once

#include <compare>
#include <map>
#include <utility>

#include "qtorus/scalar.hpp"

namespace qtorus {

/// Exponent triple (h,m,n) of the normal-order basis monomial z3^h z2^m z1^n.
struct Monomial {
    long long h = 0;
    long long m = 0;
    long long n = 0;

    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    Monomial operator+(const Monomial& o) const { return {h + o.h, m + o.m, n + o.n}; }
    Monomial operator-() const { return {-h, -m, -n}; }

    /// Total degree h+m+n; the Lambda_N gradation label.
    long long total_degree() const { return h + m + n; }

    bool is_diagonal() const { return h == m && m == n; }
};

/// Normal-ordered product of two basis monomials:
/// z3^h z2^m z1^n . z3^u z2^v z1^w = q^{mu+nv-nu} z3^{h+u} z2^{m+v} z1^{n+w}.
std::pair<ScalarRat, Monomial> mono_mul(const Monomial& a, const Monomial& b);

/// Element of the quantum torus A_q in the basis z3^h z2^m z1^n.
/// The term map iterates in descending lexicographic order on (h,m,n),
/// which fixes printing and serialization order.
class TorusElem {
public:
    using TermMap = std::map<Monomial, ScalarRat, std::greater<Monomial>>;

    TorusElem() = default;

    static TorusElem zero() { return {}; }
    static TorusElem unit() { return monomial({0, 0, 0}); }
    static TorusElem monomial(const Monomial& t, ScalarRat c = ScalarRat(1));

    /// Single generators: z3 = gen(3,1), z1^{-1} = gen(1,-1), ...
    static TorusElem gen(int axis, int exponent = 1);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    /// Coefficient of basis monomial t (zero if absent); the A_{(h,m,n)}
    /// component of the Z^3-gradation.
    ScalarRat component(const Monomial& t) const;

    TorusElem operator+(const TorusElem& other) const;
    TorusElem operator-(const TorusElem& other) const;
    TorusElem operator*(const TorusElem& other) const;
    TorusElem scaled(const ScalarRat& c) const;

    /// Integer power by iterated multiplication; exponent must be >= 0.
    TorusElem pow(long e) const;

    bool operator==(const TorusElem& other) const { return terms_ == other.terms_; }

    void add_term(const Monomial& t, const ScalarRat& c);

private:
    TermMap terms_;
};

/// c*x + y.
TorusElem add_scale(const ScalarRat& c, const TorusElem& x, const TorusElem& y);

/// [x,y], computed termwise from the closed form
/// (q^{mu+nv-nu} - q^{hv-hw+mw}) z3^{h+u} z2^{m+v} z1^{n+w}.
TorusElem bracket(const TorusElem& x, const TorusElem& y);

/// The algebra automorphism z1 -> z2 -> z3 -> z1; on a basis monomial
/// (h,m,n) it acts as q^{h(n-m)} times the monomial (m,n,h).
TorusElem phi(const TorusElem& x);

/// Projection onto the span of the diagonal monomials (h,h,h), i.e. the
/// canonical map A_q -> A_q / L_q.
TorusElem pi_project(const TorusElem& x);

/// Decomposition by total degree N = h+m+n (the Z-gradation Lambda_N).
std::map<long long, TorusElem> lambda_decompose(const TorusElem& x);

struct LqMembership {
    bool in_lq = false;
    TorusElem witness;  // pi(x); zero exactly when in_lq
};

/// x lies in L_q iff pi(x) = 0; otherwise pi(x) is the obstruction.
LqMembership in_lq(const TorusElem& x);

}  // namespace qtorus
