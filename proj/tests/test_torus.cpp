#include <doctest.h>

#include "qtorus/torus.hpp"

using namespace qtorus;

TEST_CASE("monomial product closed form") {
    // z1 z2 = q z2 z1: the product of (0,0,1) and (0,1,0) picks up q.
    auto [c, t] = mono_mul({0, 0, 1}, {0, 1, 0});
    CHECK(c == ScalarRat::qpow(2));
    CHECK(t == Monomial{0, 1, 1});
    // Exponent mu + nv - nu on a generic pair.
    auto [c2, t2] = mono_mul({1, 2, 3}, {2, -1, 1});
    CHECK(c2 == ScalarRat::qpow(2 * (-5)));
    CHECK(t2 == Monomial{3, 1, 4});
    // Inverse pair collapses to a scalar multiple of the identity.
    auto [c3, t3] = mono_mul({1, 2, 3}, {-1, -2, -3});
    CHECK(t3 == Monomial{0, 0, 0});
    CHECK(TorusElem::monomial({1, 2, 3}) * TorusElem::monomial({-1, -2, -3}) ==
          TorusElem::unit().scaled(c3));
}

TEST_CASE("defining relations") {
    const TorusElem z1 = TorusElem::gen(1), z2 = TorusElem::gen(2), z3 = TorusElem::gen(3);
    const ScalarRat q = ScalarRat::qpow(2);
    CHECK(z1 * z2 == (z2 * z1).scaled(q));
    CHECK(z2 * z3 == (z3 * z2).scaled(q));
    CHECK(z3 * z1 == (z1 * z3).scaled(q));
    for (int k = 1; k <= 3; ++k)
        CHECK(TorusElem::gen(k) * TorusElem::gen(k, -1) == TorusElem::unit());
}

TEST_CASE("bracket closed form and vanishing law") {
    const TorusElem x = TorusElem::monomial({1, 2, 3});
    const TorusElem y = TorusElem::monomial({2, -1, 1});
    CHECK(bracket(x, y) == x * y - y * x);
    // H = h(v-w) + m(w-u) + n(u-v) = 5 on this pair.
    CHECK(bracket(x, y) == (x * y).scaled(ScalarRat(1) - ScalarRat::qpow(10)));
    // Opposite-sum pair: bracket vanishes.
    CHECK(bracket(TorusElem::monomial({2, 1, -1}), TorusElem::monomial({-1, 0, 2})).is_zero());
    CHECK(bracket(x, TorusElem::monomial({-1, -2, -3})).is_zero());
}

TEST_CASE("phi automorphism") {
    // On a basis monomial (h,m,n): q^{h(n-m)} times (m,n,h).
    const TorusElem x = TorusElem::monomial({1, 2, 3});
    CHECK(phi(x) == TorusElem::monomial({2, 3, 1}, ScalarRat::qpow(2 * 1 * (3 - 2))));
    CHECK(phi(TorusElem::gen(1)) == TorusElem::gen(2));
    CHECK(phi(TorusElem::gen(2)) == TorusElem::gen(3));
    CHECK(phi(TorusElem::gen(3)) == TorusElem::gen(1));
    const TorusElem y = TorusElem::monomial({0, -1, 2}, ScalarRat::qpow(3)) + x;
    CHECK(phi(phi(phi(y))) == y);
    CHECK(phi(x * y) == phi(x) * phi(y));
}

TEST_CASE("projection, membership and gradation") {
    const TorusElem diag = TorusElem::monomial({2, 2, 2});
    const TorusElem off = TorusElem::monomial({1, 0, 0});
    CHECK(pi_project(diag + off) == diag);
    CHECK(pi_project(off).is_zero());
    CHECK(in_lq(off).in_lq);
    const LqMembership not_member = in_lq(diag + off);
    CHECK_FALSE(not_member.in_lq);
    CHECK(not_member.witness == diag);

    const TorusElem mixed = TorusElem::monomial({1, 1, 0}) + TorusElem::monomial({0, 0, 2}) +
                            TorusElem::monomial({-1, 0, 0});
    const auto parts = lambda_decompose(mixed);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at(2) == TorusElem::monomial({1, 1, 0}) + TorusElem::monomial({0, 0, 2}));
    CHECK(parts.at(-1) == TorusElem::monomial({-1, 0, 0}));
}

TEST_CASE("element algebra basics") {
    const TorusElem x = TorusElem::monomial({1, 0, 0}, ScalarRat(3));
    CHECK(x - x == TorusElem::zero());
    CHECK(x.component({1, 0, 0}) == ScalarRat(3));
    CHECK(x.component({0, 1, 0}).is_zero());
    CHECK(TorusElem::gen(2, -3) == TorusElem::monomial({0, -3, 0}));
    CHECK(TorusElem::gen(1).pow(4) == TorusElem::monomial({0, 0, 4}));
    CHECK(add_scale(ScalarRat(2), x, x) == x.scaled(ScalarRat(3)));
    CHECK(x.pow(0) == TorusElem::unit());
}
