#include <doctest.h>

#include "qtorus/errors.hpp"
#include "qtorus/fo.hpp"
#include "qtorus/parser.hpp"
#include "qtorus/serialize.hpp"

using namespace qtorus;

TEST_CASE("atoms and powers") {
    CHECK(eval_string("z1") == TorusElem::gen(1));
    CHECK(eval_string("z3^2") == TorusElem::monomial({2, 0, 0}));
    CHECK(eval_string("z1^(-2)") == TorusElem::monomial({0, 0, -2}));
    CHECK(eval_string("z2^-3") == TorusElem::gen(2, -3));
    CHECK(eval_string("q") == TorusElem::unit().scaled(ScalarRat::qpow(2)));
    CHECK(eval_string("s") == TorusElem::unit().scaled(ScalarRat::qpow(1)));
    CHECK(eval_string("q^(1/2)") == TorusElem::unit().scaled(ScalarRat::qpow(1)));
    CHECK(eval_string("q^(-3/2)") == TorusElem::unit().scaled(ScalarRat::qpow(-3)));
    CHECK(eval_string("7") == TorusElem::unit().scaled(ScalarRat(7)));
    CHECK(eval_string("C") == casimir());
    CHECK(eval_string("I2") == gen_I(2));
}

TEST_CASE("arithmetic, brackets and maps") {
    CHECK(eval_string("z1*z2 - q*z2*z1").is_zero());
    CHECK(eval_string("[z3, z1]") ==
          bracket(TorusElem::gen(3), TorusElem::gen(1)));
    CHECK(eval_string("phi(z1)") == TorusElem::gen(2));
    CHECK(eval_string("pi(z3*z2*z1 + z2)") ==
          eval_string("z3*z2*z1"));
    CHECK(eval_string("(1 - q)^(-3)*[z3,[z2,[z2,z1]]]") ==
          TorusElem::monomial({1, 2, 1}));
    CHECK(eval_string("6/2") == TorusElem::unit().scaled(ScalarRat(3)));
    CHECK(eval_string("z1/q") == TorusElem::gen(1).scaled(ScalarRat::qpow(-2)));
    CHECK(eval_string(" z1 \t* z2 ") == eval_string("z1*z2"));
    CHECK(eval_string("-z1 + z1").is_zero());
}

TEST_CASE("half-power q notation") {
    CHECK(eval_string("q^(1/2)*I1*I2 - q^(-1/2)*I2*I1") == gen_I(3));
    const ScalarRat expected =
        -(ScalarRat::qpow(8) * (ScalarRat::qpow(4) - ScalarRat(1)).pow(-2));
    CHECK(eval_string("pi(C)").component({2, 2, 2}) == expected);
}

TEST_CASE("parse errors carry positions") {
    try {
        eval_string("z1^");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 4);
    }
    CHECK_THROWS_AS(eval_string(""), ParseError);
    CHECK_THROWS_AS(eval_string("z4"), ParseError);
    CHECK_THROWS_AS(eval_string("z1 z2"), ParseError);   // juxtaposition is not a product
    CHECK_THROWS_AS(eval_string("[z1, z2"), ParseError);
    CHECK_THROWS_AS(eval_string("z1^(3/2)"), ParseError);  // half powers only on q
    CHECK_THROWS_AS(eval_string("(z1"), ParseError);
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(eval_string("I1^(-1)"), DomainError);
    CHECK_THROWS_AS(eval_string("(z1 + z2)^(-1)"), DomainError);
    CHECK_THROWS_AS(eval_string("z1/z2"), DomainError);
    CHECK_THROWS_AS(eval_string("1/0"), DomainError);
    // Single-term elements are invertible.
    CHECK(eval_string("(q*z3*z1)^(-1)") ==
          eval_string("q^(-1)*z1^(-1)*z3^(-1)"));
}

TEST_CASE("text serialization") {
    CHECK(to_text(TorusElem::zero()) == "0");
    CHECK(to_text(TorusElem::unit()) == "1");
    CHECK(to_text(gen_G(1)) ==
          "q^(-1/2)*z3*z1 + q^(1/2)*z3^(-1)*z1 + q^(-1/2)*z3^(-1)*z1^(-1)");
    const TorusElem x = TorusElem::monomial({1, 0, 0}, ScalarRat(-2)) +
                        TorusElem::monomial({0, 0, 1}, ScalarRat::qpow(4));
    CHECK(to_text(x) == "-2*z3 + q^2*z1");
    FoElem f;
    f.add_term({2, 0, 1}, ScalarRat(1));
    CHECK(to_text(f) == "I1^2*I3");
}

TEST_CASE("json serialization") {
    CHECK(to_json(TorusElem::zero()) == R"json({"terms":[]})json");
    const TorusElem x = TorusElem::monomial({1, 0, -2}, ScalarRat::qpow(2));
    CHECK(to_json(x) == R"json({"terms":[{"e":[1,0,-2],"c":"(s^2)/(1)"}]})json");
    FoElem f;
    f.add_term({0, 1, 0}, ScalarRat(1));
    CHECK(to_json(f) == R"json({"terms":[{"e":[0,1,0],"c":"(1)/(1)"}],"algebra":"fo"})json");
}

TEST_CASE("scalar_pretty") {
    CHECK(scalar_pretty(ScalarRat(1)) == "1");
    CHECK(scalar_pretty(ScalarRat::qpow(2)) == "q");
    CHECK(scalar_pretty(ScalarRat::qpow(6)) == "q^3");
    CHECK(scalar_pretty(ScalarRat::qpow(-4)) == "q^(-2)");
    CHECK(scalar_pretty(ScalarRat::qpow(1)) == "q^(1/2)");
    CHECK(scalar_pretty(ScalarRat::qpow(-3)) == "q^(-3/2)");
    CHECK(scalar_pretty(ScalarRat(5)) == "5");
    CHECK(scalar_pretty(ScalarRat(1) - ScalarRat::qpow(2)) == "(-s^2+1)/(1)");
}
