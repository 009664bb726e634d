#include <doctest.h>

#include <vector>

#include "qtorus/fo.hpp"
#include "qtorus/parser.hpp"
#include "qtorus/serialize.hpp"
#include "qtorus/verify.hpp"

using namespace qtorus;

TEST_CASE("field axioms on random scalars") {
    Rng rng(0xf1e1dULL);
    for (int i = 0; i < 1000; ++i) {
        const ScalarRat a = random_scalar(rng) + random_scalar(rng);
        const ScalarRat b = random_scalar(rng);
        const ScalarRat c = random_scalar(rng) + random_scalar(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == ScalarRat());
        if (!a.is_zero()) CHECK(a * a.inv() == ScalarRat(1));
    }
}

TEST_CASE("bracket closed form against the product oracle") {
    Rng rng(0xb4ac4e7ULL);
    for (int i = 0; i < 500; ++i) {
        const TorusElem x = random_torus_elem(rng, 3, 4);
        const TorusElem y = random_torus_elem(rng, 3, 4);
        CHECK(bracket(x, y) == x * y - y * x);
    }
}

TEST_CASE("phi against the reordering oracle") {
    // phi is determined by its action on generators plus multiplicativity,
    // so compare the twist formula against the product of generator images:
    // phi(z3^h z2^m z1^n) = z1^h z3^m z2^n reordered.
    Rng rng(0x9111ULL);
    for (int i = 0; i < 300; ++i) {
        const Monomial t{rng.range(-4, 4), rng.range(-4, 4), rng.range(-4, 4)};
        const TorusElem expected = TorusElem::gen(1, static_cast<int>(t.h)) *
                                   TorusElem::gen(3, static_cast<int>(t.m)) *
                                   TorusElem::gen(2, static_cast<int>(t.n));
        CHECK(phi(TorusElem::monomial(t)) == expected);
    }
}

TEST_CASE("rewriting confluence on all words of length at most 5") {
    std::vector<FoWord> words{{ScalarRat(1), {}}};
    long long checked = 0;
    for (int len = 1; len <= 5; ++len) {
        std::vector<FoWord> next;
        for (const auto& w : words)
            for (std::uint8_t l = 1; l <= 3; ++l) {
                FoWord e = w;
                e.letters.push_back(l);
                next.push_back(std::move(e));
            }
        words = std::move(next);
        for (const auto& w : words) {
            const FoElem left = fo_normalize({w}, RewriteStrategy::LeftmostFirst);
            const FoElem right = fo_normalize({w}, RewriteStrategy::RightmostFirst);
            CHECK(left == right);
            // The normal form embeds to the same torus element as the
            // direct product of embedded letters.
            TorusElem direct = TorusElem::unit();
            for (std::uint8_t l : w.letters) direct = direct * gen_I(l);
            CHECK(embed(left) == direct);
            ++checked;
        }
    }
    CHECK(checked == 3 + 9 + 27 + 81 + 243);
}

TEST_CASE("parse of the text serialization reproduces the element") {
    Rng rng(0x5e71a1ULL);
    for (int i = 0; i < 500; ++i) {
        const TorusElem x = random_torus_elem(rng, 4, 5);
        const std::string text = to_text(x);
        CHECK(eval_string(text) == x);
        // Determinism: rendering is a pure function of the element.
        CHECK(to_text(x) == text);
        CHECK(to_json(x) == to_json(x));
    }
}
