// Acceptance gate: one line per criterion, [PASS] or [FAIL], nonzero exit
// if any criterion fails. Where a stated expected value disagrees with the
// exact algebra, the criterion is checked as stated and reported honestly,
// with a diagnostic line showing the identity that does hold.

#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "qtorus/fo.hpp"
#include "qtorus/lie.hpp"
#include "qtorus/parser.hpp"
#include "qtorus/serialize.hpp"
#include "qtorus/torus.hpp"
#include "qtorus/verify.hpp"

using namespace qtorus;

namespace {

using Clock = std::chrono::steady_clock;

int g_failures = 0;

void report(int criterion, const char* summary, bool ok, double elapsed_s, double limit_s) {
    const bool in_time = limit_s <= 0.0 || elapsed_s < limit_s;
    if (!ok || !in_time) ++g_failures;
    std::printf("[%s] criterion %d: %s (%.2f s%s)\n", (ok && in_time) ? "PASS" : "FAIL",
                criterion, summary, elapsed_s,
                in_time ? "" : ", over the runtime limit");
}

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

void criterion1() {
    const auto start = Clock::now();
    const VerifyReport r = verify_presentations(6);
    report(1, "torus relations, reordering laws (|m|,|n| <= 6), FO relations", r.passed,
           seconds_since(start), 5.0);
}

void criterion2() {
    const auto start = Clock::now();
    const VerifyReport r = verify_closed_forms(2, 500, 4, SuiteOptions{}.seed);
    report(2, "bracket closed form, (1-q^H) identity, vanishing law", r.passed,
           seconds_since(start), 60.0);
}

void criterion3() {
    const auto start = Clock::now();
    const VerifyReport r = verify_certificates(3);
    const bool counts_ok = r.cases_run == 343;
    report(3, "336 certificates exact, 7 diagonal triples rejected", r.passed && counts_ok,
           seconds_since(start), 30.0);
}

void criterion4() {
    const auto start = Clock::now();
    const TorusElem c = casimir();
    const ScalarRat q2m1_inv2 = (ScalarRat::qpow(4) - ScalarRat(1)).pow(-2);
    bool stated_ok = true;
    bool window_ok = true;
    bool derived_ok = true;
    TorusElem cn = TorusElem::unit();
    for (int n = 1; n <= 4; ++n) {
        cn = cn * c;
        const ScalarRat actual = cn.component({2 * n, 2 * n, 2 * n});
        const ScalarRat sign = (n % 2 != 0) ? ScalarRat(-1) : ScalarRat(1);
        const ScalarRat stated =
            sign * ScalarRat::qpow(4L * (n * n - n + 2)) * q2m1_inv2.pow(n);
        const ScalarRat derived = sign * ScalarRat::qpow(4L * n * (n + 1)) * q2m1_inv2.pow(n);
        if (!(actual == stated)) stated_ok = false;
        if (!(actual == derived)) derived_ok = false;
        const TorusElem rest = cn - TorusElem::monomial({2 * n, 2 * n, 2 * n}, actual);
        for (const auto& [t, coeff] : rest.terms()) {
            const long long d = t.total_degree();
            if (d % 2 != 0 || d < -6 * n || d > 6 * n - 2) window_ok = false;
        }
    }
    report(4,
           "C^n leading coefficient (-1)^n q^{2(n^2-n+2)} (q^2-1)^{-2n} for n = 1..4, "
           "plus even-degree support in [-6n, 6n-2]",
           stated_ok && window_ok, seconds_since(start), 60.0);
    if (!stated_ok)
        std::printf("       note: the coefficient of z3^{2n} z2^{2n} z1^{2n} in C^n equals "
                    "(-1)^n q^{2n(n+1)} (q^2-1)^{-2n} exactly for n = 1..4 (%s); the two "
                    "exponents coincide only at n = 1\n",
                    derived_ok ? "verified" : "NOT verified");
}

void criterion5() {
    const auto start = Clock::now();
    const ScalarRat one(1), zero;
    const std::vector<std::vector<ScalarRat>> listed = {
        {one},                                                  // 1
        {zero, one},                                            // C
        {zero, zero, one},                                      // C^2
        {zero, zero, zero, one},                                // C^3
        {one, one},                                             // C + 1
        {zero, -ScalarRat::qpow(2), one},                       // C^2 - qC
        {zero, one, zero, ScalarRat::qpow(1)},                  // q^{1/2} C^3 + C
    };
    const bool listed_ok = verify_not_lie(listed).passed;
    const bool random_ok = verify_not_lie_random(25, 3, SuiteOptions{}.seed).passed;
    report(5, "pi(p(C)) != 0 for 7 listed and 25 random polynomials", listed_ok && random_ok,
           seconds_since(start), 120.0);
}

void criterion6() {
    const auto start = Clock::now();
    bool central_ok = true;
    const TorusElem c = casimir();
    for (int k = 1; k <= 3; ++k)
        if (!bracket(c, gen_I(k)).is_zero()) central_ok = false;

    bool phi_ok = true;
    Rng rng(SuiteOptions{}.seed);
    for (int i = 0; i < 200; ++i) {
        const TorusElem x = random_torus_elem(rng, 3, 4);
        const TorusElem y = random_torus_elem(rng, 3, 4);
        if (!(phi(phi(phi(x))) == x) || !(phi(x * y) == phi(x) * phi(y))) phi_ok = false;
    }

    // Stated cycle: G1 -> G2 -> G3 -> G1.
    const bool stated_cycle = phi(gen_G(1)) == gen_G(2) && phi(gen_G(2)) == gen_G(3) &&
                              phi(gen_G(3)) == gen_G(1);
    report(6, "[C, I_k] = 0; Phi^3 = id and multiplicative; Phi(G1) = G2, Phi(G2) = G3, "
              "Phi(G3) = G1",
           central_ok && phi_ok && stated_cycle, seconds_since(start), 0.0);
    if (!stated_cycle) {
        const bool actual_cycle = phi(gen_G(1)) == gen_G(3) && phi(gen_G(3)) == gen_G(2) &&
                                  phi(gen_G(2)) == gen_G(1);
        std::printf("       note: the automorphism permutes the generators the other way "
                    "around: Phi(G1) = G3, Phi(G3) = G2, Phi(G2) = G1 (%s)\n",
                    actual_cycle ? "verified" : "NOT verified");
    }
}

void criterion7() {
    const auto start = Clock::now();
    bool ok = true;
    long long words = 0;
    std::vector<FoWord> level{{ScalarRat(1), {}}};
    for (int len = 1; len <= 5; ++len) {
        std::vector<FoWord> next;
        for (const auto& w : level)
            for (std::uint8_t l = 1; l <= 3; ++l) {
                FoWord e = w;
                e.letters.push_back(l);
                next.push_back(std::move(e));
            }
        level = std::move(next);
        if (len < 5) continue;
        for (const auto& w : level) {
            const FoElem left = fo_normalize({w}, RewriteStrategy::LeftmostFirst);
            const FoElem right = fo_normalize({w}, RewriteStrategy::RightmostFirst);
            if (!(left == right)) ok = false;
            TorusElem direct = TorusElem::unit();
            for (std::uint8_t l : w.letters) direct = direct * gen_I(l);
            if (!(embed(left) == direct)) ok = false;
            ++words;
        }
    }
    if (words != 243) ok = false;
    report(7, "243 length-5 words confluent under both strategies; embed agrees", ok,
           seconds_since(start), 0.0);
}

void criterion8() {
    const auto start = Clock::now();
    bool ok = true;
    Rng rng(SuiteOptions{}.seed + 8);
    for (int i = 0; i < 500; ++i) {
        const TorusElem x = random_torus_elem(rng, 4, 5);
        const std::string text = to_text(x);
        if (text != to_text(x) || to_json(x) != to_json(x)) ok = false;
        if (!(eval_string(text) == x)) ok = false;
    }
    report(8, "byte-identical serialization; parse of serialize is the identity on "
              "500 random elements",
           ok, seconds_since(start), 0.0);
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    if (g_failures > 0) {
        std::printf("%d criterion(s) failed\n", g_failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
