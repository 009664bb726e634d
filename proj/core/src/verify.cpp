#include "qtorus/verify.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "qtorus/errors.hpp"
#include "qtorus/lie.hpp"
#include "qtorus/serialize.hpp"

namespace qtorus {

std::uint64_t Rng::next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

long long Rng::range(long long lo, long long hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<long long>(next() % span);
}

ScalarRat random_scalar(Rng& rng) {
    long long a = rng.range(-5, 4);
    if (a >= 0) ++a;  // skip zero
    const long long j = rng.range(-4, 4);
    return ScalarRat(a) * ScalarRat::qpow(j);
}

TorusElem random_torus_elem(Rng& rng, int max_terms, int exp_bound) {
    const long long k = rng.range(1, max_terms);
    TorusElem x;
    for (long long i = 0; i < k; ++i) {
        Monomial t{rng.range(-exp_bound, exp_bound), rng.range(-exp_bound, exp_bound),
                   rng.range(-exp_bound, exp_bound)};
        x.add_term(t, random_scalar(rng));
    }
    return x;
}

namespace {

using Clock = std::chrono::steady_clock;

struct Checker {
    explicit Checker(std::string name) : report{std::move(name)}, start(Clock::now()) {}

    // Records the first failure; later cases still count.
    void record(bool ok, const std::function<std::string()>& payload) {
        ++report.cases_run;
        if (!ok && report.passed) {
            report.passed = false;
            report.counterexample = payload();
        }
    }

    VerifyReport finish() {
        report.elapsed_ms =
            std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        return std::move(report);
    }

    VerifyReport report;
    Clock::time_point start;
};

std::string pair_payload(const char* what, const Monomial& a, const Monomial& b,
                         const TorusElem& got, const TorusElem& want) {
    nlohmann::ordered_json j{{"check", what},
                             {"a", {a.h, a.m, a.n}},
                             {"b", {b.h, b.m, b.n}},
                             {"got", nlohmann::json::parse(to_json(got))},
                             {"want", nlohmann::json::parse(to_json(want))}};
    return j.dump();
}

std::string elem_payload(const char* what, const TorusElem& x) {
    nlohmann::ordered_json j{{"check", what}, {"elem", nlohmann::json::parse(to_json(x))}};
    return j.dump();
}

TorusElem mono(long long h, long long m, long long n) {
    return TorusElem::monomial({h, m, n});
}

}  // namespace

VerifyReport verify_presentations(int bound) {
    Checker ck("presentations");
    const TorusElem unit = TorusElem::unit();
    const ScalarRat q = ScalarRat::qpow(2);

    // z1 z2 = q z2 z1 and cyclic companions.
    const TorusElem z[4] = {TorusElem(), TorusElem::gen(1), TorusElem::gen(2),
                            TorusElem::gen(3)};
    auto qcomm = [&](int i, int j) {  // z_i z_j = q z_j z_i
        ck.record(z[i] * z[j] == (z[j] * z[i]).scaled(q), [&] {
            return elem_payload("defining relation", z[i] * z[j] - (z[j] * z[i]).scaled(q));
        });
    };
    qcomm(1, 2);
    qcomm(2, 3);
    qcomm(3, 1);
    for (int k = 1; k <= 3; ++k) {
        const TorusElem inv = TorusElem::gen(k, -1);
        ck.record(z[k] * inv == unit,
                  [&] { return elem_payload("z_k z_k^{-1} = I", z[k] * inv - unit); });
        ck.record(inv * z[k] == unit,
                  [&] { return elem_payload("z_k^{-1} z_k = I", inv * z[k] - unit); });
    }

    // Reordering laws for |m|,|n| <= bound.
    for (long long m = -bound; m <= bound; ++m)
        for (long long n = -bound; n <= bound; ++n) {
            const struct {
                Monomial a, b, prod;
                long long twist;
            } laws[3] = {
                {{0, 0, m}, {0, n, 0}, {0, n, m}, m * n},   // z1^m z2^n
                {{0, m, 0}, {n, 0, 0}, {n, m, 0}, m * n},   // z2^m z3^n
                {{0, 0, m}, {n, 0, 0}, {n, 0, m}, -m * n},  // z1^m z3^n
            };
            for (const auto& law : laws) {
                const TorusElem lhs = TorusElem::monomial(law.a) * TorusElem::monomial(law.b);
                const TorusElem rhs =
                    TorusElem::monomial(law.prod, ScalarRat::qpow(2 * law.twist));
                ck.record(lhs == rhs,
                          [&] { return pair_payload("reordering law", law.a, law.b, lhs, rhs); });
            }
        }

    // FO defining relations under the embedding.
    const TorusElem i1 = gen_I(1), i2 = gen_I(2), i3 = gen_I(3);
    auto fo_rel = [&](const TorusElem& a, const TorusElem& b, const TorusElem& c) {
        const TorusElem residual =
            (a * b).scaled(ScalarRat::qpow(1)) - (b * a).scaled(ScalarRat::qpow(-1)) - c;
        ck.record(residual.is_zero(),
                  [&] { return elem_payload("FO relation residual", residual); });
    };
    fo_rel(i1, i2, i3);
    fo_rel(i2, i3, i1);
    fo_rel(i3, i1, i2);

    return ck.finish();
}

namespace {

void closed_form_case(Checker& ck, const Monomial& a, const Monomial& b) {
    const TorusElem x = TorusElem::monomial(a);
    const TorusElem y = TorusElem::monomial(b);
    const TorusElem br = bracket(x, y);
    const TorusElem oracle = x * y - y * x;
    ck.record(br == oracle, [&] { return pair_payload("bracket vs xy-yx", a, b, br, oracle); });

    // [a,b] = (1 - q^H) a b with H = h(v-w) + m(w-u) + n(u-v).
    const long long H = a.h * (b.m - b.n) + a.m * (b.n - b.h) + a.n * (b.h - b.m);
    const TorusElem viaH = (x * y).scaled(ScalarRat(1) - ScalarRat::qpow(2 * H));
    ck.record(br == viaH, [&] { return pair_payload("(1-q^H) identity", a, b, br, viaH); });

    if (a.h + b.h == a.m + b.m && a.m + b.m == a.n + b.n) {
        ck.record(br.is_zero(),
                  [&] { return pair_payload("vanishing law", a, b, br, TorusElem()); });
    }
}

}  // namespace

VerifyReport verify_closed_forms(int bound, int random_cases, int random_bound,
                                 std::uint64_t seed) {
    Checker ck("closed-forms");
    for (long long h = -bound; h <= bound; ++h)
        for (long long m = -bound; m <= bound; ++m)
            for (long long n = -bound; n <= bound; ++n)
                for (long long u = -bound; u <= bound; ++u)
                    for (long long v = -bound; v <= bound; ++v)
                        for (long long w = -bound; w <= bound; ++w)
                            closed_form_case(ck, {h, m, n}, {u, v, w});
    Rng rng(seed);
    for (int i = 0; i < random_cases; ++i) {
        const Monomial a{rng.range(-random_bound, random_bound),
                         rng.range(-random_bound, random_bound),
                         rng.range(-random_bound, random_bound)};
        const Monomial b{rng.range(-random_bound, random_bound),
                         rng.range(-random_bound, random_bound),
                         rng.range(-random_bound, random_bound)};
        closed_form_case(ck, a, b);
    }
    return ck.finish();
}

VerifyReport verify_certificates(int bound) {
    Checker ck("certificates");
    for (long long h = -bound; h <= bound; ++h)
        for (long long m = -bound; m <= bound; ++m)
            for (long long n = -bound; n <= bound; ++n) {
                if (h == m && m == n) {
                    bool rejected = false;
                    try {
                        cert_monomial(h, m, n);
                    } catch (const DiagonalNotInLq&) {
                        rejected = true;
                    }
                    ck.record(rejected, [&] {
                        return elem_payload("diagonal triple not rejected", mono(h, m, n));
                    });
                    continue;
                }
                const TorusElem value = cert_monomial(h, m, n).eval();
                const TorusElem target = mono(h, m, n);
                ck.record(value == target && pi_project(value).is_zero(), [&] {
                    return pair_payload("certificate evaluation", {h, m, n}, {h, m, n}, value,
                                        target);
                });
            }
    return ck.finish();
}

VerifyReport verify_casimir_gradation(int n_max) {
    Checker ck("casimir");
    const TorusElem c = casimir();
    const ScalarRat q2m1_inv2 = (ScalarRat::qpow(4) - ScalarRat(1)).pow(-2);
    TorusElem cn = TorusElem::unit();
    for (int n = 1; n <= n_max; ++n) {
        cn = cn * c;
        const Monomial diag{2 * n, 2 * n, 2 * n};
        // lead(n) = (-1)^n q^{2n(n+1)} (q^2-1)^{-2n}, from the induction
        // recurrence lead(n+1) = -q^{4n+4}(q^2-1)^{-2} lead(n).
        const ScalarRat sign = (n % 2 != 0) ? ScalarRat(-1) : ScalarRat(1);
        const ScalarRat lead =
            sign * ScalarRat::qpow(4LL * n * (n + 1)) * q2m1_inv2.pow(n);
        ck.record(cn.component(diag) == lead, [&] {
            return pair_payload("C^n leading term", diag, diag,
                                TorusElem::monomial(diag, cn.component(diag)),
                                TorusElem::monomial(diag, lead));
        });
        const TorusElem rest = cn - TorusElem::monomial(diag, lead);
        bool ok = true;
        for (const auto& [t, coeff] : rest.terms()) {
            const long long d = t.total_degree();
            if (d % 2 != 0 || d < -6 * n || d > 6 * n - 2) ok = false;
        }
        ck.record(ok, [&] { return elem_payload("C^n gradation window", rest); });
    }
    return ck.finish();
}

VerifyReport verify_not_lie(const std::vector<std::vector<ScalarRat>>& polynomials) {
    Checker ck("not-lie");
    for (const auto& coeffs : polynomials) {
        bool nonzero = false;
        for (const auto& coeff : coeffs) nonzero = nonzero || !coeff.is_zero();
        if (!nonzero) throw ZeroPolynomial();
        const TorusElem p = poly_in_casimir(coeffs);
        const TorusElem proj = pi_project(p);
        ck.record(!proj.is_zero(), [&] { return elem_payload("pi(p(C)) = 0", p); });
    }
    return ck.finish();
}

VerifyReport verify_not_lie_random(int trials, int degree_bound, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<ScalarRat>> polys;
    polys.reserve(static_cast<std::size_t>(trials));
    for (int i = 0; i < trials; ++i) {
        const long long deg = rng.range(0, degree_bound);
        std::vector<ScalarRat> coeffs(static_cast<std::size_t>(deg) + 1);
        for (long long j = 0; j < deg; ++j)
            if (rng.range(0, 3) != 0) coeffs[static_cast<std::size_t>(j)] = random_scalar(rng);
        coeffs.back() = random_scalar(rng);  // forces degree exactly deg
        polys.push_back(std::move(coeffs));
    }
    VerifyReport r = verify_not_lie(polys);
    r.name = "not-lie";
    return r;
}

VerifyReport verify_phi_and_center(int samples, std::uint64_t seed) {
    Checker ck("phi-center");
    Rng rng(seed);
    for (int i = 0; i < samples; ++i) {
        const TorusElem x = random_torus_elem(rng, 3, 4);
        const TorusElem y = random_torus_elem(rng, 3, 4);
        ck.record(phi(phi(phi(x))) == x, [&] { return elem_payload("phi^3 != id", x); });
        ck.record(phi(x * y) == phi(x) * phi(y),
                  [&] { return elem_payload("phi not multiplicative", x * y); });
    }
    const TorusElem c = casimir();
    for (int k = 1; k <= 3; ++k) {
        const TorusElem br = bracket(c, gen_I(k));
        ck.record(br.is_zero(), [&] { return elem_payload("[C, I_k] != 0", br); });
    }
    for (int i = 0; i < 10; ++i) {
        FoElem x;
        x.add_term({static_cast<unsigned>(rng.range(0, 2)),
                    static_cast<unsigned>(rng.range(0, 2)),
                    static_cast<unsigned>(rng.range(0, 2))},
                   random_scalar(rng));
        const TorusElem br = bracket(c, embed(x));
        ck.record(br.is_zero(), [&] { return elem_payload("[C, embed(x)] != 0", br); });
    }
    return ck.finish();
}

std::vector<VerifyReport> run_suite(const SuiteOptions& o,
                                    const std::vector<std::string>& which) {
    auto selected = [&](const char* name) {
        if (which.empty()) return true;
        for (const auto& w : which)
            if (w == name) return true;
        return false;
    };
    std::vector<VerifyReport> out;
    if (selected("presentations")) out.push_back(verify_presentations(o.presentations_bound));
    if (selected("closed-forms"))
        out.push_back(verify_closed_forms(o.closed_bound, o.closed_random_cases,
                                          o.closed_random_bound, o.seed));
    if (selected("certificates")) out.push_back(verify_certificates(o.cert_bound));
    if (selected("casimir")) out.push_back(verify_casimir_gradation(o.casimir_nmax));
    if (selected("not-lie"))
        out.push_back(verify_not_lie_random(o.notlie_trials, o.notlie_degree, o.seed));
    if (selected("phi-center")) out.push_back(verify_phi_and_center(o.phi_samples, o.seed));
    return out;
}

std::string reports_to_json(const std::vector<VerifyReport>& reports) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        nlohmann::ordered_json j{{"name", r.name},
                                 {"passed", r.passed},
                                 {"cases", r.cases_run},
                                 {"elapsed_ms", r.elapsed_ms}};
        j["counterexample"] = r.counterexample
                                  ? nlohmann::json::parse(*r.counterexample)
                                  : nlohmann::json(nullptr);
        checks.push_back(std::move(j));
    }
    return nlohmann::ordered_json{{"checks", std::move(checks)}}.dump();
}

std::string reports_to_text(const std::vector<VerifyReport>& reports) {
    std::ostringstream os;
    for (const auto& r : reports) {
        os << (r.passed ? "PASS" : "FAIL") << "  " << r.name << "  (cases=" << r.cases_run
           << ", " << static_cast<long long>(r.elapsed_ms) << " ms)\n";
        if (r.counterexample) os << "      counterexample: " << *r.counterexample << "\n";
    }
    return os.str();
}

}  // namespace qtorus
