#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtorus/errors.hpp"
#include "qtorus/fo.hpp"
#include "qtorus/lie.hpp"
#include "qtorus/parser.hpp"
#include "qtorus/serialize.hpp"
#include "qtorus/torus.hpp"
#include "qtorus/verify.hpp"

namespace {

using namespace qtorus;

void print_elem(const TorusElem& x, bool json) {
    std::cout << (json ? to_json(x) : to_text(x)) << "\n";
}

// Word over the I-generators: "I2*I1*I3" or whitespace-separated letters.
std::vector<FoWord> parse_fo_word(const std::string& input) {
    FoWord w;
    std::size_t i = 0;
    while (i < input.size()) {
        const char c = input[i];
        if (c == ' ' || c == '\t' || c == '*') {
            ++i;
            continue;
        }
        if ((c == 'I' || c == 'i') && i + 1 < input.size() && input[i + 1] >= '1' &&
            input[i + 1] <= '3') {
            w.letters.push_back(static_cast<std::uint8_t>(input[i + 1] - '0'));
            i += 2;
            continue;
        }
        throw ParseError(i + 1, "I1, I2 or I3");
    }
    return {w};
}

int cmd_normalize(const std::string& expr, bool json) {
    print_elem(eval_string(expr), json);
    return 0;
}

int cmd_bracket(const std::string& a, const std::string& b, bool json) {
    print_elem(bracket(eval_string(a), eval_string(b)), json);
    return 0;
}

int cmd_grade(const std::string& expr, bool json) {
    const auto parts = lambda_decompose(eval_string(expr));
    if (json) {
        nlohmann::ordered_json out = nlohmann::ordered_json::object();
        for (const auto& [deg, comp] : parts)
            out[std::to_string(deg)] = nlohmann::json::parse(to_json(comp));
        std::cout << out.dump() << "\n";
    } else {
        if (parts.empty()) std::cout << "0\n";
        for (const auto& [deg, comp] : parts)
            std::cout << "Lambda_" << deg << ": " << to_text(comp) << "\n";
    }
    return 0;
}

int cmd_zcomponent(const std::string& expr, long long h, long long m, long long n,
                   bool json) {
    const ScalarRat c = eval_string(expr).component({h, m, n});
    if (json)
        std::cout << nlohmann::ordered_json{{"e", {h, m, n}}, {"c", c.to_string()}}.dump()
                  << "\n";
    else
        std::cout << scalar_pretty(c) << "\n";
    return 0;
}

int cmd_pi(const std::string& expr, bool json) {
    print_elem(pi_project(eval_string(expr)), json);
    return 0;
}

int cmd_inlq(const std::string& expr, bool json) {
    const LqMembership v = in_lq(eval_string(expr));
    if (json) {
        nlohmann::ordered_json out{{"in_lq", v.in_lq}};
        out["witness"] = v.in_lq ? nlohmann::json(nullptr)
                                 : nlohmann::json::parse(to_json(v.witness));
        std::cout << out.dump() << "\n";
    } else if (v.in_lq) {
        std::cout << "in L_q\n";
    } else {
        std::cout << "NOT in L_q; witness: " << to_text(v.witness) << "\n";
    }
    return 0;
}

int cmd_cert(long long h, long long m, long long n, bool json) {
    const LieExpr cert = cert_monomial(h, m, n);
    const TorusElem value = cert.eval();
    const TorusElem target = TorusElem::monomial({h, m, n});
    const bool ok = value == target;
    if (json) {
        nlohmann::ordered_json out{{"certificate", cert.to_string()},
                                   {"evaluates_to", nlohmann::json::parse(to_json(value))},
                                   {"verified", ok}};
        std::cout << out.dump() << "\n";
    } else {
        std::cout << cert.to_string() << "\n";
        if (ok)
            std::cout << "OK: evaluates to " << to_text(target) << "\n";
        else
            std::cout << "MISMATCH: evaluates to " << to_text(value) << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_fo_normalize(const std::string& word, bool json, bool rightmost) {
    const auto strategy =
        rightmost ? RewriteStrategy::RightmostFirst : RewriteStrategy::LeftmostFirst;
    const FoElem nf = fo_normalize(parse_fo_word(word), strategy);
    std::cout << (json ? to_json(nf) : to_text(nf)) << "\n";
    return 0;
}

int cmd_verify(const std::vector<std::string>& suites, const SuiteOptions& opts, bool json) {
    const auto reports = run_suite(opts, suites);
    std::cout << (json ? reports_to_json(reports) : reports_to_text(reports));
    for (const auto& r : reports)
        if (!r.passed) return 1;
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic computation in the quantum torus A_q and the embedded "
                 "Fairlie-Odesskii algebra U_q'(so3)"};
    app.require_subcommand(1);
    app.fallthrough();
    bool json = false;
    app.add_flag("--json", json, "Emit JSON instead of text");

    std::string expr, expr2, word;
    long long h = 0, m = 0, n = 0;

    auto* normalize = app.add_subcommand("normalize", "Print the normal form of EXPR");
    normalize->add_option("expr", expr)->required();

    auto* br = app.add_subcommand("bracket", "Print the commutator [E1, E2]");
    br->add_option("e1", expr)->required();
    br->add_option("e2", expr2)->required();

    auto* grade = app.add_subcommand("grade", "Print the total-degree decomposition of EXPR");
    grade->add_option("expr", expr)->required();

    auto* zcomp = app.add_subcommand("zcomponent",
                                     "Print the coefficient of z3^h z2^m z1^n in EXPR");
    zcomp->add_option("expr", expr)->required();
    zcomp->add_option("H", h)->required();
    zcomp->add_option("M", m)->required();
    zcomp->add_option("N", n)->required();

    auto* pi = app.add_subcommand("pi", "Print the diagonal projection of EXPR");
    pi->add_option("expr", expr)->required();

    auto* inlq_cmd = app.add_subcommand("inlq", "Decide membership of EXPR in L_q");
    inlq_cmd->add_option("expr", expr)->required();

    auto* cert = app.add_subcommand("cert",
                                    "Print a Lie certificate for z3^h z2^m z1^n and verify it");
    cert->add_option("H", h)->required();
    cert->add_option("M", m)->required();
    cert->add_option("N", n)->required();

    bool rightmost = false;
    auto* fonorm = app.add_subcommand("fo-normalize",
                                      "PBW normal form of a word over I1, I2, I3");
    fonorm->add_option("word", word)->required();
    fonorm->add_flag("--rightmost", rightmost, "Contract the rightmost redex first");

    SuiteOptions opts;
    std::vector<std::string> suites;
    auto* verify = app.add_subcommand("verify", "Replay the verification suites");
    verify->add_option("--suite", suites,
                       "presentations, closed-forms, certificates, casimir, not-lie, "
                       "phi-center (default: all)");
    int bound = -1, nmax = -1;
    verify->add_option("--bound", bound, "Exponent bound for the exhaustive suites");
    verify->add_option("--nmax", nmax, "Largest Casimir power checked");
    verify->add_option("--seed", opts.seed, "Seed for the randomized cases");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (bound >= 0) {
        opts.presentations_bound = bound;
        opts.closed_bound = bound;
        opts.cert_bound = bound;
    }
    if (nmax >= 0) opts.casimir_nmax = nmax;

    try {
        if (*normalize) return cmd_normalize(expr, json);
        if (*br) return cmd_bracket(expr, expr2, json);
        if (*grade) return cmd_grade(expr, json);
        if (*zcomp) return cmd_zcomponent(expr, h, m, n, json);
        if (*pi) return cmd_pi(expr, json);
        if (*inlq_cmd) return cmd_inlq(expr, json);
        if (*cert) return cmd_cert(h, m, n, json);
        if (*fonorm) return cmd_fo_normalize(word, json, rightmost);
        if (*verify) return cmd_verify(suites, opts, json);
    } catch (const qtorus::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
