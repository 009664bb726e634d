#include "qtorus/serialize.hpp"

#include <json.hpp>

namespace qtorus {

namespace {

// c = s^k exactly (coefficient 1)? Returns true and sets k.
bool as_unit_spower(const ScalarRat& c, long& k) {
    const IntPoly& num = c.num();
    const IntPoly& den = c.den();
    if (num.is_zero()) return false;
    if (num.leading() != 1 || den.leading() != 1) return false;
    for (int d = 0; d < num.degree(); ++d)
        if (num.coeff(d) != 0) return false;
    for (int d = 0; d < den.degree(); ++d)
        if (den.coeff(d) != 0) return false;
    k = num.degree() - den.degree();
    return true;
}

std::string qpow_pretty(long k) {
    if (k == 0) return "1";
    if (k % 2 == 0) {
        const long e = k / 2;
        if (e == 1) return "q";
        return e > 0 ? "q^" + std::to_string(e) : "q^(" + std::to_string(e) + ")";
    }
    return "q^(" + std::to_string(k) + "/2)";
}

std::string exponent_text(long long e) {
    return e >= 0 ? std::to_string(e) : "(" + std::to_string(e) + ")";
}

template <typename Term>
std::string gens_text(const Term& t, const char* names[3]) {
    // names ordered left-to-right as printed.
    const long long e[3] = {static_cast<long long>(t.h), static_cast<long long>(t.m),
                            static_cast<long long>(t.n)};
    std::string s;
    for (int i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[i];
        if (e[i] != 1) s += "^" + exponent_text(e[i]);
    }
    return s;
}

template <typename Elem>
std::string elem_text(const Elem& x, const char* names[3]) {
    if (x.terms().empty()) return "0";
    std::string out;
    for (const auto& [t, c] : x.terms()) {
        const bool negative = c.num().leading() < 0;
        const ScalarRat mag = negative ? -c : c;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        const std::string gens = gens_text(t, names);
        const std::string coeff = scalar_pretty(mag);
        if (gens.empty())
            out += coeff;
        else if (coeff == "1")
            out += gens;
        else
            out += coeff + "*" + gens;
    }
    return out;
}

template <typename Elem>
nlohmann::ordered_json elem_json(const Elem& x) {
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [t, c] : x.terms()) {
        terms.push_back({{"e", {static_cast<long long>(t.h), static_cast<long long>(t.m),
                                static_cast<long long>(t.n)}},
                         {"c", c.to_string()}});
    }
    return nlohmann::ordered_json{{"terms", std::move(terms)}};
}

}  // namespace

std::string scalar_pretty(const ScalarRat& c) {
    long k = 0;
    if (as_unit_spower(c, k)) return qpow_pretty(k);
    if (c.den().is_one() && c.num().degree() <= 0) return c.num().to_string();
    return c.to_string();
}

std::string to_text(const TorusElem& x) {
    static const char* names[3] = {"z3", "z2", "z1"};
    return elem_text(x, names);
}

std::string to_text(const FoElem& x) {
    static const char* names[3] = {"I1", "I2", "I3"};
    return elem_text(x, names);
}

std::string to_json(const TorusElem& x) { return elem_json(x).dump(); }

std::string to_json(const FoElem& x) {
    auto j = elem_json(x);
    j["algebra"] = "fo";
    return j.dump();
}

}  // namespace qtorus
