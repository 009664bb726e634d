#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "qtorus/torus.hpp"

namespace qtorus {

/// Exponent triple of the PBW basis monomial I1^h I2^m I3^n of U_q'(so3).
struct FoMonomial {
    unsigned h = 0;
    unsigned m = 0;
    unsigned n = 0;

    friend auto operator<=>(const FoMonomial&, const FoMonomial&) = default;
};

/// Element of the abstract Fairlie-Odesskii algebra in the PBW basis.
class FoElem {
public:
    using TermMap = std::map<FoMonomial, ScalarRat, std::greater<FoMonomial>>;

    FoElem() = default;

    static FoElem zero() { return {}; }
    static FoElem unit() { return monomial({0, 0, 0}); }
    static FoElem monomial(const FoMonomial& t, ScalarRat c = ScalarRat(1));
    /// The generator I_k as an element.
    static FoElem gen(int k);

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    FoElem operator+(const FoElem& other) const;
    FoElem operator-(const FoElem& other) const;
    FoElem scaled(const ScalarRat& c) const;

    bool operator==(const FoElem& other) const { return terms_ == other.terms_; }

    void add_term(const FoMonomial& t, const ScalarRat& c);

private:
    TermMap terms_;
};

/// Scalar multiple of a word over the generators; letters are 1, 2, 3
/// standing for I1, I2, I3. Arbitrary words are valid rewriter input.
struct FoWord {
    ScalarRat coeff = ScalarRat(1);
    std::vector<std::uint8_t> letters;
};

/// Which reducible adjacent pair the rewriter contracts next. The Diamond
/// Lemma guarantees both strategies reach the same normal form; keeping
/// both makes that checkable.
enum class RewriteStrategy { LeftmostFirst, RightmostFirst };

/// PBW normal form of a linear combination of words, by exhaustive
/// application of
///   I2 I1 -> q I1 I2 - q^{1/2} I3
///   I3 I2 -> q I2 I3 - q^{1/2} I1
///   I3 I1 -> q^{-1} I1 I3 + q^{-1/2} I2.
FoElem fo_normalize(const std::vector<FoWord>& words,
                    RewriteStrategy strategy = RewriteStrategy::LeftmostFirst);

/// Product in U_q'(so3): concatenate PBW monomials as words and renormalize.
FoElem fo_mul(const FoElem& x, const FoElem& y);

/// G_k in normal-ordered torus coordinates, k in {1,2,3}.
TorusElem gen_G(int k);

/// Image of I_k under the embedding, G_k / (q - q^{-1}).
TorusElem gen_I(int k);

/// Embedding U_q'(so3) -> A_q: I1^h I2^m I3^n maps to the torus product
/// gen_I(1)^h gen_I(2)^m gen_I(3)^n, extended linearly.
TorusElem embed(const FoElem& x);

/// Torus image of the Casimir element
///   C = -q^{1/2}(q-q^{-1}) I1 I2 I3 + q I1^2 + q^{-1} I2^2 + q I3^2,
/// cross-checked on first use against the identity
///   q^{-5/2}(q^2-1)^2 C = -G1 G2 G3 + q^{1/2} G1^2 + q^{-3/2} G2^2 + q^{1/2} G3^2.
TorusElem casimir();

/// sum_j coeffs[j] * C^j with C^0 = I, in torus coordinates.
TorusElem poly_in_casimir(const std::vector<ScalarRat>& coeffs);

}  // namespace qtorus
