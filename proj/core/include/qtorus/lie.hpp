#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qtorus/torus.hpp"

namespace qtorus {

/// The six admissible leaves of a Lie polynomial in the torus generators.
enum class Gen { z1, z2, z3, z1_inv, z2_inv, z3_inv };

int gen_axis(Gen g);       // 1, 2 or 3
int gen_exponent(Gen g);   // +1 or -1
Gen make_gen(int axis, int exponent);

/// Immutable expression tree over generator leaves with brackets, scalar
/// multiples and sums. Evaluating any such tree lands in L_q.
class LieExpr {
public:
    enum class Kind { Leaf, Bracket, Scale, Sum };

    static LieExpr leaf(Gen g);
    static LieExpr bracket(LieExpr left, LieExpr right);
    static LieExpr scale(ScalarRat c, LieExpr body);  // c must be nonzero
    static LieExpr sum(std::vector<LieExpr> parts);

    Kind kind() const { return node_->kind; }
    Gen gen() const { return node_->gen; }
    const ScalarRat& coeff() const { return node_->coeff; }
    const std::vector<LieExpr>& children() const { return node_->children; }

    /// Evaluation in A_q through the induced bracket [U,V] = UV - VU.
    TorusElem eval() const;

    /// Leaf relabeling z1 -> z2 -> z3 -> z1 (inverses alike); commutes with
    /// evaluation: lie_phi(e).eval() == phi(e.eval()).
    LieExpr map_phi() const;

    /// Certificate text: [a,b], c * body, parts joined by " + ",
    /// leaves z1 .. z3^-1. Round-trips through the expression parser.
    std::string to_string() const;

private:
    struct Node {
        Kind kind;
        Gen gen = Gen::z1;
        ScalarRat coeff;
        std::vector<LieExpr> children;
    };

    explicit LieExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// (ad base)^count applied to body, as a right-nested bracket chain.
LieExpr ad_pow(const LieExpr& base, long count, LieExpr body);

/// The seed certificate (1-q)^{-3} [z3,[z2,[z2,z1]]], evaluating to z3 z2^2 z1.
LieExpr cert_comm0();

/// Certificate for z3^{-1} z2^{-2} z1^T, any integer T.
LieExpr cert_commT(long long T);

/// Certificate for z_axis^h, h != 0; |h| = 1 shortcuts to a leaf.
/// Throws DiagonalNotInLq for h = 0.
LieExpr cert_single_power(int axis, long long h);

/// Certificate for the two-generator monomial with exponents (a, b) on the
/// generator pair (3,2), (3,1) or (2,1); a, b nonzero.
LieExpr cert_pair(int first, int second, long long a, long long b);

/// Certificate for z3^h z2^m z1^n with coefficient exactly 1, for any
/// non-diagonal exponent triple. Throws DiagonalNotInLq when h = m = n.
LieExpr cert_monomial(long long h, long long m, long long n);

}  // namespace qtorus
