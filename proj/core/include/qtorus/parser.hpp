#pragma once

#include <memory>
#include <string>
#include <vector>

#include "qtorus/torus.hpp"

namespace qtorus {

/// Surface-syntax AST. Grammar (whitespace-insensitive):
///   expr   := ["-"] term (("+"|"-") term)*
///   term   := factor (("*"|"/") factor)*
///   factor := atom ("^" exponent)?
///   atom   := "z1"|"z2"|"z3"|"I1"|"I2"|"I3"|"C"|"q"|"s"|integer
///           | "(" expr ")" | "[" expr "," expr "]"
///           | "phi(" expr ")" | "pi(" expr ")"
///   exponent := integer | "(" integer ")" | "(" integer "/2" ")"
/// Multiplication is always explicit; "/2" exponents are valid on q only
/// and are read as powers of s = q^{1/2}.
class ExprAst {
public:
    enum class Kind {
        Scalar,    // literal integer, or a power of q/s folded at parse time
        ZGen,      // z_axis^exponent
        FoGen,     // I_k
        Casimir,   // C
        Add, Sub, Mul, Div,
        Pow,       // base ^ integer exponent
        LieBr,     // [a, b]
        PhiApp, PiApp,
    };

    Kind kind() const { return node_->kind; }
    const ScalarRat& scalar() const { return node_->scalar; }
    int axis() const { return node_->axis; }
    long long exponent() const { return node_->exponent; }
    const std::vector<ExprAst>& children() const { return node_->children; }

    static ExprAst scalar_node(ScalarRat c);
    static ExprAst zgen(int axis, long long exponent);
    static ExprAst fogen(int k);
    static ExprAst casimir_ref();
    static ExprAst binary(Kind kind, ExprAst left, ExprAst right);
    static ExprAst pow(ExprAst base, long long exponent);
    static ExprAst apply(Kind kind, ExprAst body);

private:
    struct Node {
        Kind kind;
        ScalarRat scalar;
        int axis = 0;
        long long exponent = 0;
        std::vector<ExprAst> children;
    };

    explicit ExprAst(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Throws ParseError (with 1-based position) on malformed input.
ExprAst parse_expr(const std::string& input);

/// Semantic evaluation into A_q; I-generators and C expand through the
/// embedding. Throws DomainError on negative powers of non-invertible
/// elements and on division by non-scalars or zero.
TorusElem eval_expr(const ExprAst& ast);

/// parse + eval in one step.
TorusElem eval_string(const std::string& input);

}  // namespace qtorus
