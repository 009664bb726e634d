#include "qtorus/parser.hpp"

#include <cctype>
#include <cstdlib>

#include "qtorus/errors.hpp"
#include "qtorus/fo.hpp"

namespace qtorus {

ExprAst ExprAst::scalar_node(ScalarRat c) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Scalar;
    n->scalar = std::move(c);
    return ExprAst(std::move(n));
}

ExprAst ExprAst::zgen(int axis, long long exponent) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::ZGen;
    n->axis = axis;
    n->exponent = exponent;
    return ExprAst(std::move(n));
}

ExprAst ExprAst::fogen(int k) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::FoGen;
    n->axis = k;
    return ExprAst(std::move(n));
}

ExprAst ExprAst::casimir_ref() {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Casimir;
    return ExprAst(std::move(n));
}

ExprAst ExprAst::binary(Kind kind, ExprAst left, ExprAst right) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->children = {std::move(left), std::move(right)};
    return ExprAst(std::move(n));
}

ExprAst ExprAst::pow(ExprAst base, long long exponent) {
    auto n = std::make_shared<Node>();
    n->kind = Kind::Pow;
    n->exponent = exponent;
    n->children = {std::move(base)};
    return ExprAst(std::move(n));
}

ExprAst ExprAst::apply(Kind kind, ExprAst body) {
    auto n = std::make_shared<Node>();
    n->kind = kind;
    n->children = {std::move(body)};
    return ExprAst(std::move(n));
}

namespace {

class Parser {
public:
    explicit Parser(const std::string& input) : in_(input) {}

    ExprAst parse() {
        ExprAst e = expr();
        skip_ws();
        if (pos_ != in_.size()) fail("end of input");
        return e;
    }

private:
    [[noreturn]] void fail(const std::string& expected) {
        throw ParseError(pos_ + 1, expected);
    }

    void skip_ws() {
        while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < in_.size() && in_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos_ < in_.size() ? in_[pos_] : '\0';
    }

    long long integer() {
        skip_ws();
        bool neg = false;
        if (pos_ < in_.size() && (in_[pos_] == '-' || in_[pos_] == '+')) {
            neg = in_[pos_] == '-';
            ++pos_;
        }
        skip_ws();
        if (pos_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[pos_])))
            fail("integer");
        long long v = 0;
        while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_])))
            v = v * 10 + (in_[pos_++] - '0');
        return neg ? -v : v;
    }

    std::string ident() {
        skip_ws();
        std::string s;
        while (pos_ < in_.size() &&
               (std::isalnum(static_cast<unsigned char>(in_[pos_])))) {
            s += in_[pos_++];
        }
        return s;
    }

    ExprAst expr() {
        ExprAst acc = eat('-') ? ExprAst::binary(ExprAst::Kind::Sub,
                                                 ExprAst::scalar_node(ScalarRat(0)), term())
                               : term();
        for (;;) {
            if (eat('+'))
                acc = ExprAst::binary(ExprAst::Kind::Add, std::move(acc), term());
            else if (eat('-'))
                acc = ExprAst::binary(ExprAst::Kind::Sub, std::move(acc), term());
            else
                return acc;
        }
    }

    ExprAst term() {
        ExprAst acc = factor();
        for (;;) {
            if (eat('*'))
                acc = ExprAst::binary(ExprAst::Kind::Mul, std::move(acc), factor());
            else if (eat('/'))
                acc = ExprAst::binary(ExprAst::Kind::Div, std::move(acc), factor());
            else
                return acc;
        }
    }

    // exponent := int | "-" int | "(" int ["/2"] ")"; *half set when "/2" seen.
    long long exponent_tail(bool* half) {
        *half = false;
        if (eat('(')) {
            long long v = integer();
            if (eat('/')) {
                skip_ws();
                if (!eat('2')) fail("'2' in half exponent");
                *half = true;
            }
            if (!eat(')')) fail("')'");
            return v;
        }
        return integer();
    }

    ExprAst factor() {
        skip_ws();
        const std::size_t start = pos_;
        ExprAst base = atom();
        if (!eat('^')) return base;
        bool half = false;
        const long long e = exponent_tail(&half);
        // q and s fold into scalar powers of s at parse time.
        if (base.kind() == ExprAst::Kind::Scalar && scalar_base_ != 0) {
            long long s_exp;
            if (half) {
                if (scalar_base_ != 2) fail("half exponents are valid on q only");
                s_exp = e;
            } else {
                s_exp = e * scalar_base_;
            }
            scalar_base_ = 0;
            return ExprAst::scalar_node(ScalarRat::qpow(s_exp));
        }
        if (half) {
            pos_ = start;
            fail("half exponents are valid on q only");
        }
        if (base.kind() == ExprAst::Kind::ZGen)
            return ExprAst::zgen(base.axis(), base.exponent() * e);
        return ExprAst::pow(std::move(base), e);
    }

    ExprAst atom() {
        skip_ws();
        if (pos_ >= in_.size()) fail("expression");
        const char c = in_[pos_];
        scalar_base_ = 0;
        if (c == '(') {
            ++pos_;
            ExprAst e = expr();
            if (!eat(')')) fail("')'");
            return e;
        }
        if (c == '[') {
            ++pos_;
            ExprAst l = expr();
            if (!eat(',')) fail("','");
            ExprAst r = expr();
            if (!eat(']')) fail("']'");
            return ExprAst::binary(ExprAst::Kind::LieBr, std::move(l), std::move(r));
        }
        if (std::isdigit(static_cast<unsigned char>(c)))
            return ExprAst::scalar_node(ScalarRat(integer()));
        if (std::isalpha(static_cast<unsigned char>(c))) {
            const std::size_t at = pos_;
            const std::string name = ident();
            if (name == "z1") return ExprAst::zgen(1, 1);
            if (name == "z2") return ExprAst::zgen(2, 1);
            if (name == "z3") return ExprAst::zgen(3, 1);
            if (name == "I1") return ExprAst::fogen(1);
            if (name == "I2") return ExprAst::fogen(2);
            if (name == "I3") return ExprAst::fogen(3);
            if (name == "C") return ExprAst::casimir_ref();
            if (name == "q") {
                scalar_base_ = 2;  // q = s^2
                return ExprAst::scalar_node(ScalarRat::qpow(2));
            }
            if (name == "s") {
                scalar_base_ = 1;
                return ExprAst::scalar_node(ScalarRat::qpow(1));
            }
            if (name == "phi" || name == "pi") {
                if (!eat('(')) fail("'(' after " + name);
                ExprAst body = expr();
                if (!eat(')')) fail("')'");
                return ExprAst::apply(
                    name == "phi" ? ExprAst::Kind::PhiApp : ExprAst::Kind::PiApp,
                    std::move(body));
            }
            pos_ = at;
            fail("one of z1 z2 z3 I1 I2 I3 C q s phi pi");
        }
        fail("atom");
    }

    const std::string& in_;
    std::size_t pos_ = 0;
    // Set when the last atom was q (2) or s (1), so ^ can fold into s-powers.
    long long scalar_base_ = 0;
};

bool scalar_of(const TorusElem& x, ScalarRat* out) {
    if (x.is_zero()) {
        *out = ScalarRat::zero();
        return true;
    }
    if (x.size() == 1 && x.terms().begin()->first == Monomial{0, 0, 0}) {
        *out = x.terms().begin()->second;
        return true;
    }
    return false;
}

TorusElem invert_elem(const TorusElem& x) {
    if (x.size() != 1)
        throw DomainError("negative power of a non-invertible element");
    const auto& [t, c] = *x.terms().begin();
    const auto [twist, zero] = mono_mul(t, -t);
    (void)zero;
    return TorusElem::monomial(-t, (c * twist).inv());
}

}  // namespace

ExprAst parse_expr(const std::string& input) { return Parser(input).parse(); }

TorusElem eval_expr(const ExprAst& ast) {
    using Kind = ExprAst::Kind;
    switch (ast.kind()) {
        case Kind::Scalar:
            return TorusElem::unit().scaled(ast.scalar());
        case Kind::ZGen:
            return TorusElem::gen(ast.axis(), static_cast<int>(ast.exponent()));
        case Kind::FoGen:
            return gen_I(ast.axis());
        case Kind::Casimir:
            return casimir();
        case Kind::Add:
            return eval_expr(ast.children()[0]) + eval_expr(ast.children()[1]);
        case Kind::Sub:
            return eval_expr(ast.children()[0]) - eval_expr(ast.children()[1]);
        case Kind::Mul:
            return eval_expr(ast.children()[0]) * eval_expr(ast.children()[1]);
        case Kind::Div: {
            const TorusElem divisor = eval_expr(ast.children()[1]);
            ScalarRat c;
            if (!scalar_of(divisor, &c)) throw DomainError("division by a non-scalar");
            if (c.is_zero()) throw DomainError("division by zero");
            return eval_expr(ast.children()[0]).scaled(c.inv());
        }
        case Kind::Pow: {
            const TorusElem base = eval_expr(ast.children()[0]);
            const long long e = ast.exponent();
            if (e >= 0) return base.pow(e);
            return invert_elem(base).pow(-e);
        }
        case Kind::LieBr:
            return bracket(eval_expr(ast.children()[0]), eval_expr(ast.children()[1]));
        case Kind::PhiApp:
            return phi(eval_expr(ast.children()[0]));
        case Kind::PiApp:
            return pi_project(eval_expr(ast.children()[0]));
    }
    return {};
}

TorusElem eval_string(const std::string& input) { return eval_expr(parse_expr(input)); }

}  // namespace qtorus
