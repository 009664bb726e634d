#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "qtorus/errors.hpp"

namespace qtorus {

using Int = mpz_class;

/// Polynomial in s with arbitrary-precision integer coefficients,
/// stored densely in ascending degree with no trailing zeros.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(long value) { if (value != 0) coeffs_.emplace_back(value); }
    explicit IntPoly(const Int& value) { if (value != 0) coeffs_.push_back(value); }

    static IntPoly monomial(int degree, Int coeff);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

    /// Degree, with deg(0) = -1.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    Int coeff(int d) const {
        return (d >= 0 && d <= degree()) ? coeffs_[static_cast<std::size_t>(d)] : Int(0);
    }
    const Int& leading() const { return coeffs_.back(); }

    IntPoly operator-() const;
    IntPoly operator+(const IntPoly& other) const;
    IntPoly operator-(const IntPoly& other) const;
    IntPoly operator*(const IntPoly& other) const;
    IntPoly operator*(const Int& k) const;

    bool operator==(const IntPoly& other) const { return coeffs_ == other.coeffs_; }

    /// GCD of all coefficients, positive; content(0) = 0.
    Int content() const;
    /// this / content, preserving the sign of the leading coefficient.
    IntPoly primitive_part() const;

    /// Exact division; the remainder must be zero.
    IntPoly divide_exact(const IntPoly& divisor) const;
    IntPoly divide_exact(const Int& k) const;

    /// Primitive positive-leading gcd over Q[s] (primitive PRS).
    static IntPoly gcd(IntPoly a, IntPoly b);

    /// Descending-degree rendering, e.g. "-s^6+3*s^4-3*s^2+1"; zero is "0".
    std::string to_string() const;

private:
    void trim();

    std::vector<Int> coeffs_;
};

/// Element of the field Q(s), s = q^{1/2}, as a canonical fraction:
/// gcd(num, den) = 1 over Q[s], the pair carries no common integer
/// content, and den has positive leading coefficient. Structural
/// equality therefore coincides with field equality.
class ScalarRat {
public:
    ScalarRat() : num_(), den_(1) {}
    ScalarRat(long value) : num_(value), den_(1) {}  // NOLINT: implicit by design
    ScalarRat(IntPoly num, IntPoly den);

    static ScalarRat zero() { return ScalarRat(); }
    static ScalarRat one() { return ScalarRat(1); }

    /// q^{k/2} = s^k for any integer k.
    static ScalarRat qpow(long k);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    ScalarRat operator-() const;
    ScalarRat operator+(const ScalarRat& other) const;
    ScalarRat operator-(const ScalarRat& other) const;
    ScalarRat operator*(const ScalarRat& other) const;

    /// Multiplicative inverse; throws ZeroInversion on zero.
    ScalarRat inv() const;

    /// Integer power; negative exponents go through inv().
    ScalarRat pow(long e) const;

    bool operator==(const ScalarRat& other) const {
        return num_ == other.num_ && den_ == other.den_;
    }

    /// Bit-exact textual form "(num)/(den)", e.g. "(-s^6+3*s^4-3*s^2+1)/(1)".
    std::string to_string() const;

private:
    void canonicalize();

    IntPoly num_;
    IntPoly den_;
};

/// 1 - q^k, the scalar whose invertibility encodes "q is not a root of
/// unity"; nonzero in Q(s) for every k != 0.
ScalarRat one_minus_qpow(long k);

}  // namespace qtorus
