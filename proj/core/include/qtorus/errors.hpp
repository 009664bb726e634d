#pragma once

#include <stdexcept>
#include <string>

namespace qtorus {

// Inversion of the zero element of Q(s).
class ZeroInversion : public std::domain_error {
public:
    ZeroInversion() : std::domain_error("inverse of zero in Q(s)") {}
};

// Generator index outside {1,2,3}.
class IndexOutOfRange : public std::out_of_range {
public:
    explicit IndexOutOfRange(int k)
        : std::out_of_range("generator index " + std::to_string(k) + " not in {1,2,3}") {}
};

// Requested a Lie certificate for a diagonal monomial z3^h z2^h z1^h,
// which is not a member of L_q.
class DiagonalNotInLq : public std::domain_error {
public:
    explicit DiagonalNotInLq(long long h)
        : std::domain_error("diagonal monomial (h,h,h) with h = " + std::to_string(h) +
                            " is not in L_q") {}
};

// Certificate requested for a generator pair other than (3,2), (3,1), (2,1).
class InvalidPair : public std::invalid_argument {
public:
    InvalidPair(int a, int b)
        : std::invalid_argument("unsupported generator pair (" + std::to_string(a) + "," +
                                std::to_string(b) + ")") {}
};

// All-zero coefficient list where a nonzero polynomial is required.
class ZeroPolynomial : public std::invalid_argument {
public:
    ZeroPolynomial() : std::invalid_argument("polynomial has no nonzero coefficient") {}
};

// Surface-syntax error; carries the byte offset of the failure.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t position, const std::string& expected)
        : std::runtime_error("parse error at position " + std::to_string(position) +
                             ": expected " + expected),
          position_(position),
          expected_(expected) {}

    std::size_t position() const { return position_; }
    const std::string& expected() const { return expected_; }

private:
    std::size_t position_;
    std::string expected_;
};

// Semantically invalid expression (e.g. negative power of a non-invertible
// element, division by a non-scalar).
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

}  // namespace qtorus
