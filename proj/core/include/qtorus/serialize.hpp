#pragma once

#include <string>

#include "qtorus/fo.hpp"
#include "qtorus/torus.hpp"

namespace qtorus {

/// Human-readable one-line form, terms in descending (h,m,n) order,
/// e.g. "q^(-1/2)*z3*z1 + q^(1/2)*z3^(-1)*z1 + q^(-1/2)*z3^(-1)*z1^(-1)".
/// Output parses back through parse_expr to the same element.
std::string to_text(const TorusElem& x);
std::string to_text(const FoElem& x);

/// Bit-exact JSON: {"terms":[{"e":[h,m,n],"c":"(num)/(den)"}]}, terms in
/// descending (h,m,n) order; FoElem additionally carries "algebra":"fo".
std::string to_json(const TorusElem& x);
std::string to_json(const FoElem& x);

/// Pretty scalar used by to_text: pure powers of q render as q-sugar
/// ("q", "q^2", "q^(1/2)", "q^(-3/2)"), everything else as "(num)/(den)".
std::string scalar_pretty(const ScalarRat& c);

}  // namespace qtorus
