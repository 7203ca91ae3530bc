#ifndef ARTIN_PARSE_HPP
#define ARTIN_PARSE_HPP

#include <string>
#include <vector>

#include "artin/poly.hpp"

namespace artin {

/// Parses the ASCII polynomial grammar:
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INT | VAR | VAR '^' INT | '(' expr ')'
///
/// Whitespace is insignificant. INT is a non-negative decimal, reduced
/// mod p. Implicit multiplication is not allowed, with one lexical
/// exception matching common mathematical notation: a run of letters
/// splits greedily into declared variable names ("yz^2" reads as y*z^2,
/// the exponent binding to the last name of the run).
///
/// Errors carry the offending position: syntax errors, unknown variables,
/// non-positive caps.
Poly parse_poly(const std::string& text, const std::vector<std::string>& vars, PrimeField field,
                int cap);

} // namespace artin

#endif
