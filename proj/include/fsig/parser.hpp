#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "fsig/polynomial.hpp"

namespace fsig {

// Grammar (whitespace ignored):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := INT | VAR ('^' INT)?
// INT is a non-negative decimal integer, reduced mod p when it is a
// coefficient. Throws ParseError (with byte offset) on malformed input or an
// undeclared variable, OverflowError when an exponent reaches 2^31.
Polynomial parse_polynomial(std::string_view text, const PolyRing& ring);

// Comma separated list of polynomials; an empty or all-blank string yields an
// empty list. Offsets in errors refer to the whole string.
std::vector<Polynomial> parse_polynomial_list(std::string_view text, const PolyRing& ring);

// Inverse of parse_polynomial: "3*x^2*y + z + 2", "0" for zero.
std::string render(const Polynomial& f, const PolyRing& ring);

// Variable name rule: a letter followed by letters or digits.
bool is_valid_variable_name(std::string_view name) noexcept;

}  // namespace fsig
