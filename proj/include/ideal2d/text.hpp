// Shared text grammar for ideals and polynomials.
//
// An ideal is a comma-separated list of generators. Each generator is a
// polynomial: terms joined by + or -, each term an optional rational
// coefficient "p/q*" followed by monomial factors "x^a*y^b" (exponent 1 and
// the final * may be omitted; absent variables mean exponent 0; a bare "1"
// or rational is a constant term). Whitespace is ignored.
#pragma once

#include <optional>
#include <string>

#include "ideal2d/localring.hpp"
#include "ideal2d/staircase.hpp"

namespace ideal2d {

/// Result of parsing an ideal: exactly one member is engaged. Input whose
/// generators are all single terms yields a monomial ideal.
struct ParsedIdeal {
  std::optional<MonomialIdeal> monomial;
  std::optional<PolynomialIdeal> polynomial;
};

/// Parses an ideal. Throws ParseError (with position) on malformed input,
/// including zero generators.
ParsedIdeal parse_ideal(const std::string& text);

/// Parses a single polynomial. Throws ParseError on malformed or zero input.
LocalPolynomial parse_polynomial(const std::string& text);

}  // namespace ideal2d
