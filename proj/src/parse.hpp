/**
 * @file parse.hpp
 * @brief Text input: the polynomial expression grammar and frame
 *        declarations.
 *
 * Expression grammar: signed integer literals, identifiers, `+ - * ^`,
 * parentheses; whitespace insignificant; implicit multiplication disallowed.
 * Exponents are nonnegative integer literals.  As a convenience beyond the
 * base grammar, `/` is accepted when the divisor is a nonzero constant.
 *
 * Identifiers resolve against the frame's variable names; the transcendental
 * `t` (over F_p(t)) and the extension generator `w` (over F_{p^e}) are
 * reserved constants and may not double as variable names.
 */
#pragma once

#include <string>

#include "poly.hpp"

namespace sing {

/// Parse a polynomial in the frame's variables over F.
Poly parse_poly(const std::string& text, const Field* F, const Frame& frame);

/// Parse a frame declaration "u1,u2|y1" (u-block, then optional y-block).
/// Without a '|' every variable lands in the u-block.  Precision is taken
/// from the caller, not the text.
Frame parse_frame(const std::string& text, unsigned N);

}  // namespace sing
