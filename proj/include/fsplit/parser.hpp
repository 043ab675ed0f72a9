#pragma once

#include <string_view>

#include "fsplit/polynomial.hpp"

namespace fsplit {

// Parses an expression such as "(y^2-x^3-x^2)^(p-1)" into a polynomial of
// `ring`. Precedence, tightest first: ^, unary minus, * (or juxtaposition),
// binary + and -. Exponents are integer expressions in literals and the
// symbol `p`, which is bound to the ring's prime; in polynomial position `p`
// is the constant p = 0. Errors raise ParseError with a byte offset.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

}  // namespace fsplit
