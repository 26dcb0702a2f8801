#pragma once

#include <string_view>

#include "deltaorder/equation.hpp"

namespace deltaorder {

/// Parses e.g. "(6z^2+19z+15) D^3 f(z) + (z+3) D^2 f(z) - D f(z) - f(z) = 0".
/// `D` and `Δ` are interchangeable, the unknown may be any lowercase letter
/// other than z (the same one in every term), multiplication may be
/// implicit. The right-hand side must be 0. Throws ParseError with a byte
/// offset. Grammar: docs/grammar.md.
GeneralForm parse_equation(std::string_view text);

/// A bare coefficient polynomial in z, e.g. "256 z (z-1)(z-2)".
Poly parse_polynomial(std::string_view text);

}  // namespace deltaorder
