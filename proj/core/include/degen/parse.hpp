#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "degen/poly.hpp"

namespace degen {

struct ParseError : std::runtime_error {
  ParseError(size_t offset, const std::string& message)
      : std::runtime_error("parse error at byte " + std::to_string(offset) + ": " + message),
        offset(offset) {}
  size_t offset;
};

/// Parses either an expression ("X^4 - 2X^2 - 2", "2x + x", "3*X") or a
/// coefficient list ("coeffs: 3,0,-2", descending, a_0 first).  Like terms
/// combine; whitespace is ignored.  Throws ParseError with a byte offset.
IntPoly parse_poly(std::string_view text);

/// Canonical rendering accepted back by parse_poly (round-trip identity).
std::string render_poly(const IntPoly& f);

/// Characteristic polynomial X^n - a_1 X^(n-1) - ... - a_n of the linear
/// recurrence with coefficients a_1..a_n.  Pre: a nonempty, a_n != 0.
IntPoly recurrence_to_charpoly(const std::vector<Int>& a);

}  // namespace degen
