#pragma once

// Text forms of integer polynomials.
//
// JSON literal: array of decimal strings in ascending powers,
//   x^2 - x + 5  <=>  ["5","-1","1"]
// Inline form (grammar):
//   poly   := ws [sign] term (sign term)* ws
//   term   := integer ['*'] 'x' ['^' digits] | 'x' ['^' digits] | integer
//   sign   := '+' | '-'
// Whitespace is allowed between tokens.

#include "phiirred/zpoly.hpp"

#include "json.hpp"

#include <string>
#include <string_view>

namespace phiirred {

/// Human-readable form, e.g. "x^4 - 6x^2 + 3"; the zero polynomial is "0".
std::string to_string(const IntPoly& f);

/// Throws std::invalid_argument with the offending position on bad input.
IntPoly parse_inline(std::string_view text);

nlohmann::json to_json_literal(const IntPoly& f);
/// Accepts strings of decimal digits and (for convenience) JSON integers.
IntPoly from_json_literal(const nlohmann::json& j);

Integer parse_integer(std::string_view text);
/// Integer from a JSON decimal string or JSON integer.
Integer integer_from_json(const nlohmann::json& j);

}  // namespace phiirred
