#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace polysec {

// Exact rational. mpq_class keeps values canonical (reduced, positive
// denominator) as long as every constructor path goes through parse_scalar
// or arithmetic.
using Scalar = mpq_class;

// Accepts "p" or "p/q" with an optional leading '-'. Throws
// Error(ParseError) on anything else, including a zero denominator.
Scalar parse_scalar(std::string_view text);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Scalar& value);

inline int sign(const Scalar& value) { return sgn(value); }

}  // namespace polysec
