#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace dualcoh {

// Exact rational coefficient. mpq_class keeps values canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// Always "a/b", including "n/1" for integers.
std::string to_string(const Rational& q);

// Accepts "a/b" or "a". Throws std::invalid_argument on malformed input or a
// zero denominator.
Rational parse_rational(std::string_view text);

}  // namespace dualcoh
