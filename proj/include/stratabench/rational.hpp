#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace strata {

// mpq_class keeps values canonical (reduced, positive denominator, 0 = 0/1)
// as long as every constructor from raw parts is followed by canonicalize().
using Rational = mpq_class;

// Accepts "n", "-n", "n/d"; throws std::invalid_argument on anything else
// or on a zero denominator.
Rational parse_rational(std::string_view text);

// "n" when the denominator is 1, else "n/d".
std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

// num/den, canonicalized; throws std::invalid_argument when den = 0.
Rational make_rational(long num, long den);

}  // namespace strata
