#pragma once

#include <gmpxx.h>

#include <string>

namespace dyadic {

/// Exact rational scalar. Always kept in canonical form (lowest terms,
/// positive denominator); every constructor path below canonicalizes.
using Rational = mpq_class;

/// Parses "num", "num/den" or "-num/den" (base 10). Rejects empty input,
/// zero denominators and any other malformed text with std::invalid_argument.
Rational parse_rational(const std::string& text);

/// Canonical text form: "num" when the denominator is 1, "num/den" otherwise.
std::string to_string(const Rational& x);

/// 2^e as an exact rational, e may be negative.
Rational pow2(long e);

/// x^e for nonnegative integer e (0^0 = 1).
Rational rational_pow(const Rational& x, unsigned long e);

/// True when x equals m * 2^e for integers m, e.
bool is_dyadic(const Rational& x);

} // namespace dyadic
