#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace bfc {

// All bound computations run on exact arbitrary-precision rationals.
using Rational = mpq_class;
using Integer = mpz_class;

/// Canonicalized rational num/den. den must be nonzero.
Rational make_rational(long num, long den = 1);

/// Parses "n" or "n/d" (base 10, optional leading '-'). Throws InputError on
/// malformed text or zero denominator.
Rational parse_rational(const std::string& text);

/// Canonical "n" or "n/d" rendering.
std::string to_string(const Rational& q);

/// 2^e as an exact rational; e may be negative.
Rational pow2(int e);

/// base^exp over arbitrary-precision integers.
Integer ipow(unsigned long base, unsigned long exp);

/// Smallest decimal with `digits` fractional digits that is >= q, rendered
/// with trailing zeros (and a trailing '.') trimmed. Every printed bound
/// therefore remains an upper bound on the exact value.
std::string decimal_ceil(const Rational& q, int digits);

}  // namespace bfc
