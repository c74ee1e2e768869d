#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace arbor {

/// Exact fraction over arbitrary-precision integers, always kept canonical.
using Rational = mpq_class;

Rational make_rational(std::int64_t numerator, std::int64_t denominator = 1);

/// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);

/// Parses "p", "p/q" or "-p/q" (surrounding blanks allowed) and canonicalizes.
/// Throws InputError on anything else, including a zero denominator.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);

/// Smallest integer not below `value`. Throws InvariantError if it does not fit.
std::int64_t ceil_to_int64(const Rational& value);

/// Throws InvariantError when the value does not fit.
std::int64_t to_int64(const mpz_class& value);

}  // namespace arbor
