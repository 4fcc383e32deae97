#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace octarep {

using Integer = mpz_class;
using Rational = mpq_class;

// "p" when the denominator is 1, otherwise "p/q" (always reduced).
std::string to_string(const Rational& r);
std::string to_string(const Integer& z);

// Accepts "p", "-p", "p/q". Throws ParseError on malformed input or q = 0.
Rational parse_rational(std::string_view text);

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// True when r is an integer that fits in int64.
bool fits_i64(const Rational& r);
bool fits_i64(const Integer& z);
std::int64_t to_i64(const Integer& z);

}  // namespace octarep
