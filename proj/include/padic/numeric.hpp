#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "padic/errors.hpp"

namespace padic {

// Arbitrary-precision backing for all residue values and measures. p^n can
// exceed any machine word; nothing in the library may overflow silently.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// p^n as an exact integer.
Int pow_int(std::int64_t base, int exp);

// Least non-negative representative of x mod m (m > 0).
Int mod_floor(const Int& x, const Int& m);

// Inverse of a mod m via extended Euclid; throws NonUnitError if gcd != 1.
Int inv_mod(const Int& a, const Int& m);

// Trial-division primality, enough for desk-scale p.
bool is_prime_i64(std::int64_t n);

// Digit character for a base-p digit. Alphanumeric for p <= 36.
char digit_char(int digit);
int digit_value(char c);

// Decimal expansion of an exact rational, round-toward-zero, for display.
std::string decimal_string(const Rat& value, int digits = 12);

}  // namespace padic
