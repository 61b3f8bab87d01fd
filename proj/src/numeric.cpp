#include "padic/numeric.hpp"

#include <sstream>

namespace padic {

Int pow_int(std::int64_t base, int exp) {
    if (exp < 0) throw StructureError("pow_int: negative exponent");
    Int result = 1;
    Int b = base;
    while (exp > 0) {
        if (exp & 1) result *= b;
        b *= b;
        exp >>= 1;
    }
    return result;
}

Int mod_floor(const Int& x, const Int& m) {
    Int r = x % m;
    if (r < 0) r += m;
    return r;
}

Int inv_mod(const Int& a, const Int& m) {
    // Extended Euclid on (a mod m, m).
    Int r0 = m, r1 = mod_floor(a, m);
    Int t0 = 0, t1 = 1;
    while (r1 != 0) {
        Int q = r0 / r1;
        Int r2 = r0 - q * r1;
        r0 = r1;
        r1 = r2;
        Int t2 = t0 - q * t1;
        t0 = t1;
        t1 = t2;
    }
    if (r0 != 1) throw NonUnitError("inverse of a non-unit mod " + m.str());
    return mod_floor(t0, m);
}

bool is_prime_i64(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d <= n / d; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

char digit_char(int digit) {
    static const char* alphabet = "0123456789abcdefghijklmnopqrstuvwxyz";
    if (digit < 0 || digit > 35) throw StructureError("digit out of range for alphanumeric encoding");
    return alphabet[digit];
}

int digit_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'z') return c - 'a' + 10;
    throw StructureError(std::string("invalid digit character '") + c + "'");
}

std::string decimal_string(const Rat& value, int digits) {
    Int num = boost::multiprecision::numerator(value);
    Int den = boost::multiprecision::denominator(value);
    std::string sign;
    if (num < 0) {
        sign = "-";
        num = -num;
    }
    Int ip = num / den;
    Int rem = num % den;
    std::ostringstream out;
    out << sign << ip.str();
    if (digits > 0) {
        out << '.';
        for (int i = 0; i < digits; ++i) {
            rem *= 10;
            Int d = rem / den;
            rem %= den;
            out << d.str();
        }
    }
    return out.str();
}

}  // namespace padic
