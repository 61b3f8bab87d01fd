#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "padic/numeric.hpp"

namespace padic {

// An odd prime p > 2. The even prime needs a separate treatment and is out
// of scope throughout.
class OddPrime {
public:
    explicit OddPrime(std::int64_t p);
    std::int64_t value() const { return p_; }
    friend bool operator==(OddPrime a, OddPrime b) { return a.p_ == b.p_; }
    friend bool operator!=(OddPrime a, OddPrime b) { return a.p_ != b.p_; }

private:
    std::int64_t p_;
};

// One of the three definite binary forms, or the unique definite ternary one.
enum class KappaLabel { MinusV, P, UP, Plus3 };

int dimension_of(KappaLabel label);
std::string kappa_name(KappaLabel label);
KappaLabel kappa_from_name(const std::string& name);

// An element of Z/p^nZ with its canonical representative in [0, p^n).
// Immutable value; arithmetic is closed over a fixed (p, level).
class ResidueInt {
public:
    ResidueInt(OddPrime p, int level, Int value);

    static ResidueInt zero(OddPrime p, int level) { return ResidueInt(p, level, 0); }
    static ResidueInt one(OddPrime p, int level) { return ResidueInt(p, level, 1); }

    std::int64_t prime() const { return p_; }
    int level() const { return level_; }
    const Int& value() const { return value_; }
    Int modulus() const { return pow_int(p_, level_); }
    bool is_zero() const { return value_ == 0; }
    bool is_unit() const { return value_ % p_ != 0; }

    friend ResidueInt operator+(const ResidueInt& a, const ResidueInt& b);
    friend ResidueInt operator-(const ResidueInt& a, const ResidueInt& b);
    friend ResidueInt operator*(const ResidueInt& a, const ResidueInt& b);
    ResidueInt operator-() const;

    // Multiplicative inverse; throws NonUnitError when p | value.
    ResidueInt inv() const;
    ResidueInt pow(std::uint64_t e) const;

    // Reduction to a coarser level (ring homomorphism); PrecisionExceeded if
    // target_level > level.
    ResidueInt project(int target_level) const;

    // Base-p digits, little-endian, exactly level() of them.
    std::vector<int> digits() const;
    std::string digit_string() const;

    friend bool operator==(const ResidueInt& a, const ResidueInt& b);
    friend bool operator!=(const ResidueInt& a, const ResidueInt& b) { return !(a == b); }

private:
    std::int64_t p_;
    int level_;
    Int value_;
};

// A truncated p-adic integer: the coherent sequence of its residues mod
// p^1, ..., p^N. Internally one canonical value mod p^N determines the whole
// tower; the validating constructor accepts an explicit residue sequence and
// checks coherence.
class PadicTower {
public:
    PadicTower(OddPrime p, int precision, Int value);

    // Validates r_{k+1} == r_k mod p^k for all k; throws StructureError on a
    // broken tower.
    static PadicTower from_residues(const std::vector<ResidueInt>& residues);
    static PadicTower from_digits(OddPrime p, const std::vector<int>& digits);

    std::int64_t prime() const { return p_; }
    int precision() const { return precision_; }
    ResidueInt at(int k) const;  // residue r_k, 1 <= k <= precision
    std::vector<ResidueInt> residues() const;
    std::vector<int> digits() const;
    std::string digit_string() const;

    friend PadicTower operator+(const PadicTower& a, const PadicTower& b);
    friend PadicTower operator-(const PadicTower& a, const PadicTower& b);
    friend PadicTower operator*(const PadicTower& a, const PadicTower& b);

    // Largest k with p^k dividing the represented value; ValuationUnknown
    // when every residue vanishes (only >= precision is certified).
    int valuation() const;
    Rat abs_p() const;  // p^{-valuation}

    friend bool operator==(const PadicTower& a, const PadicTower& b);

private:
    std::int64_t p_;
    int precision_;
    Int value_;  // canonical in [0, p^precision)
};

// Valuation of a nonzero exact integer.
int valuation_int(OddPrime p, const Int& x);
Rat abs_p_int(OddPrime p, const Int& x);  // |0|_p = 0

// The constants parametrising the definite forms: a non-square unit u and
// the sign constant v, both carried as literal integer representatives at
// every level (any lift of a non-residue unit stays a non-square).
struct FormConstants {
    std::int64_t p;
    std::int64_t u;  // smallest positive quadratic non-residue mod p
    std::int64_t v;  // -1 if p = 3 mod 4, -u if p = 1 mod 4

    std::int64_t minus_v() const { return -v; }

    // alpha_kappa in {-v, p, p/u} as a residue mod p^level; the p/u case is
    // the genuine residue p * u^{-1}.
    ResidueInt alpha(KappaLabel kappa, int level) const;

    // nu_p(alpha_kappa): 0 for -v, 1 for p and p/u.
    int alpha_valuation(KappaLabel kappa) const;
};

FormConstants find_constants(OddPrime p);

// Euler's criterion; a is a residue at level 1. 0 counts as a square.
bool is_square_mod_p(const ResidueInt& a);

}  // namespace padic
