#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "padic/core.hpp"

namespace padic {

// A d x d matrix over Z/p^nZ, entries canonical in [0, p^n), row-major.
// The canonical encoding (base-p digit string, row-major, little-endian per
// entry) is injective and drives every table index and JSON dump.
class ResidueMatrix {
public:
    ResidueMatrix(OddPrime p, int level, int d);
    ResidueMatrix(OddPrime p, int level, int d, std::vector<Int> entries);

    static ResidueMatrix identity(OddPrime p, int level, int d);

    std::int64_t prime() const { return p_; }
    int level() const { return level_; }
    int dim() const { return d_; }
    Int modulus() const { return pow_int(p_, level_); }

    const Int& at(int i, int j) const { return e_[static_cast<std::size_t>(i * d_ + j)]; }
    void set(int i, int j, const Int& value);
    ResidueInt entry(int i, int j) const { return ResidueInt(OddPrime(p_), level_, at(i, j)); }

    friend ResidueMatrix operator*(const ResidueMatrix& a, const ResidueMatrix& b);
    ResidueMatrix operator-() const;
    Int det() const;  // explicit 2- and 6-term expansions; no division

    // Inverse of a matrix with det == 1 mod p^n, via the adjugate.
    ResidueMatrix inverse_unimodular() const;

    ResidueMatrix project(int target_level) const;

    std::string encode() const;
    static ResidueMatrix decode(OddPrime p, int level, int d, const std::string& digits);

    friend bool operator==(const ResidueMatrix& a, const ResidueMatrix& b);
    friend bool operator!=(const ResidueMatrix& a, const ResidueMatrix& b) { return !(a == b); }

private:
    std::int64_t p_;
    int level_;
    int d_;
    std::vector<Int> e_;

    void reduce();
};

}  // namespace padic
