#pragma once

#include <span>
#include <vector>

#include "padic/core.hpp"
#include "padic/matrix.hpp"

namespace padic {

// Diagonal matrix of a definite quadratic form. Entries are exact integers
// (positive: -v is 1 or u), so one form serves all levels; reduction happens
// at evaluation time.
struct DiagonalForm {
    KappaLabel label;
    std::int64_t p;
    std::vector<std::int64_t> entries;

    int dim() const { return static_cast<int>(entries.size()); }
};

// diag(1,-v), diag(1,p), diag(u,p) for d=2; diag(1,-v,p) for d=3.
DiagonalForm form_matrix(KappaLabel label, OddPrime p);

// Q(x) = sum a_i x_i^2 mod p^level.
ResidueInt evaluate(const DiagonalForm& q, std::span<const ResidueInt> x);

// L^T A L == A and det L == 1, both mod p^level.
bool is_special_orthogonal(const ResidueMatrix& l, const DiagonalForm& q);

// Definiteness certificate: no x in [0,p)^d \ {0} has p^2 | Q(x). For the
// diagonal shapes here this is exactly "the unit-coefficient sub-form is
// anisotropic mod p and the p-coefficient coordinate vanishes", which holds
// for all four forms at every odd p and fails for indefinite fixtures like
// diag(1,-1).
bool definiteness_witness_mod_p(const DiagonalForm& q);

// Test fixture: an indefinite diagonal form (not one of the classified
// definite ones). Negative-control input for the witness above.
DiagonalForm indefinite_fixture(OddPrime p);

}  // namespace padic
