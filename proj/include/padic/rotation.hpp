#pragma once

#include "padic/core.hpp"
#include "padic/matrix.hpp"

namespace padic {

// The two integer-parameter charts replacing sigma in Q_p union {infinity}.
// Flipped stands for the coset reached through the parameter at infinity.
enum class Branch { Principal, Flipped };

struct BranchedParam {
    ResidueInt sigma;
    Branch branch;

    friend bool operator==(const BranchedParam& a, const BranchedParam& b) {
        return a.sigma == b.sigma && a.branch == b.branch;
    }
};

enum class Axis { X, Y, Z };

// R_kappa(sigma) mod p^n for the d=2 groups. The denominator is a unit for
// every integer parameter, so only unit inversions occur (for kappa=up the
// fraction is cleared through u + p*sigma^2 first). Flipped returns the
// negated matrix; for kappa = -v that branch requires sigma == 0 mod p.
ResidueMatrix rot2(KappaLabel kappa, const BranchedParam& param);

// Reference-axis rotations of the d=3 group, embedded 2x2 blocks. The z-axis
// Flipped branch requires the parameter to vanish mod p; x and y branches
// are unrestricted.
ResidueMatrix rot3_axis(Axis axis, const BranchedParam& param);

struct CardanoTriple {
    BranchedParam xi;    // x-axis
    BranchedParam eta;   // y-axis
    BranchedParam zeta;  // z-axis

    int level() const { return xi.sigma.level(); }
    std::int64_t prime() const { return xi.sigma.prime(); }

    friend bool operator==(const CardanoTriple& a, const CardanoTriple& b) {
        return a.xi == b.xi && a.eta == b.eta && a.zeta == b.zeta;
    }
};

// R_x R_y R_z mod p^n.
ResidueMatrix cardano_compose(const CardanoTriple& t);

// The other decomposition of the same group element: flip the x branch
// keeping xi; flip the y branch negating eta; for z, flip the branch when
// zeta == 0 mod p, otherwise keep it and send zeta to 1/(v*zeta). An
// involution on triples.
CardanoTriple cardano_partner(const CardanoTriple& t);

}  // namespace padic
