#pragma once

#include <vector>

#include "padic/core.hpp"
#include "padic/groups.hpp"

namespace padic {

// A function on Z_p constant on the cosets c + p^m Z_p, as the vector of its
// values over c in [0, p^m). All integrands in scope are of this shape, so
// every integral is a finite sum.
class LocallyConstantIntegrand {
public:
    LocallyConstantIntegrand(OddPrime p, int resolution, std::vector<Rat> values);

    std::int64_t prime() const { return p_; }
    int resolution() const { return resolution_; }
    const Rat& value_on_class(std::uint64_t c) const { return values_[c]; }
    std::size_t class_count() const { return values_.size(); }

private:
    std::int64_t p_;
    int resolution_;
    std::vector<Rat> values_;
};

// Haar integral over Z_p normalized so vol(Z_p) = 1: sum of the class values
// times p^{-m}.
Rat integrate_Zp(const LocallyConstantIntegrand& f);

// The chart density 1/|1 + alpha_kappa sigma^2|_p on one residue class of
// Z_p. Identically 1 there (the denominator is a unit on all of Z_p for the
// three labels); the unit check is asserted per class.
Rat density_kappa(KappaLabel kappa, OddPrime p, const ResidueInt& sigma_class);

// Integral of the density over the disc D_k(0) = p^{-k} Z_p, k <= 0,
// evaluated through the finite-sum integrator. Equals p^k.
Rat disc_density_integral(KappaLabel kappa, OddPrime p, int k);

// vol(S_m(0)) for m <= 0, through the integrator: p^m (1 - 1/p).
Rat circle_volume(OddPrime p, int m, int resolution);

// Total mass of the two coordinate charts: 1 + 1/p for kappa = -v, else 2.
// Computed as the sum of two disc integrals (the flipped chart contributes
// through the change of variables sigma = -1/(alpha tau)), then asserted
// against the closed form.
Rat normalization(KappaLabel kappa, OddPrime p);

// Exhaustive check, over sigma in Z/p^{n+1}Z and both branches at working
// level n+1, that R_kappa(sigma) is within p^{-n} of the identity exactly
// when the branch is principal and sigma == 0 mod p^n.
bool coordinate_ball_image(KappaLabel kappa, OddPrime p, int n);

struct MeasureComparison {
    KappaLabel kappa;
    std::int64_t p;
    int level;
    Rat integral_value;  // disc integral / chart normalization
    Rat counting_value;  // 1 / |G_{kappa,p^n}|
    bool equal;
};

// Prop-level coincidence of the two Haar pipelines on the ball B_{-n}(I).
MeasureComparison compare_measures(KappaLabel kappa, OddPrime p, int n, GroupFamily& family);

}  // namespace padic
