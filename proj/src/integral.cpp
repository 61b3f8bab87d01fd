#include "padic/integral.hpp"

#include "padic/rotation.hpp"

namespace padic {

LocallyConstantIntegrand::LocallyConstantIntegrand(OddPrime p, int resolution, std::vector<Rat> values)
    : p_(p.value()), resolution_(resolution), values_(std::move(values)) {
    if (resolution < 0) throw StructureError("resolution must be >= 0");
    Int expected = pow_int(p_, resolution_);
    if (Int(values_.size()) != expected)
        throw StructureError("integrand needs exactly p^m class values");
}

Rat integrate_Zp(const LocallyConstantIntegrand& f) {
    Rat total = 0;
    for (std::size_t c = 0; c < f.class_count(); ++c) total += f.value_on_class(c);
    return total / Rat(pow_int(f.prime(), f.resolution()));
}

Rat density_kappa(KappaLabel kappa, OddPrime p, const ResidueInt& sigma_class) {
    if (sigma_class.prime() != p.value()) throw StructureError("sigma class prime mismatch");
    if (dimension_of(kappa) != 2) throw StructureError("density is defined for the d=2 labels");
    FormConstants fc = find_constants(p);
    // 1 + alpha sigma^2 mod p decides the norm on the whole class.
    ResidueInt alpha = fc.alpha(kappa, 1);
    ResidueInt s = sigma_class.project(1);
    ResidueInt den = ResidueInt::one(p, 1) + alpha * s * s;
    if (den.is_zero())
        throw StructureError("denominator not a unit on this class; cannot occur on Z_p");
    return Rat(1);
}

Rat disc_density_integral(KappaLabel kappa, OddPrime p, int k) {
    if (k > 0) throw StructureError("disc radii are restricted to k <= 0 here");
    int resolution = std::max(1, -k);
    Int pm = pow_int(p.value(), resolution);
    Int radius_divisor = pow_int(p.value(), -k);
    std::uint64_t classes = pm.convert_to<std::uint64_t>();
    std::vector<Rat> values(classes, Rat(0));
    for (std::uint64_t c = 0; c < classes; ++c) {
        if (Int(c) % radius_divisor != 0) continue;  // class outside D_k(0)
        values[c] = density_kappa(kappa, p, ResidueInt(p, resolution, c));
    }
    return integrate_Zp(LocallyConstantIntegrand(p, resolution, std::move(values)));
}

Rat circle_volume(OddPrime p, int m, int resolution) {
    if (m > 0) throw StructureError("circles of radius > 1 lie outside Z_p");
    if (resolution < -m + 1) throw StructureError("resolution too coarse to resolve the circle");
    Int pr = pow_int(p.value(), resolution);
    std::uint64_t classes = pr.convert_to<std::uint64_t>();
    Int exact = pow_int(p.value(), -m);
    Int finer = exact * p.value();
    std::vector<Rat> values(classes, Rat(0));
    for (std::uint64_t c = 0; c < classes; ++c) {
        Int cc(c);
        if (cc % exact == 0 && cc % finer != 0) values[c] = 1;  // valuation exactly -m
    }
    return integrate_Zp(LocallyConstantIntegrand(p, resolution, std::move(values)));
}

Rat normalization(KappaLabel kappa, OddPrime p) {
    if (dimension_of(kappa) != 2) throw StructureError("normalization is defined for d=2 labels");
    // Principal chart: sigma over Z_p. Flipped chart after the substitution
    // sigma = -1/(alpha tau): tau over Z_p for kappa in {p, up}, over pZ_p
    // for kappa = -v; the substituted integrand is the density again.
    Rat principal = disc_density_integral(kappa, p, 0);
    Rat flipped = (kappa == KappaLabel::MinusV) ? disc_density_integral(kappa, p, -1)
                                                : disc_density_integral(kappa, p, 0);
    Rat total = principal + flipped;
    Rat closed = (kappa == KappaLabel::MinusV) ? Rat(Int(p.value() + 1), Int(p.value())) : Rat(2);
    if (total != closed)
        throw StructureError("normalization mismatch: computed " + boost::multiprecision::numerator(total).str() +
                             "/" + boost::multiprecision::denominator(total).str());
    return total;
}

bool coordinate_ball_image(KappaLabel kappa, OddPrime p, int n) {
    if (n < 1) throw StructureError("coordinate_ball_image needs n >= 1");
    int working = n + 1;
    Int pw = pow_int(p.value(), working);
    Int pn = pow_int(p.value(), n);
    std::uint64_t count = pw.convert_to<std::uint64_t>();
    ResidueMatrix id_n = ResidueMatrix::identity(p, n, 2);

    auto in_ball = [&](const ResidueMatrix& m) { return m.project(n) == id_n; };

    for (std::uint64_t s = 0; s < count; ++s) {
        ResidueInt sigma(p, working, s);
        bool expected = (Int(s) % pn == 0);
        ResidueMatrix principal = rot2(kappa, BranchedParam{sigma, Branch::Principal});
        if (in_ball(principal) != expected) return false;
        // flipped-branch elements never reach the ball around I
        if (kappa == KappaLabel::MinusV) {
            if (Int(s) % p.value() != 0) continue;
        }
        ResidueMatrix flipped = rot2(kappa, BranchedParam{sigma, Branch::Flipped});
        if (in_ball(flipped)) return false;
    }
    return true;
}

MeasureComparison compare_measures(KappaLabel kappa, OddPrime p, int n, GroupFamily& family) {
    MeasureComparison out;
    out.kappa = kappa;
    out.p = p.value();
    out.level = n;
    out.integral_value = disc_density_integral(kappa, p, -n) / normalization(kappa, p);
    out.counting_value = Rat(1, Int(family.table(n).size()));
    out.equal = out.integral_value == out.counting_value;
    return out;
}

}  // namespace padic
