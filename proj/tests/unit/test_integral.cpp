#include <doctest.h>

#include "padic/integral.hpp"

using namespace padic;

TEST_CASE("integrate_Zp basics") {
    OddPrime p5(5);
    // f == 1: vol(Z_p) = 1
    CHECK(integrate_Zp(LocallyConstantIntegrand(p5, 0, {Rat(1)})) == 1);

    // indicator of p Z_p at resolution 1: 1/p
    std::vector<Rat> ind(5, Rat(0));
    ind[0] = 1;
    CHECK(integrate_Zp(LocallyConstantIntegrand(p5, 1, ind)) == Rat(1, 5));

    // indicator of the unit circle: 1 - 1/p
    std::vector<Rat> units(5, Rat(1));
    units[0] = 0;
    CHECK(integrate_Zp(LocallyConstantIntegrand(p5, 1, units)) == Rat(4, 5));

    CHECK_THROWS_AS(LocallyConstantIntegrand(p5, 1, {Rat(1)}), StructureError);
}

TEST_CASE("density is identically 1 on Z_p") {
    for (std::int64_t p : {3, 5, 7}) {
        OddPrime prime(p);
        for (KappaLabel kappa : {KappaLabel::MinusV, KappaLabel::P, KappaLabel::UP}) {
            for (int c = 0; c < p; ++c)
                CHECK(density_kappa(kappa, prime, ResidueInt(prime, 1, c)) == 1);
        }
    }
}

TEST_CASE("disc integrals realize p^k") {
    for (std::int64_t p : {3, 5, 7}) {
        OddPrime prime(p);
        for (KappaLabel kappa : {KappaLabel::MinusV, KappaLabel::P, KappaLabel::UP}) {
            for (int k = 0; k >= -3; --k)
                CHECK(disc_density_integral(kappa, prime, k) == Rat(1, pow_int(p, -k)));
        }
    }
    CHECK_THROWS_AS(disc_density_integral(KappaLabel::P, OddPrime(3), 1), StructureError);
}

TEST_CASE("circle volumes and the finite geometric identity") {
    for (std::int64_t p : {3, 5, 7}) {
        OddPrime prime(p);
        for (int m = 0; m >= -2; --m)
            CHECK(circle_volume(prime, m, -m + 2) == Rat(Int(p - 1), pow_int(p, -m + 1)));

        // sum of circle volumes down to the resolution, plus the residual
        // class p^r Z_p, telescopes exactly to vol(D_k) = p^k
        int k = -1, r = 4;
        Rat total = Rat(1, pow_int(p, r));  // the single class of valuation >= r
        for (int m = k; m >= -r + 1; --m) total += circle_volume(prime, m, r);
        CHECK(total == Rat(1, pow_int(p, -k)));
    }
}

TEST_CASE("normalization constants") {
    CHECK(normalization(KappaLabel::P, OddPrime(5)) == 2);
    CHECK(normalization(KappaLabel::UP, OddPrime(7)) == 2);
    CHECK(normalization(KappaLabel::MinusV, OddPrime(3)) == Rat(4, 3));
    CHECK(normalization(KappaLabel::MinusV, OddPrime(7)) == Rat(8, 7));
}

TEST_CASE("substitution self-check: the unit circle is carried onto itself") {
    // sigma -> 1/(v sigma) maps units to units with unit Jacobian, so the
    // unit-circle volume can be computed on either side of the substitution.
    for (std::int64_t p : {3, 5, 7}) {
        OddPrime prime(p);
        FormConstants fc = find_constants(prime);
        int r = 3;
        Int pr = pow_int(p, r);
        Int vmod = mod_floor(Int(fc.v), pr);
        std::vector<bool> hit(pr.convert_to<std::size_t>(), false);
        Rat direct = 0, transported = 0;
        Rat class_vol = Rat(1, pr);
        for (Int c = 0; c < pr; ++c) {
            if (c % p == 0) continue;
            direct += class_vol;
            Int image = inv_mod(vmod * c, pr);
            hit[image.convert_to<std::size_t>()] = true;
            transported += class_vol;  // |d(1/(v sigma))|_p = |dsigma|_p on units
        }
        CHECK(direct == transported);
        // the image classes are exactly the unit classes
        for (Int c = 0; c < pr; ++c)
            CHECK(hit[c.convert_to<std::size_t>()] == (c % p != 0));
    }
}

TEST_CASE("coordinate ball images") {
    for (std::int64_t p : {3, 5}) {
        OddPrime prime(p);
        for (KappaLabel kappa : {KappaLabel::MinusV, KappaLabel::P, KappaLabel::UP}) {
            for (int n = 1; n <= 2; ++n) CHECK(coordinate_ball_image(kappa, prime, n));
        }
    }
    CHECK(coordinate_ball_image(KappaLabel::P, OddPrime(5), 2));
    CHECK(coordinate_ball_image(KappaLabel::MinusV, OddPrime(3), 1));
}

TEST_CASE("matrix distance to identity equals |sigma|_p on the principal chart") {
    for (std::int64_t p : {3, 5}) {
        OddPrime prime(p);
        int working = 3;
        Int pw = pow_int(p, working);
        for (KappaLabel kappa : {KappaLabel::MinusV, KappaLabel::P, KappaLabel::UP}) {
            for (Int s = 1; s < pw; ++s) {
                ResidueMatrix m =
                    rot2(kappa, BranchedParam{ResidueInt(prime, working, s), Branch::Principal});
                int sigma_val = valuation_int(prime, s);
                if (sigma_val >= working) continue;
                // max-norm valuation of R - I equals valuation of sigma
                ResidueMatrix id = ResidueMatrix::identity(prime, working, 2);
                int min_val = working;
                for (int i = 0; i < 2; ++i) {
                    for (int j = 0; j < 2; ++j) {
                        Int dv = mod_floor(m.at(i, j) - id.at(i, j), pw);
                        if (dv == 0) continue;
                        min_val = std::min(min_val, valuation_int(prime, dv));
                    }
                }
                CHECK(min_val == sigma_val);
            }
        }
    }
}

TEST_CASE("two-pipeline coincidence for the ball around the identity") {
    for (std::int64_t p : {3, 5, 7}) {
        OddPrime prime(p);
        for (KappaLabel kappa : {KappaLabel::MinusV, KappaLabel::P, KappaLabel::UP}) {
            GroupFamily family(descriptor_2d(kappa, prime));
            for (int n = 1; n <= 3; ++n) {
                MeasureComparison cmp = compare_measures(kappa, prime, n, family);
                CAPTURE(p);
                CAPTURE(n);
                CHECK(cmp.equal);
                CHECK(cmp.integral_value == cmp.counting_value);
            }
        }
    }
    // spot values
    GroupFamily f3(descriptor_2d(KappaLabel::P, OddPrime(3)));
    CHECK(compare_measures(KappaLabel::P, OddPrime(3), 1, f3).integral_value == Rat(1, 6));
    GroupFamily fv(descriptor_2d(KappaLabel::MinusV, OddPrime(3)));
    CHECK(compare_measures(KappaLabel::MinusV, OddPrime(3), 2, fv).integral_value == Rat(1, 12));
    GroupFamily fu(descriptor_2d(KappaLabel::UP, OddPrime(5)));
    CHECK(compare_measures(KappaLabel::UP, OddPrime(5), 1, fu).integral_value == Rat(1, 10));
}
