#include <doctest.h>

#include "padic/core.hpp"

using namespace padic;

TEST_CASE("odd prime validation") {
    CHECK_NOTHROW(OddPrime(3));
    CHECK_NOTHROW(OddPrime(104729));
    CHECK_THROWS_AS(OddPrime(2), StructureError);
    CHECK_THROWS_AS(OddPrime(4), StructureError);
    CHECK_THROWS_AS(OddPrime(1), StructureError);
    CHECK_THROWS_AS(OddPrime(-7), StructureError);
}

TEST_CASE("residue arithmetic canonical results") {
    OddPrime p3(3), p5(5);
    // 5 + 7 = 12 = 3 mod 9
    CHECK((ResidueInt(p3, 2, 5) + ResidueInt(p3, 2, 7)).value() == 3);
    // 4 * 7 = 28 = 1 mod 9
    CHECK((ResidueInt(p3, 2, 4) * ResidueInt(p3, 2, 7)).value() == 1);
    // 2 - 4 = -2 = 3 mod 5
    CHECK((ResidueInt(p5, 1, 2) - ResidueInt(p5, 1, 4)).value() == 3);
}

TEST_CASE("residue arithmetic rejects mixed rings") {
    OddPrime p3(3), p5(5);
    CHECK_THROWS_AS(ResidueInt(p3, 2, 1) + ResidueInt(p3, 1, 1), StructureError);
    CHECK_THROWS_AS(ResidueInt(p3, 1, 1) * ResidueInt(p5, 1, 1), StructureError);
}

TEST_CASE("residue inversion") {
    OddPrime p3(3), p7(7);
    CHECK(ResidueInt(p3, 2, 2).inv().value() == 5);  // 2*5 = 10 = 1 mod 9
    CHECK(ResidueInt(p7, 1, 3).inv().value() == 5);  // 15 = 1 mod 7
    CHECK_THROWS_AS(ResidueInt(p3, 2, 3).inv(), NonUnitError);
    // inv really is two-sided
    ResidueInt a(p7, 3, 45);
    CHECK((a * a.inv()).value() == 1);
}

TEST_CASE("projection is a ring homomorphism (exhaustive p=3, levels <= 3)") {
    OddPrime p3(3);
    for (int l = 1; l <= 3; ++l) {
        for (int n = 1; n <= l; ++n) {
            Int pl = pow_int(3, l);
            for (Int a = 0; a < pl; ++a) {
                for (Int b = 0; b < pl; ++b) {
                    ResidueInt x(p3, l, a), y(p3, l, b);
                    CHECK((x + y).project(n) == x.project(n) + y.project(n));
                    CHECK((x * y).project(n) == x.project(n) * y.project(n));
                }
            }
        }
    }
}

TEST_CASE("projection edge cases") {
    OddPrime p3(3);
    ResidueInt x(p3, 3, 25);
    CHECK(x.project(2).value() == 7);  // 25 mod 9
    CHECK(x.project(3) == x);
    // transitivity
    CHECK(x.project(2).project(1) == x.project(1));
    CHECK_THROWS_AS(x.project(4), PrecisionExceeded);
}

TEST_CASE("valuation and p-adic absolute value") {
    OddPrime p3(3), p5(5);
    CHECK(valuation_int(p3, 18) == 2);  // 18 = 2*3^2
    CHECK(abs_p_int(p3, 18) == Rat(1, 9));
    CHECK(valuation_int(p5, 7) == 0);
    CHECK(abs_p_int(p5, 7) == 1);
    CHECK(abs_p_int(p5, 0) == 0);
    CHECK_THROWS_AS(valuation_int(p3, 0), StructureError);
}

TEST_CASE("valuation multiplicativity and strong triangle inequality") {
    OddPrime p3(3);
    for (int x = 1; x <= 60; ++x) {
        for (int y = 1; y <= 60; ++y) {
            CHECK(abs_p_int(p3, Int(x) * y) == abs_p_int(p3, x) * abs_p_int(p3, y));
            Rat lhs = abs_p_int(p3, Int(x) + y);
            CHECK(lhs <= std::max(abs_p_int(p3, x), abs_p_int(p3, y)));
        }
    }
}

TEST_CASE("towers: coherence, arithmetic, digits") {
    OddPrime p3(3);
    PadicTower t(p3, 4, 25);  // 25 = 1 + 2*3 + 2*9
    CHECK(t.digits() == std::vector<int>{1, 2, 2, 0});
    CHECK(t.digit_string() == "1220");
    CHECK(t.at(2).value() == 7);

    // arithmetic preserves coherence (validating constructor accepts results)
    PadicTower u(p3, 4, 58);
    for (const PadicTower& w : {t + u, t - u, t * u}) CHECK_NOTHROW(PadicTower::from_residues(w.residues()));

    // explicit incoherent sequence rejected
    std::vector<ResidueInt> broken{ResidueInt(p3, 1, 1), ResidueInt(p3, 2, 2)};
    CHECK_THROWS_AS(PadicTower::from_residues(broken), StructureError);

    // digit round trip
    CHECK(PadicTower::from_digits(p3, {1, 2, 2, 0}) == t);
}

TEST_CASE("tower level access bounds") {
    PadicTower t(OddPrime(3), 3, 10);
    CHECK_THROWS_AS(t.at(4), PrecisionExceeded);
    CHECK_THROWS_AS(t.at(0), PrecisionExceeded);
    CHECK(t.at(3).value() == 10);
}

TEST_CASE("tower valuation") {
    OddPrime p3(3);
    CHECK(PadicTower(p3, 4, 18).valuation() == 2);
    CHECK(PadicTower(p3, 4, 18).abs_p() == Rat(1, 9));
    CHECK_THROWS_AS(PadicTower(p3, 4, 0).valuation(), ValuationUnknown);
    try {
        PadicTower(p3, 4, 0).valuation();
    } catch (const ValuationUnknown& e) {
        CHECK(e.lower_bound == 4);
    }
}

TEST_CASE("find_constants for small primes") {
    FormConstants c3 = find_constants(OddPrime(3));
    CHECK(c3.u == 2);
    CHECK(c3.v == -1);
    CHECK(c3.minus_v() == 1);

    FormConstants c5 = find_constants(OddPrime(5));
    CHECK(c5.u == 2);
    CHECK(c5.v == -2);  // 5 = 1 mod 4, so v = -u

    FormConstants c7 = find_constants(OddPrime(7));
    CHECK(c7.u == 3);  // squares mod 7 are {1, 2, 4}
    CHECK(c7.v == -1);
}

TEST_CASE("constants: u is a non-residue, v a non-square unit, for all odd p <= 50") {
    for (std::int64_t p = 3; p <= 50; ++p) {
        if (!is_prime_i64(p)) continue;
        OddPrime prime(p);
        FormConstants c = find_constants(prime);
        CHECK_FALSE(is_square_mod_p(ResidueInt(prime, 1, c.u)));
        CHECK(Int(c.v) % p != 0);
        // v itself is a non-square unit (this is what makes x^2 - v y^2
        // definite and gives the norm equation p+1 solutions)
        CHECK_FALSE(is_square_mod_p(ResidueInt(prime, 1, c.v)));
        // alpha table is consistent: alpha(-v) = -v, alpha(p) = p, alpha(up) = p/u
        CHECK(c.alpha(KappaLabel::MinusV, 2) == ResidueInt(prime, 2, -Int(c.v)));
        CHECK(c.alpha(KappaLabel::P, 2) == ResidueInt(prime, 2, p));
        CHECK(c.alpha(KappaLabel::UP, 2) * ResidueInt(prime, 2, c.u) == ResidueInt(prime, 2, p));
    }
}

TEST_CASE("Euler criterion agrees with exhaustive square enumeration, p <= 50") {
    for (std::int64_t p = 3; p <= 50; ++p) {
        if (!is_prime_i64(p)) continue;
        OddPrime prime(p);
        std::vector<bool> is_square(static_cast<std::size_t>(p), false);
        for (std::int64_t b = 0; b < p; ++b) is_square[static_cast<std::size_t>(b * b % p)] = true;
        for (std::int64_t a = 0; a < p; ++a)
            CHECK(is_square_mod_p(ResidueInt(prime, 1, a)) == is_square[static_cast<std::size_t>(a)]);
    }
}

TEST_CASE("specific square classifications") {
    CHECK(is_square_mod_p(ResidueInt(OddPrime(7), 1, 2)));        // 3^2 = 2 mod 7
    CHECK_FALSE(is_square_mod_p(ResidueInt(OddPrime(7), 1, 3)));  // squares mod 7: {0,1,2,4}
    CHECK(is_square_mod_p(ResidueInt(OddPrime(5), 1, 0)));
}
