#include <doctest.h>

#include <random>
#include <set>

#include "padic/forms.hpp"
#include "padic/rotation.hpp"

using namespace padic;

namespace {

std::vector<BranchedParam> all_params_2d(KappaLabel kappa, OddPrime p, int level) {
    std::vector<BranchedParam> out;
    Int pn = pow_int(p.value(), level);
    for (Int s = 0; s < pn; ++s)
        out.push_back(BranchedParam{ResidueInt(p, level, s), Branch::Principal});
    if (kappa == KappaLabel::MinusV) {
        for (Int s = 0; s < pn; s += p.value())
            out.push_back(BranchedParam{ResidueInt(p, level, s), Branch::Flipped});
    } else {
        for (Int s = 0; s < pn; ++s)
            out.push_back(BranchedParam{ResidueInt(p, level, s), Branch::Flipped});
    }
    return out;
}

}  // namespace

TEST_CASE("rot2 at sigma = 0") {
    OddPrime p5(5);
    for (KappaLabel kappa : {KappaLabel::MinusV, KappaLabel::P, KappaLabel::UP}) {
        ResidueMatrix id = ResidueMatrix::identity(p5, 2, 2);
        CHECK(rot2(kappa, BranchedParam{ResidueInt(p5, 2, 0), Branch::Principal}) == id);
        CHECK(rot2(kappa, BranchedParam{ResidueInt(p5, 2, 0), Branch::Flipped}) == -id);
    }
}

TEST_CASE("rot2 explicit value: kappa=-v, p=3, sigma=1") {
    OddPrime p3(3);
    ResidueMatrix m = rot2(KappaLabel::MinusV, BranchedParam{ResidueInt(p3, 1, 1), Branch::Principal});
    // alpha = -v = 1: matrix (0, -1; 1, 0) = (0, 2; 1, 0) mod 3
    CHECK(m.at(0, 0) == 0);
    CHECK(m.at(0, 1) == 2);
    CHECK(m.at(1, 0) == 1);
    CHECK(m.at(1, 1) == 0);
}

TEST_CASE("rot2 branch constraint") {
    OddPrime p3(3);
    CHECK_THROWS_AS(rot2(KappaLabel::MinusV, BranchedParam{ResidueInt(p3, 2, 1), Branch::Flipped}),
                    InvalidBranchParam);
    CHECK_NOTHROW(rot2(KappaLabel::MinusV, BranchedParam{ResidueInt(p3, 2, 3), Branch::Flipped}));
    CHECK_NOTHROW(rot2(KappaLabel::P, BranchedParam{ResidueInt(p3, 2, 1), Branch::Flipped}));
}

TEST_CASE("rot2 always lands in the special orthogonal set") {
    for (std::int64_t pv : {3, 5, 7}) {
        OddPrime p(pv);
        for (KappaLabel kappa : {KappaLabel::MinusV, KappaLabel::P, KappaLabel::UP}) {
            DiagonalForm q = form_matrix(kappa, p);
            for (int n = 1; n <= 3; ++n)
                for (const BranchedParam& b : all_params_2d(kappa, p, n))
                    CHECK(is_special_orthogonal(rot2(kappa, b), q));
        }
    }
}

TEST_CASE("rot2 projection compatibility") {
    for (std::int64_t pv : {3, 5}) {
        OddPrime p(pv);
        for (KappaLabel kappa : {KappaLabel::MinusV, KappaLabel::P, KappaLabel::UP}) {
            Int pl = pow_int(pv, 3);
            for (Int s = 0; s < pl; ++s) {
                ResidueMatrix big = rot2(kappa, BranchedParam{ResidueInt(p, 3, s), Branch::Principal});
                for (int n = 1; n <= 3; ++n) {
                    ResidueMatrix small =
                        rot2(kappa, BranchedParam{ResidueInt(p, 3, s).project(n), Branch::Principal});
                    CHECK(big.project(n) == small);
                }
            }
        }
    }
}

TEST_CASE("rot2 principal branch is injective in sigma (exhaustive p in {3,5}, n <= 2)") {
    for (std::int64_t pv : {3, 5}) {
        OddPrime p(pv);
        for (KappaLabel kappa : {KappaLabel::MinusV, KappaLabel::P, KappaLabel::UP}) {
            for (int n = 1; n <= 2; ++n) {
                Int pn = pow_int(pv, n);
                std::set<std::string> seen;
                for (Int s = 0; s < pn; ++s)
                    seen.insert(
                        rot2(kappa, BranchedParam{ResidueInt(p, n, s), Branch::Principal}).encode());
                CHECK(Int(seen.size()) == pn);
            }
        }
    }
}

TEST_CASE("rot2 images commute") {
    OddPrime p5(5);
    for (KappaLabel kappa : {KappaLabel::MinusV, KappaLabel::P, KappaLabel::UP}) {
        for (const BranchedParam& a : all_params_2d(kappa, p5, 2))
            for (const BranchedParam& b : all_params_2d(kappa, p5, 2))
                CHECK(rot2(kappa, a) * rot2(kappa, b) == rot2(kappa, b) * rot2(kappa, a));
    }
}

TEST_CASE("rot3_axis basics") {
    OddPrime p3(3);
    CHECK(rot3_axis(Axis::Z, BranchedParam{ResidueInt(p3, 2, 0), Branch::Principal}) ==
          ResidueMatrix::identity(p3, 2, 3));

    // p=3, level 1: R_y(eta) collapses to (1,0,0; 0,1,0; 2 eta,0,1)
    for (int eta = 0; eta < 3; ++eta) {
        ResidueMatrix m = rot3_axis(Axis::Y, BranchedParam{ResidueInt(p3, 1, eta), Branch::Principal});
        ResidueMatrix want(p3, 1, 3,
                           {Int(1), Int(0), Int(0), Int(0), Int(1), Int(0), Int(2 * eta), Int(0), Int(1)});
        CHECK(m == want);
    }

    CHECK_THROWS_AS(rot3_axis(Axis::Z, BranchedParam{ResidueInt(p3, 1, 1), Branch::Flipped}),
                    InvalidBranchParam);
}

TEST_CASE("rot3_axis matrices are special orthogonal for the ternary form") {
    for (std::int64_t pv : {3, 5, 7}) {
        OddPrime p(pv);
        DiagonalForm q = form_matrix(KappaLabel::Plus3, p);
        for (int n = 1; n <= 2; ++n) {
            Int pn = pow_int(pv, n);
            for (Int s = 0; s < pn; ++s) {
                for (Branch b : {Branch::Principal, Branch::Flipped}) {
                    BranchedParam param{ResidueInt(p, n, s), b};
                    CHECK(is_special_orthogonal(rot3_axis(Axis::X, param), q));
                    CHECK(is_special_orthogonal(rot3_axis(Axis::Y, param), q));
                    if (b == Branch::Principal || s % pv == 0)
                        CHECK(is_special_orthogonal(rot3_axis(Axis::Z, param), q));
                }
            }
        }
    }
}

TEST_CASE("cardano composition basics") {
    OddPrime p3(3);
    auto zero = [&](Branch b) { return BranchedParam{ResidueInt(p3, 2, 0), b}; };
    CardanoTriple id{zero(Branch::Principal), zero(Branch::Principal), zero(Branch::Principal)};
    CHECK(cardano_compose(id) == ResidueMatrix::identity(p3, 2, 3));

    // all flipped at 0: the product of the three sign matrices
    CardanoTriple flipped{zero(Branch::Flipped), zero(Branch::Flipped), zero(Branch::Flipped)};
    ResidueMatrix sx = rot3_axis(Axis::X, zero(Branch::Flipped));
    ResidueMatrix sy = rot3_axis(Axis::Y, zero(Branch::Flipped));
    ResidueMatrix sz = rot3_axis(Axis::Z, zero(Branch::Flipped));
    CHECK(cardano_compose(flipped) == sx * sy * sz);
    DiagonalForm q = form_matrix(KappaLabel::Plus3, p3);
    CHECK(is_special_orthogonal(cardano_compose(flipped), q));
}

TEST_CASE("cardano partner rules") {
    OddPrime p3(3);
    auto bp = [&](int s, Branch b) { return BranchedParam{ResidueInt(p3, 1, s), b}; };

    // all-zero principal triple flips every branch
    CardanoTriple t{bp(0, Branch::Principal), bp(0, Branch::Principal), bp(0, Branch::Principal)};
    CardanoTriple partner = cardano_partner(t);
    CHECK(partner.xi.branch == Branch::Flipped);
    CHECK(partner.eta.branch == Branch::Flipped);
    CHECK(partner.zeta.branch == Branch::Flipped);
    CHECK(partner.zeta.sigma.value() == 0);

    // unit zeta: stays principal, parameter 1/(v*zeta); v = -1 = 2 mod 3
    CardanoTriple tu{bp(1, Branch::Principal), bp(2, Branch::Principal), bp(1, Branch::Principal)};
    CardanoTriple pu = cardano_partner(tu);
    CHECK(pu.zeta.branch == Branch::Principal);
    CHECK(pu.zeta.sigma.value() == 2);  // inv(2) = 2 mod 3
    CHECK(pu.eta.sigma.value() == 1);   // -2 mod 3
    CHECK(pu.xi.sigma.value() == 1);
}

TEST_CASE("cardano partner is an involution and preserves the composition (exhaustive p=3)") {
    OddPrime p3(3);
    for (int level = 1; level <= 2; ++level) {
        Int pn = pow_int(3, level);
        std::vector<BranchedParam> xy, z;
        for (Int s = 0; s < pn; ++s) {
            xy.push_back(BranchedParam{ResidueInt(p3, level, s), Branch::Principal});
            xy.push_back(BranchedParam{ResidueInt(p3, level, s), Branch::Flipped});
            z.push_back(BranchedParam{ResidueInt(p3, level, s), Branch::Principal});
            if (s % 3 == 0) z.push_back(BranchedParam{ResidueInt(p3, level, s), Branch::Flipped});
        }
        for (const auto& xi : xy) {
            for (const auto& eta : xy) {
                for (const auto& zeta : z) {
                    CardanoTriple t{xi, eta, zeta};
                    CardanoTriple partner = cardano_partner(t);
                    CHECK_FALSE(partner == t);
                    CHECK(cardano_partner(partner) == t);
                    CHECK(cardano_compose(partner) == cardano_compose(t));
                }
            }
        }
    }
}

TEST_CASE("cardano partner preserves composition (randomized p in {5,7})") {
    for (std::int64_t pv : {5, 7}) {
        OddPrime p(pv);
        std::mt19937_64 rng(42);
        for (int trial = 0; trial < 200; ++trial) {
            int level = 1 + static_cast<int>(rng() % 2);
            Int pn = pow_int(pv, level);
            auto draw = [&](bool z_axis) {
                Int s = Int(rng() % pn.convert_to<std::uint64_t>());
                Branch b = (rng() & 1) ? Branch::Flipped : Branch::Principal;
                if (z_axis && b == Branch::Flipped) s = (s / pv) * pv;
                return BranchedParam{ResidueInt(p, level, s), b};
            };
            CardanoTriple t{draw(false), draw(false), draw(true)};
            CardanoTriple partner = cardano_partner(t);
            CHECK(cardano_compose(partner) == cardano_compose(t));
            CHECK(cardano_partner(partner) == t);
        }
    }
}
