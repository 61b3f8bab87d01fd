#include <doctest.h>

#include <random>
#include <set>

#include "padic/json_io.hpp"

using namespace padic;

TEST_CASE("residue json round trip") {
    ResidueInt r(OddPrime(7), 3, 123);
    json j = to_json(r);
    CHECK(j["p"] == 7);
    CHECK(j["n"] == 3);
    CHECK(j["value"] == "123");
    CHECK(residue_from_json(j) == r);
}

TEST_CASE("matrix encode/decode round trip (randomized)") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::int64_t p = (trial % 2 == 0) ? 3 : 11;
        int level = 1 + static_cast<int>(rng() % 3);
        int d = (rng() & 1) ? 2 : 3;
        Int pn = pow_int(p, level);
        std::vector<Int> entries;
        for (int i = 0; i < d * d; ++i) entries.push_back(Int(rng() % pn.convert_to<std::uint64_t>()));
        ResidueMatrix m(OddPrime(p), level, d, entries);
        CHECK(ResidueMatrix::decode(OddPrime(p), level, d, m.encode()) == m);
        CHECK(matrix_from_json(to_json(m)) == m);
    }
}

TEST_CASE("encoding is injective over a whole table") {
    GroupTable t = enumerate_G2(KappaLabel::UP, OddPrime(5), 2);
    std::set<std::string> seen;
    for (std::uint32_t i = 0; i < t.size(); ++i) CHECK(seen.insert(t.at(i).encode()).second);
}

TEST_CASE("tower digit strings") {
    PadicTower t(OddPrime(3), 4, 25);
    json j = to_json(t);
    CHECK(j["digits"] == "1220");
}

TEST_CASE("table dump shape and determinism") {
    GroupTable t = enumerate_G2(KappaLabel::MinusV, OddPrime(3), 1);
    json j = to_json(t);
    CHECK(j["schema"] == "padicrot/table-v1");
    CHECK(j["order"] == 4);
    CHECK(j["elements"].size() == 4);
    // identical dumps across rebuilds
    GroupTable t2 = enumerate_G2(KappaLabel::MinusV, OddPrime(3), 1);
    CHECK(to_json(t2).dump() == j.dump());
}

TEST_CASE("cylinder set dump") {
    GroupFamily family(descriptor_2d(KappaLabel::P, OddPrime(3)));
    CylinderSet e(family, 1, {0, 2});
    json j = to_json(e);
    CHECK(j["schema"] == "padicrot/cylinder-v1");
    CHECK(j["level"] == 1);
    CHECK(j["member_encodings"].size() == 2);
    CHECK(j["descriptor"]["kappa"] == "p");
}

TEST_CASE("rational strings") {
    CHECK(rational_string(Rat(1, 72)) == "1/72");
    CHECK(rational_string(Rat(2)) == "2");
    CHECK(decimal_string(Rat(1, 8), 6) == "0.125000");
    CHECK(decimal_string(Rat(-1, 3), 4) == "-0.3333");
}
