#include "padic/json_io.hpp"

namespace padic {

json to_json(const ResidueInt& r) {
    return json{{"p", r.prime()}, {"n", r.level()}, {"value", r.value().str()}};
}

ResidueInt residue_from_json(const json& j) {
    OddPrime p(j.at("p").get<std::int64_t>());
    int n = j.at("n").get<int>();
    Int value(j.at("value").get<std::string>());
    return ResidueInt(p, n, value);
}

json to_json(const PadicTower& t) {
    return json{{"p", t.prime()}, {"precision", t.precision()}, {"digits", t.digit_string()}};
}

json to_json(const DiagonalForm& q) {
    return json{{"label", kappa_name(q.label)}, {"p", q.p}, {"entries", q.entries}};
}

json to_json(const ResidueMatrix& m) {
    return json{{"p", m.prime()}, {"n", m.level()}, {"d", m.dim()}, {"digits", m.encode()}};
}

ResidueMatrix matrix_from_json(const json& j) {
    OddPrime p(j.at("p").get<std::int64_t>());
    return ResidueMatrix::decode(p, j.at("n").get<int>(), j.at("d").get<int>(),
                                 j.at("digits").get<std::string>());
}

json descriptor_to_json(const GroupDescriptor& desc) {
    return json{{"d", desc.d}, {"kappa", kappa_name(desc.kappa)}, {"p", desc.p}};
}

json to_json(const GroupTable& table) {
    json elements = json::array();
    for (std::uint32_t i = 0; i < table.size(); ++i) elements.push_back(table.at(i).encode());
    return json{{"schema", "padicrot/table-v1"},
                {"descriptor", descriptor_to_json(table.descriptor())},
                {"level", table.level()},
                {"order", table.size()},
                {"elements", elements}};
}

json to_json(const CylinderSet& set) {
    const GroupTable& table = set.family().table(set.level());
    json encodings = json::array();
    for (std::uint32_t m : set.members()) encodings.push_back(table.at(m).encode());
    return json{{"schema", "padicrot/cylinder-v1"},
                {"descriptor", descriptor_to_json(set.family().descriptor())},
                {"level", set.level()},
                {"member_encodings", encodings}};
}

std::string rational_string(const Rat& r) {
    Int num = boost::multiprecision::numerator(r);
    Int den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace padic
