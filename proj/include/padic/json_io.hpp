#pragma once

#include <json.hpp>

#include "padic/forms.hpp"
#include "padic/groups.hpp"
#include "padic/haar.hpp"

namespace padic {

using json = nlohmann::json;

// {p, n, value}: value as a decimal string (p^n can exceed any JSON number).
json to_json(const ResidueInt& r);
ResidueInt residue_from_json(const json& j);

// Tower as {p, precision, digits}: base-p digit string, little-endian.
json to_json(const PadicTower& t);

// {label, p, entries}
json to_json(const DiagonalForm& q);

// Matrix: {p, n, d, digits} with the canonical row-major encoding.
json to_json(const ResidueMatrix& m);
ResidueMatrix matrix_from_json(const json& j);

// Group table dump: {schema, descriptor, order, elements}.
json to_json(const GroupTable& table);

// Cylinder set: {schema, descriptor, level, member_encodings}.
json to_json(const CylinderSet& set);

json descriptor_to_json(const GroupDescriptor& desc);

std::string rational_string(const Rat& r);

}  // namespace padic
