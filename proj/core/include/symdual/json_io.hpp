#pragma once

#include <nlohmann/json.hpp>

#include "symdual/boolean_poset.hpp"
#include "symdual/counting.hpp"
#include "symdual/dual_core.hpp"
#include "symdual/lattice_geometry.hpp"
#include "symdual/orbit_monomials.hpp"

namespace symdual::json {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "symdual/1";

Json subset_to_json(SubsetMask t);
SubsetMask subset_from_json(const Json& j, int c);
Json family_to_json(const Family& f);  // members in standard order

Json type_vector_to_json(const TypeVector& tv);
// Accepts {"counts":[{"support":[..],"count":k}]} or {"counts":{"[1,2]":k}}; "c" may be
// omitted when default_c is given.
TypeVector type_vector_from_json(const Json& j, int default_c = -1);

Json matrix_to_json(const ExponentMatrix& m);
ExponentMatrix matrix_from_json(const Json& j);

// {"c":3,"generators":[...]} where each generator is a type vector object or a 0/1 matrix.
GeneratorSystem generator_system_from_json(const Json& j);
Json generator_system_to_json(const GeneratorSystem& g);

SumPolyhedron polyhedron_from_json(const Json& j);
Json polyhedron_to_json(const SumPolyhedron& p);
Json orthant_to_json(const Orthant& o);

Json polynomial_to_json(const RationalPolynomial& p);
Json big_to_json(const BigInt& v);  // decimal string

}  // namespace symdual::json
