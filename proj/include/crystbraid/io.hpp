#pragma once

#include <string_view>

#include <json.hpp>

#include "crystbraid/orbits.hpp"
#include "crystbraid/quotient.hpp"
#include "crystbraid/zlinalg.hpp"

namespace cryst::io {

using nlohmann::json;

/// {"i,j": coeff}, zeros omitted.
json to_json(const PairVector& v);
PairVector pair_vector_from_json(int n, const json& j);

/// {"n": n, "perm": [images], "vec": {...}}
json to_json(const Element& g);
Element element_from_json(const json& j);

/// [["1,2", "2,3", "1,3"], ...]
json to_json(const OrbitTable& t);

/// Rows of integers.
json to_json(const IntMatrix& m);

/// [free_rank, torsion...]
json to_json(const Abelianization& a);

/// Element JSON when the text starts with '{', otherwise a braid word in n
/// strands.
Element parse_element(int n, std::string_view text);

}  // namespace cryst::io
