#pragma once

#include <json.hpp>

#include "hodge/matrix.hpp"
#include "hodge/subspace.hpp"

namespace hodge {

using Json = nlohmann::json;

// Matrices are arrays of rows; each entry is a string "a/b" or "a/b+c/d*i".
// Plain JSON integers are accepted on input for convenience.
Scalar scalar_from_json(const Json& j);
Json scalar_to_json(const Scalar& s);
Matrix matrix_from_json(const Json& j);
Json matrix_to_json(const Matrix& m);
Vector vector_from_json(const Json& j);
Json vector_to_json(const Vector& v);

// A subspace is written as its canonical basis (a possibly empty list of rows).
// The ambient dimension must be supplied because an empty list carries none.
Subspace subspace_from_json(const Json& j, std::size_t ambient);
Json subspace_to_json(const Subspace& s);

}  // namespace hodge
