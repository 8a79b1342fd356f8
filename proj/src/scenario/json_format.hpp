#pragma once

#include <json.hpp>

#include "exact/hamiltonian.hpp"
#include "spectral/linalg.hpp"

namespace hca {

using Json = nlohmann::json;

/// Shared literal conventions: integer matrices and vectors are row-major
/// arrays of decimal strings (plain JSON integers are also accepted on
/// input); complex entries are two-element [re, im] arrays. Exact values
/// are always EMITTED as strings so nothing is squeezed through the
/// 53-bit JSON number lattice.
Int int_from_json(const Json& j);
Rational rational_from_json(const Json& j);
IntVector int_vector_from_json(const Json& j);
IntMatrix int_matrix_from_json(const Json& j);

Json int_vector_to_json(const IntVector& v);
Json int_matrix_to_json(const IntMatrix& m);
Json gauss_matrix_to_json(const GaussMatrix& m);

ComplexVector complex_vector_from_json(const Json& j);

}  // namespace hca
