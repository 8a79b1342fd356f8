#include "scenario/json_format.hpp"

namespace hca {

Int int_from_json(const Json& j) {
  if (j.is_string()) return parse_int(j.get<std::string>());
  if (j.is_number_integer()) return make_int(j.get<long long>());
  fail(ErrorCode::ParseError, "expected integer or decimal string, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(make_int(j.get<long long>()));
  fail(ErrorCode::ParseError, "expected rational string, got " + j.dump());
}

IntVector int_vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    fail(ErrorCode::ParseError, "expected a non-empty array of integers");
  IntVector v;
  for (const auto& cell : j) v.push_back(int_from_json(cell));
  return v;
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    fail(ErrorCode::ParseError, "expected a non-empty array of matrix rows");
  const int dim = static_cast<int>(j.size());
  IntMatrix m(dim);
  for (int i = 0; i < dim; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != dim)
      fail(ErrorCode::ParseError, "matrix rows must all have the matrix dimension");
    for (int k = 0; k < dim; ++k)
      m.at(i, k) = int_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json int_vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const Int& x : v) out.push_back(int_to_string(x));
  return out;
}

Json int_matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(int_to_string(m.at(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json gauss_matrix_to_json(const GaussMatrix& m) {
  Json out = Json::array();
  for (int i = 0; i < m.dim(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.dim(); ++j)
      row.push_back(Json::array(
          {int_to_string(m.at(i, j).re), int_to_string(m.at(i, j).im)}));
    out.push_back(std::move(row));
  }
  return out;
}

ComplexVector complex_vector_from_json(const Json& j) {
  if (!j.is_array() || j.empty())
    fail(ErrorCode::ParseError, "expected a non-empty array of [re, im] pairs");
  ComplexVector v;
  for (const auto& cell : j) {
    if (!cell.is_array() || cell.size() != 2)
      fail(ErrorCode::ParseError, "complex entries must be [re, im] pairs");
    v.emplace_back(cell[0].get<double>(), cell[1].get<double>());
  }
  return v;
}

}  // namespace hca
