#include "hodge/json_io.hpp"

#include "hodge/errors.hpp"

namespace hodge {

Scalar scalar_from_json(const Json& j) {
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  throw ParseError("scalar must be a string or an integer, got " + j.dump());
}

Json scalar_to_json(const Scalar& s) { return s.to_string(); }

Vector vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("vector must be a JSON array");
  Vector v;
  v.reserve(j.size());
  for (const auto& x : j) v.push_back(scalar_from_json(x));
  return v;
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be a JSON array of rows");
  if (j.empty()) return Matrix();
  std::vector<Vector> rows;
  for (const auto& r : j) rows.push_back(vector_from_json(r));
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows)
    if (r.size() != cols) throw ParseError("matrix rows have different lengths");
  return Matrix::from_rows(rows, cols);
}

Json matrix_to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(vector_to_json(m.row(r)));
  return out;
}

Subspace subspace_from_json(const Json& j, std::size_t ambient) {
  if (!j.is_array()) throw ParseError("subspace must be a JSON array of basis rows");
  if (j.empty()) return Subspace::zero(ambient);
  Matrix m = matrix_from_json(j);
  if (m.cols() != ambient) throw DimensionError("subspace basis has the wrong ambient dimension");
  return Subspace::span(m);
}

Json subspace_to_json(const Subspace& s) { return matrix_to_json(s.basis()); }

}  // namespace hodge
