#pragma once

// Private helpers shared by the serialization and CLI translation units;
// keeps the vendored json type out of public headers.

#include <json.hpp>

#include "gjts/errors.hpp"
#include "gjts/linalg.hpp"
#include "gjts/scalar.hpp"

namespace gjts::detail {

using Json = nlohmann::ordered_json;

inline Json scalar_to_json(const Scalar& s) {
  Json arr = Json::array();
  for (int i = 0; i < 4; ++i) arr.push_back(rational_str(s.coeff(i)));
  return arr;
}

inline Scalar scalar_from_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 4)
    throw JsonFormatError(where, "expected a 4-array of rational strings");
  std::array<Rational, 4> c;
  for (size_t i = 0; i < 4; ++i) {
    if (!j[i].is_string())
      throw JsonFormatError(where + "[" + std::to_string(i) + "]", "expected a string");
    c[i] = parse_rational(j[i].get<std::string>(), where + "[" + std::to_string(i) + "]");
  }
  return Scalar(c[0], c[1], c[2], c[3]);
}

inline Json vector_to_json(const Vector& v) {
  Json arr = Json::array();
  for (int i = 0; i < v.dim(); ++i) arr.push_back(scalar_to_json(v[i]));
  return arr;
}

inline Vector vector_from_json(const Json& j, const std::string& where, int expect_dim = -1) {
  if (!j.is_array()) throw JsonFormatError(where, "expected an array of scalars");
  if (expect_dim >= 0 && static_cast<int>(j.size()) != expect_dim)
    throw JsonFormatError(where, "expected " + std::to_string(expect_dim) + " entries, got " +
                                     std::to_string(j.size()));
  Vector v(static_cast<int>(j.size()));
  for (size_t i = 0; i < j.size(); ++i)
    v[static_cast<int>(i)] = scalar_from_json(j[i], where + "[" + std::to_string(i) + "]");
  return v;
}

inline Json matrix_to_json(const Matrix& m) {
  Json rows = Json::array();
  for (int r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

/// Parses with line/column diagnostics instead of byte offsets.
Json parse_json(const std::string& text);

/// Checks the "schema" field: absent or "1" passes, anything else throws.
void require_schema(const Json& j, const std::string& where);

int get_int(const Json& j, const std::string& key, const std::string& where);

}  // namespace gjts::detail
