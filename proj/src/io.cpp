#include "io.hpp"

#include "symplex/error.hpp"

namespace symplex::io {

void fail(const std::string& where, const std::string& what) {
  throw Error(ErrorCode::ParseError, where + ": " + what, where);
}

const Json& field_of(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) fail(where, std::string("missing key '") + key + "'");
  return j.at(key);
}

Json to_json(const Scalar& s) { return s.to_string(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Json to_json(const ModuleSection& t) {
  const auto& space = *t.module().space;
  Json vectors = Json::array();
  for (const auto& v : t.vectors()) vectors.push_back(to_json(v));
  return Json{{"open", space.names_of(space.set_of(t.open()))}, {"vectors", vectors}};
}

Json to_json(const Submodule& f) {
  Json bases = Json::array();
  for (const auto& b : f.bases()) bases.push_back(to_json(b));
  return Json{{"dims", f.dims()}, {"bases", bases}};
}

Json to_json(const AlgebraSection& a) {
  const auto& space = *a.space();
  return Json{{"open", space.names_of(space.set_of(a.open()))}, {"values", to_json(a.values())}};
}

Scalar scalar_from(const Json& j, const Field& field, const std::string& where) {
  try {
    if (j.is_string()) return Scalar::parse(field, j.get<std::string>());
    if (j.is_number_integer()) return Scalar(field, j.get<long>());
  } catch (const Error& e) {
    fail(where, e.what());
  }
  fail(where, "expected a scalar string or integer");
}

Vector vector_from(const Json& j, const Field& field, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) fail(where, "expected a vector of length " + std::to_string(n));
  Vector out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(scalar_from(j[i], field, where + "[" + std::to_string(i) + "]"));
  return out;
}

Matrix matrix_from(const Json& j, const Field& field, std::size_t rows, std::size_t cols, const std::string& where) {
  if (!j.is_array() || j.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows");
  std::vector<Vector> out;
  for (std::size_t i = 0; i < rows; ++i) out.push_back(vector_from(j[i], field, cols, where + "[" + std::to_string(i) + "]"));
  return Matrix::from_rows(field, cols, out);
}

ModuleSection section_from(const Json& j, const FreeModule& m, const std::string& where) {
  OpenRef u = m.space->top();
  const Json* vectors = &j;
  if (j.is_object()) {
    const Json& open = field_of(j, "open", where);
    if (!open.is_array()) fail(where + ".open", "expected an array of point names");
    std::vector<std::string> names;
    for (const auto& p : open) {
      if (!p.is_string()) fail(where + ".open", "point names are strings");
      names.push_back(p.get<std::string>());
    }
    try {
      u = m.space->find(names);
    } catch (const Error& e) {
      fail(where + ".open", e.what());
    }
    vectors = &field_of(j, "vectors", where);
  }
  const std::size_t comps = m.space->component_count(u);
  if (!vectors->is_array() || vectors->size() != comps) {
    fail(where, "expected one vector per component (" + std::to_string(comps) + ")");
  }
  std::vector<Vector> vecs;
  for (std::size_t c = 0; c < comps; ++c) {
    vecs.push_back(vector_from((*vectors)[c], m.field, m.rank, where + "[" + std::to_string(c) + "]"));
  }
  return ModuleSection(m, u, std::move(vecs));
}

std::vector<ModuleSection> sections_from(const Json& j, const FreeModule& m, const std::string& where) {
  if (!j.is_array()) fail(where, "expected an array of sections");
  std::vector<ModuleSection> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(section_from(j[i], m, where + "[" + std::to_string(i) + "]"));
  return out;
}

std::vector<Matrix> grams_from(const Json& j, const FreeModule& m, const std::string& where) {
  const std::size_t comps = m.global_components();
  if (!j.is_array() || j.size() != comps) {
    fail(where, "expected one Gram matrix per component of the space (" + std::to_string(comps) + ")");
  }
  std::vector<Matrix> out;
  for (std::size_t c = 0; c < comps; ++c) {
    out.push_back(matrix_from(j[c], m.field, m.rank, m.rank, where + "[" + std::to_string(c) + "]"));
  }
  return out;
}

}  // namespace symplex::io
