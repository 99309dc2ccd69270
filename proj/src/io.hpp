#pragma once

// JSON encoding of scalars, matrices, sections and submodules. Scalars are
// always strings on output; input also accepts JSON integers.

#include <json.hpp>

#include "symplex/bilinear.hpp"

namespace symplex::io {

using Json = nlohmann::ordered_json;

/// Throws Error(ParseError) with the JSON path in the message.
[[noreturn]] void fail(const std::string& where, const std::string& what);

const Json& field_of(const Json& j, const char* key, const std::string& where);

Json to_json(const Scalar& s);
Json to_json(const Vector& v);
Json to_json(const Matrix& m);
Json to_json(const ModuleSection& t);
Json to_json(const Submodule& f);
Json to_json(const AlgebraSection& a);

Scalar scalar_from(const Json& j, const Field& field, const std::string& where);
Vector vector_from(const Json& j, const Field& field, std::size_t n, const std::string& where);
Matrix matrix_from(const Json& j, const Field& field, std::size_t rows, std::size_t cols, const std::string& where);
/// Either a bare array of per-component vectors (a global section) or
/// {"open": [point names], "vectors": [...]}.
ModuleSection section_from(const Json& j, const FreeModule& m, const std::string& where);
std::vector<ModuleSection> sections_from(const Json& j, const FreeModule& m, const std::string& where);
/// One n x n matrix per component of the whole space.
std::vector<Matrix> grams_from(const Json& j, const FreeModule& m, const std::string& where);

}  // namespace symplex::io
