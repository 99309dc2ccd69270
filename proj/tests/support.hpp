#pragma once

#include <gtest/gtest.h>

#include <initializer_list>
#include <string>
#include <vector>

#include "symplex/error.hpp"
#include "symplex/symplectic.hpp"

namespace support {

using namespace symplex;

using IntRows = std::initializer_list<std::initializer_list<long>>;

inline Field Q() { return Field::rationals(); }

inline Vector vec(const Field& f, std::initializer_list<long> xs) {
  Vector v;
  for (long x : xs) v.emplace_back(f, x);
  return v;
}

inline Vector vec(std::initializer_list<long> xs) { return vec(Q(), xs); }

inline Vector vec_s(const Field& f, std::initializer_list<const char*> xs) {
  Vector v;
  for (const char* x : xs) v.push_back(Scalar::parse(f, x));
  return v;
}

inline Matrix mat(const Field& f, IntRows rows) {
  std::vector<Vector> out;
  std::size_t cols = 0;
  for (auto r : rows) {
    out.push_back(vec(f, r));
    cols = r.size();
  }
  return Matrix::from_rows(f, cols, out);
}

inline Matrix mat(IntRows rows) { return mat(Q(), rows); }

inline Matrix mat_s(const Field& f, std::initializer_list<std::initializer_list<const char*>> rows) {
  std::vector<Vector> out;
  std::size_t cols = 0;
  for (auto r : rows) {
    out.push_back(vec_s(f, r));
    cols = r.size();
  }
  return Matrix::from_rows(f, cols, out);
}

inline Scalar q(long num, long den = 1) { return Scalar(Q(), mpq_class(num, den)); }

inline BilinearForm form(const SpacePtr& space, std::vector<Matrix> grams) {
  const Field f = grams.front().field();
  const std::size_t n = grams.front().rows();
  return BilinearForm(FreeModule(space, f, n), std::move(grams));
}

/// Global section from one integer vector per component.
inline ModuleSection global(const FreeModule& m, IntRows per_component) {
  std::vector<Vector> vecs;
  for (auto r : per_component) vecs.push_back(vec(m.field, r));
  return ModuleSection::global(m, std::move(vecs));
}

/// The same integer vector on every component.
inline ModuleSection constant(const FreeModule& m, std::initializer_list<long> v) {
  return ModuleSection::global(m, std::vector<Vector>(m.global_components(), vec(m.field, v)));
}

inline ModuleSection e(const FreeModule& m, std::size_t i) { return ModuleSection::basis(m, i - 1); }

inline Matrix standard(std::size_t two_n, const Field& f = Q()) { return standard_symplectic_matrix(f, two_n); }

}  // namespace support

#define EXPECT_SX_ERROR(statement, expected_code)                                 \
  do {                                                                            \
    try {                                                                         \
      statement;                                                                  \
      ADD_FAILURE() << "expected " << symplex::to_string(expected_code);          \
    } catch (const symplex::Error& sx_error_) {                                   \
      EXPECT_EQ(symplex::to_string(sx_error_.code()), symplex::to_string(expected_code)) \
          << sx_error_.what();                                                    \
    }                                                                             \
  } while (0)
