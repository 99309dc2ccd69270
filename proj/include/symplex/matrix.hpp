#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "symplex/scalar.hpp"

namespace symplex {

using Vector = std::vector<Scalar>;

Vector zero_vector(const Field& field, std::size_t n);
Vector unit_vector(const Field& field, std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Scalar dot(const Vector& a, const Vector& b);
Vector add(const Vector& a, const Vector& b);
Vector subtract(const Vector& a, const Vector& b);
Vector scale(const Scalar& c, const Vector& v);

/// Dense row-major matrix over an exact field. Zero-row and zero-column shapes
/// are legal and carry their field, so the zero subspace of F^n is a 0 x n matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const Field& field, std::size_t rows, std::size_t cols);

  static Matrix identity(const Field& field, std::size_t n);
  /// All rows must have length `cols`.
  static Matrix from_rows(const Field& field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(const Field& field, std::size_t rows, const std::vector<Vector>& cols);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Vector row(std::size_t i) const;
  Vector column(std::size_t j) const;
  std::vector<Vector> row_list() const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix operator-() const;
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const Scalar& c, const Matrix& a);
  friend Vector operator*(const Matrix& a, const Vector& v);
  friend bool operator==(const Matrix& a, const Matrix& b);

  /// Rows of `this` followed by rows of `below` (same column count).
  Matrix stack(const Matrix& below) const;

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct Echelon {
  Matrix reduced;                   ///< full reduced row-echelon form, zero rows last
  std::vector<std::size_t> pivots;  ///< pivot column of each non-zero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Non-zero rows of the reduced row-echelon form: the canonical basis of the row space.
Matrix row_space(const Matrix& m);
/// Canonical basis (as rows, reduced echelon) of { x : m * x = 0 }.
Matrix nullspace(const Matrix& m);
/// Throws Singular when `m` is not invertible.
Matrix inverse(const Matrix& m);
/// Some x with m * x = b, or nullopt if inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);

// Subspaces of F^n are stored as matrices whose rows are a reduced echelon
// basis; two subspaces are equal iff their matrices are equal.
Matrix subspace_sum(const Matrix& a, const Matrix& b);
Matrix subspace_intersection(const Matrix& a, const Matrix& b);
bool subspace_contains(const Matrix& space, const Vector& v);
bool subspace_contains(const Matrix& outer, const Matrix& inner);

}  // namespace symplex
