#include "symplex/random.hpp"

#include <limits>

namespace symplex {

std::uint64_t Rng::below(std::uint64_t n) {
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % n;
}

long Rng::between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo + 1))); }

Scalar random_scalar(Rng& rng, const Field& field) {
  if (!field.is_rational()) return Scalar(field, static_cast<long>(rng.below(field.characteristic())));
  long num = rng.between(-3, 3);
  long den = rng.below(4) == 0 ? rng.between(2, 3) : 1;
  return Scalar(field, mpq_class(num, den));
}

Scalar random_nonzero_scalar(Rng& rng, const Field& field) {
  Scalar s = random_scalar(rng, field);
  while (s.is_zero()) s = random_scalar(rng, field);
  return s;
}

Matrix random_matrix(Rng& rng, const Field& field, std::size_t rows, std::size_t cols) {
  Matrix m(field, rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_scalar(rng, field);
  return m;
}

Matrix random_independent_rows(Rng& rng, const Field& field, std::size_t rows, std::size_t cols) {
  Matrix m = random_matrix(rng, field, rows, cols);
  while (rank(m) != rows) m = random_matrix(rng, field, rows, cols);
  return m;
}

Matrix random_invertible(Rng& rng, const Field& field, std::size_t n) { return random_independent_rows(rng, field, n, n); }

Matrix random_symplectic_gram(Rng& rng, const Field& field, std::size_t two_n) {
  Matrix q = random_invertible(rng, field, two_n);
  return q.transpose() * standard_symplectic_matrix(field, two_n) * q;
}

Matrix random_symmetric_gram(Rng& rng, const Field& field, std::size_t n) {
  Matrix d(field, n, n);
  for (std::size_t i = 0; i < n; ++i) d(i, i) = random_nonzero_scalar(rng, field);
  Matrix q = random_invertible(rng, field, n);
  return q.transpose() * d * q;
}

Matrix random_orthosymmetric_gram(Rng& rng, const Field& field, std::size_t n) {
  if (n % 2 == 0 && rng.coin()) return random_symplectic_gram(rng, field, n);
  return random_symmetric_gram(rng, field, n);
}

BilinearForm random_symplectic_form(Rng& rng, const FreeModule& module) {
  std::vector<Matrix> grams;
  for (std::size_t c = 0; c < module.global_components(); ++c) {
    grams.push_back(random_symplectic_gram(rng, module.field, module.rank));
  }
  return BilinearForm(module, std::move(grams));
}

BilinearForm random_orthosymmetric_form(Rng& rng, const FreeModule& module) {
  std::vector<Matrix> grams;
  for (std::size_t c = 0; c < module.global_components(); ++c) {
    grams.push_back(random_orthosymmetric_gram(rng, module.field, module.rank));
  }
  return BilinearForm(module, std::move(grams));
}

Submodule random_free_submodule(Rng& rng, const FreeModule& module, std::size_t k) {
  std::vector<Matrix> bases;
  for (std::size_t c = 0; c < module.global_components(); ++c) {
    bases.push_back(random_independent_rows(rng, module.field, k, module.rank));
  }
  return Submodule(module, std::move(bases));
}

Matrix random_standard_symplectic(Rng& rng, const Field& field, std::size_t two_n) {
  const Matrix a = standard_symplectic_matrix(field, two_n);
  Matrix out = Matrix::identity(field, two_n);
  const std::size_t steps = two_n + 1;
  for (std::size_t k = 0; k < steps; ++k) {
    Matrix v = random_matrix(rng, field, two_n, 1);
    Matrix t = Matrix::identity(field, two_n) + random_scalar(rng, field) * (v * v.transpose() * a);
    out = t * out;
  }
  return out;
}

Isometry random_isometry(Rng& rng, const BilinearForm& phi, const BilinearForm& phi_prime) {
  auto p = normal_form(phi);
  auto p_prime = normal_form(phi_prime);
  std::vector<Matrix> ms;
  for (std::size_t c = 0; c < p.size(); ++c) {
    Matrix s = random_standard_symplectic(rng, phi.module().field, phi.module().rank);
    ms.push_back(p_prime[c] * s * inverse(p[c]));
  }
  return Isometry{phi, phi_prime, std::move(ms)};
}

SymplecticBasis random_symplectic_basis(Rng& rng, const BilinearForm& phi) {
  SymplecticBasis basis = gram_schmidt_extend(phi);
  Isometry move = random_isometry(rng, phi, phi);
  for (auto& t : basis.r) t = move.apply(t);
  for (auto& t : basis.s) t = move.apply(t);
  return basis;
}

Submodule random_isotropic_submodule(Rng& rng, const BilinearForm& phi, std::size_t k) {
  const FreeModule& m = phi.module();
  SymplecticBasis basis = random_symplectic_basis(rng, phi);
  const std::size_t n = basis.r.size();
  std::vector<Matrix> bases;
  for (std::size_t c = 0; c < m.global_components(); ++c) {
    Matrix coeffs = random_independent_rows(rng, m.field, k, n);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < k; ++i) {
      Vector v = zero_vector(m.field, m.rank);
      for (std::size_t j = 0; j < n; ++j) v = add(v, scale(coeffs(i, j), basis.r[j][c]));
      rows.push_back(std::move(v));
    }
    bases.push_back(Matrix::from_rows(m.field, m.rank, rows));
  }
  return Submodule(m, std::move(bases));
}

}  // namespace symplex
