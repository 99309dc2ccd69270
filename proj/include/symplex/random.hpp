#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "symplex/symplectic.hpp"

namespace symplex {

/// Seeded generator with a portable draw (std distributions differ between
/// standard libraries, which would break report reproducibility).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  long between(long lo, long hi);
  bool coin() { return below(2) == 1; }

 private:
  std::mt19937_64 engine_;
};

/// Small entries: integers in [-3, 3], now and then a fraction; uniform over GF(p).
Scalar random_scalar(Rng& rng, const Field& field);
Scalar random_nonzero_scalar(Rng& rng, const Field& field);
Matrix random_matrix(Rng& rng, const Field& field, std::size_t rows, std::size_t cols);
/// `rows` random linearly independent rows; rows <= cols.
Matrix random_independent_rows(Rng& rng, const Field& field, std::size_t rows, std::size_t cols);
Matrix random_invertible(Rng& rng, const Field& field, std::size_t n);

/// Q^T A_2n Q for a random invertible Q.
Matrix random_symplectic_gram(Rng& rng, const Field& field, std::size_t two_n);
/// Q^T D Q with D diagonal and invertible.
Matrix random_symmetric_gram(Rng& rng, const Field& field, std::size_t n);
/// Symmetric or (for even n) alternating, chosen per call; always invertible.
Matrix random_orthosymmetric_gram(Rng& rng, const Field& field, std::size_t n);

BilinearForm random_symplectic_form(Rng& rng, const FreeModule& module);
BilinearForm random_orthosymmetric_form(Rng& rng, const FreeModule& module);

/// Free submodule of rank k with independent random bases per component.
Submodule random_free_submodule(Rng& rng, const FreeModule& module, std::size_t k);

/// Random element of Sp(A_2n) as a product of transvections x -> x + c A(v, x) v.
Matrix random_standard_symplectic(Rng& rng, const Field& field, std::size_t two_n);

/// Random isometry (E, phi) -> (E', phi'): P' S P^-1 with P, P' normal forms
/// and S a random standard symplectic matrix per component.
Isometry random_isometry(Rng& rng, const BilinearForm& phi, const BilinearForm& phi_prime);

/// A symplectic basis of phi moved by a random automorphism.
SymplecticBasis random_symplectic_basis(Rng& rng, const BilinearForm& phi);

/// k random independent combinations of r_1..r_n of a random symplectic
/// basis: a totally isotropic free submodule of rank k <= n.
Submodule random_isotropic_submodule(Rng& rng, const BilinearForm& phi, std::size_t k);

}  // namespace symplex
