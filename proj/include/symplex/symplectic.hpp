#pragma once

#include <map>
#include <vector>

#include "symplex/bilinear.hpp"

namespace symplex {

/// Ordered global sections r_1..r_n, s_1..s_n of a rank-2n module with
/// phi(r_i, r_j) = phi(s_i, s_j) = 0 and phi(r_i, s_j) = delta_ij.
struct SymplecticBasis {
  FreeModule module;
  std::vector<ModuleSection> r;
  std::vector<ModuleSection> s;
};

/// Prescribed members of a symplectic basis, keyed by 0-based pair index.
struct PartialFamily {
  std::map<std::size_t, ModuleSection> r;
  std::map<std::size_t, ModuleSection> s;
};

/// Per-component invertible M with M^T G' M = G: a map (E, phi) -> (E', phi').
struct Isometry {
  BilinearForm source;
  BilinearForm target;
  std::vector<Matrix> matrices;

  /// Re-checks invertibility and the pairing equation on every component.
  bool verify() const;
  ModuleSection apply(const ModuleSection& t) const;
};

/// `second` after `first`; first.target must equal second.source.
Isometry compose(const Isometry& second, const Isometry& first);
Isometry inverse(const Isometry& iso);

struct HyperbolicPlane {
  ModuleSection r;
  ModuleSection s;
  Submodule plane;
};

/// Block-diagonal diag([[0,1],[-1,0]], ...) of size 2n.
Matrix standard_symplectic_matrix(const Field& field, std::size_t two_n);

/// Throws OddRank, NotAlternating or Degenerate.
void require_symplectic(const BilinearForm& phi);

/// Checks the symplectic relations exactly and that the 2n sections form a
/// basis on every component.
bool verify_symplectic_basis(const BilinearForm& phi, const SymplecticBasis& basis);

/// Extends the partial family to a full symplectic basis, keeping every given
/// section at its index.
SymplecticBasis gram_schmidt_extend(const BilinearForm& phi, const PartialFamily& partial = {});

/// Pairwise orthogonal non-isotropic planes H_i = [r_i, s_i] summing to E.
std::vector<HyperbolicPlane> hyperbolic_decomposition(const BilinearForm& phi);

/// Per component, P with P^T G P = A_2n. Columns are r_1, a_1^-1 s_1, ...
std::vector<Matrix> normal_form(const BilinearForm& phi);

/// M = P' P^-1 on every component.
Isometry standard_isometry(const BilinearForm& phi, const BilinearForm& phi_prime);

/// Pairwise orthogonal planes H_i containing the i-th global basis section of
/// the totally isotropic free submodule F.
std::vector<HyperbolicPlane> hyperbolic_envelope(const BilinearForm& phi, const Submodule& f);

/// Extends sigma (given as the images of global_basis(F) in E') to an
/// isometry of E onto E'.
Isometry witt_extend(const BilinearForm& phi, const BilinearForm& phi_prime, const Submodule& f,
                     const std::vector<ModuleSection>& sigma_images);

}  // namespace symplex
