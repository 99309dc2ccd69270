#pragma once

#include <optional>
#include <vector>

#include "symplex/algebra.hpp"
#include "symplex/module.hpp"

namespace symplex {

/// An A-bilinear form on a free module, stored as one Gram matrix per
/// component of the whole space with respect to the canonical basis:
/// phi_U(r, s) has value r^T G s on each component of U.
class BilinearForm {
 public:
  BilinearForm(FreeModule module, std::vector<Matrix> gram);

  const FreeModule& module() const noexcept { return module_; }
  const std::vector<Matrix>& gram() const noexcept { return gram_; }
  const Matrix& gram(std::size_t component) const { return gram_.at(component); }

  friend bool operator==(const BilinearForm& a, const BilinearForm& b) {
    return a.module_ == b.module_ && a.gram_ == b.gram_;
  }

 private:
  FreeModule module_;
  std::vector<Matrix> gram_;
};

/// Which slot an orthogonal or adjoint is taken against.
///   Left  (perp):  F^perp = { t : phi(s, t) = 0 for all s in F }
///   Right (top):   F^top  = { t : phi(t, s) = 0 for all s in F }
enum class Side { Left, Right };

AlgebraSection evaluate(const BilinearForm& phi, const ModuleSection& r, const ModuleSection& s);

/// A section of the dual module: one row vector (functional) per component.
struct CovectorSection {
  FreeModule module;
  OpenRef open;
  std::vector<Vector> rows;

  AlgebraSection apply(const ModuleSection& s) const;
  friend bool operator==(const CovectorSection&, const CovectorSection&) = default;
};

/// Left: s -> phi(s, t), row (G t)^T.  Right: s -> phi(t, s), row t^T G.
CovectorSection adjoint(const BilinearForm& phi, Side side, const ModuleSection& t);

Submodule orthogonal(const BilinearForm& phi, const Submodule& f, Side side);

bool is_symmetric(const Matrix& g);
/// G = -G^T with zero diagonal.
bool is_alternating(const Matrix& g);
bool is_alternating(const BilinearForm& phi);
bool is_nondegenerate(const BilinearForm& phi);

struct ComponentClass {
  bool symmetric = false;
  bool alternating = false;
};

/// Sections r, s over `open` with phi(r, s) = 0 while phi(s, r) is nowhere zero.
struct OrthoWitness {
  OpenRef open;
  std::size_t component = 0;  ///< global component that fails
  ModuleSection r;
  ModuleSection s;
};

struct OrthoClass {
  std::vector<ComponentClass> components;
  bool orthosymmetric = false;
  std::optional<OrthoWitness> witness;
};

OrthoClass classify_orthosymmetry(const BilinearForm& phi);

/// F cap F^perp. Throws NotOrthosymmetric.
Submodule radical(const BilinearForm& phi, const Submodule& f);

/// The Gram matrix of phi restricted to F is invertible on every component.
bool is_non_isotropic(const BilinearForm& phi, const Submodule& f);

/// p(t) in F(U) with phi(t - p(t), s) = 0 for every s in F. Requires F free
/// and non-isotropic (NotFree / IsotropicSubmodule).
ModuleSection project(const BilinearForm& phi, const Submodule& f, const ModuleSection& t);

struct OrthogonalSplit {
  Submodule f;
  Submodule complement;  ///< { z : phi(z, s) = 0 for s in F }, the kernel of project()
  bool dimensions_add_up = false;
  bool intersection_zero = false;
};

OrthogonalSplit orthogonal_split(const BilinearForm& phi, const Submodule& f);

/// The form phi restricted to the span of `basis` (global sections), written
/// on the coordinate module of rank basis.size().
BilinearForm induced_form(const BilinearForm& phi, const std::vector<ModuleSection>& basis);

}  // namespace symplex
