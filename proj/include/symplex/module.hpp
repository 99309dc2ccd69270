#pragma once

#include <optional>
#include <vector>

#include "symplex/algebra.hpp"
#include "symplex/matrix.hpp"
#include "symplex/topology.hpp"

namespace symplex {

/// The free module A^n over a finite space, with its canonical global basis e_1..e_n.
struct FreeModule {
  SpacePtr space;
  Field field;
  std::size_t rank = 0;

  FreeModule() = default;
  FreeModule(SpacePtr s, Field f, std::size_t n) : space(std::move(s)), field(f), rank(n) {}

  /// Connected components of the whole space; every per-component table in
  /// this library is indexed by these.
  std::size_t global_components() const { return space->component_count(space->top()); }

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return same_space(a.space, b.space) && a.field == b.field && a.rank == b.rank;
  }
};

/// A section of the module over an open U: one length-n vector per component of U.
class ModuleSection {
 public:
  ModuleSection(FreeModule module, OpenRef open, std::vector<Vector> vectors);

  /// Section over the whole space.
  static ModuleSection global(FreeModule module, std::vector<Vector> vectors);
  /// The i-th canonical basis section (0-based) over the whole space.
  static ModuleSection basis(const FreeModule& module, std::size_t i);
  static ModuleSection zero(const FreeModule& module, OpenRef open);

  const FreeModule& module() const noexcept { return module_; }
  OpenRef open() const noexcept { return open_; }
  const std::vector<Vector>& vectors() const noexcept { return vectors_; }
  const Vector& operator[](std::size_t component) const { return vectors_.at(component); }
  bool is_global() const { return open_ == module_.space->top(); }

  bool is_zero() const;
  /// Non-zero on every component, i.e. non-zero after restriction to any non-empty open.
  bool is_nowhere_zero() const;

  friend bool operator==(const ModuleSection& a, const ModuleSection& b);

 private:
  FreeModule module_;
  OpenRef open_;
  std::vector<Vector> vectors_;
};

ModuleSection add(const ModuleSection& a, const ModuleSection& b);
ModuleSection subtract(const ModuleSection& a, const ModuleSection& b);
/// a . t for a in A(U), t in E(U).
ModuleSection scale(const AlgebraSection& a, const ModuleSection& t);
ModuleSection restrict(const ModuleSection& t, OpenRef v);

/// Sub-A-module given by one subspace of k^n per component of the whole
/// space. Sections over U are read off through component_refinement.
class Submodule {
 public:
  /// Each basis is echelonized on entry.
  Submodule(FreeModule module, std::vector<Matrix> bases);

  static Submodule zero(const FreeModule& module);
  static Submodule full(const FreeModule& module);

  const FreeModule& module() const noexcept { return module_; }
  const std::vector<Matrix>& bases() const noexcept { return bases_; }
  const Matrix& basis(std::size_t component) const { return bases_.at(component); }
  std::vector<std::size_t> dims() const;

  /// Subspace inclusion on every component.
  bool contains(const Submodule& other) const;

  friend bool operator==(const Submodule& a, const Submodule& b) {
    return a.module_ == b.module_ && a.bases_ == b.bases_;
  }

 private:
  FreeModule module_;
  std::vector<Matrix> bases_;
};

/// The A(X)-span [g_1, ..., g_k] of global sections.
Submodule span(const FreeModule& module, const std::vector<ModuleSection>& generators);
Submodule sum(const Submodule& f, const Submodule& g);
Submodule intersect(const Submodule& f, const Submodule& g);

/// Rank r when every component has dimension r.
std::optional<std::size_t> is_free(const Submodule& f);

/// Glues the i-th echelon row of each component into the i-th global section.
/// Throws NotFree.
std::vector<ModuleSection> global_basis(const Submodule& f);

/// t lies in F(U), U = open(t).
bool membership(const Submodule& f, const ModuleSection& t);

}  // namespace symplex
