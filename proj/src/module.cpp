#include "symplex/module.hpp"

#include <algorithm>
#include <functional>

#include "symplex/error.hpp"

namespace symplex {

ModuleSection::ModuleSection(FreeModule module, OpenRef open, std::vector<Vector> vectors)
    : module_(std::move(module)), open_(open), vectors_(std::move(vectors)) {
  if (!module_.space) throw Error(ErrorCode::ModuleMismatch, "module without a space");
  const std::size_t comps = module_.space->component_count(open_);
  if (vectors_.size() != comps) {
    throw Error(ErrorCode::DimensionMismatch, "section over " + module_.space->describe(module_.space->set_of(open_)) +
                                                  " needs " + std::to_string(comps) + " vectors, got " +
                                                  std::to_string(vectors_.size()));
  }
  for (const auto& v : vectors_) {
    if (v.size() != module_.rank) {
      throw Error(ErrorCode::DimensionMismatch,
                  "vector of length " + std::to_string(v.size()) + " in a rank-" + std::to_string(module_.rank) +
                      " module");
    }
    for (const auto& x : v) {
      if (x.field() != module_.field) throw Error(ErrorCode::FieldMismatch, "entry outside " + module_.field.name());
    }
  }
}

ModuleSection ModuleSection::global(FreeModule module, std::vector<Vector> vectors) {
  OpenRef top = module.space->top();
  return ModuleSection(std::move(module), top, std::move(vectors));
}

ModuleSection ModuleSection::basis(const FreeModule& module, std::size_t i) {
  if (i >= module.rank) throw Error(ErrorCode::DimensionMismatch, "basis index out of range");
  return global(module, std::vector<Vector>(module.global_components(), unit_vector(module.field, module.rank, i)));
}

ModuleSection ModuleSection::zero(const FreeModule& module, OpenRef open) {
  return ModuleSection(module, open,
                       std::vector<Vector>(module.space->component_count(open), zero_vector(module.field, module.rank)));
}

bool ModuleSection::is_zero() const {
  return std::all_of(vectors_.begin(), vectors_.end(), [](const Vector& v) { return symplex::is_zero(v); });
}

bool ModuleSection::is_nowhere_zero() const {
  return std::none_of(vectors_.begin(), vectors_.end(), [](const Vector& v) { return symplex::is_zero(v); });
}

bool operator==(const ModuleSection& a, const ModuleSection& b) {
  return a.module_ == b.module_ && a.open_ == b.open_ && a.vectors_ == b.vectors_;
}

namespace {

void check_same(const ModuleSection& a, const ModuleSection& b) {
  if (!(a.module() == b.module())) throw Error(ErrorCode::ModuleMismatch, "sections of different modules");
  if (a.open() != b.open()) throw Error(ErrorCode::OpenMismatch, "sections over different opens");
}

void check_same(const Submodule& a, const Submodule& b) {
  if (!(a.module() == b.module())) throw Error(ErrorCode::ModuleMismatch, "submodules of different modules");
}

}  // namespace

ModuleSection add(const ModuleSection& a, const ModuleSection& b) {
  check_same(a, b);
  std::vector<Vector> out;
  for (std::size_t c = 0; c < a.vectors().size(); ++c) out.push_back(add(a[c], b[c]));
  return ModuleSection(a.module(), a.open(), std::move(out));
}

ModuleSection subtract(const ModuleSection& a, const ModuleSection& b) {
  check_same(a, b);
  std::vector<Vector> out;
  for (std::size_t c = 0; c < a.vectors().size(); ++c) out.push_back(subtract(a[c], b[c]));
  return ModuleSection(a.module(), a.open(), std::move(out));
}

ModuleSection scale(const AlgebraSection& a, const ModuleSection& t) {
  if (!same_space(a.space(), t.module().space) || a.open() != t.open()) {
    throw Error(ErrorCode::OpenMismatch, "scalar and section over different opens");
  }
  std::vector<Vector> out;
  for (std::size_t c = 0; c < t.vectors().size(); ++c) out.push_back(scale(a[c], t[c]));
  return ModuleSection(t.module(), t.open(), std::move(out));
}

ModuleSection restrict(const ModuleSection& t, OpenRef v) {
  auto map = t.module().space->component_refinement(v, t.open());
  std::vector<Vector> out;
  out.reserve(map.size());
  for (std::size_t c : map) out.push_back(t[c]);
  return ModuleSection(t.module(), v, std::move(out));
}

Submodule::Submodule(FreeModule module, std::vector<Matrix> bases) : module_(std::move(module)) {
  if (bases.size() != module_.global_components()) {
    throw Error(ErrorCode::DimensionMismatch, "submodule needs one basis per component of the space");
  }
  bases_.reserve(bases.size());
  for (auto& b : bases) {
    if (b.cols() != module_.rank) throw Error(ErrorCode::DimensionMismatch, "basis width differs from rank");
    if (b.field() != module_.field) throw Error(ErrorCode::FieldMismatch, "basis outside " + module_.field.name());
    bases_.push_back(row_space(b));
  }
}

Submodule Submodule::zero(const FreeModule& module) {
  return Submodule(module, std::vector<Matrix>(module.global_components(), Matrix(module.field, 0, module.rank)));
}

Submodule Submodule::full(const FreeModule& module) {
  return Submodule(module, std::vector<Matrix>(module.global_components(), Matrix::identity(module.field, module.rank)));
}

std::vector<std::size_t> Submodule::dims() const {
  std::vector<std::size_t> out;
  for (const auto& b : bases_) out.push_back(b.rows());
  return out;
}

bool Submodule::contains(const Submodule& other) const {
  check_same(*this, other);
  for (std::size_t c = 0; c < bases_.size(); ++c) {
    if (!subspace_contains(bases_[c], other.bases_[c])) return false;
  }
  return true;
}

Submodule span(const FreeModule& module, const std::vector<ModuleSection>& generators) {
  const std::size_t comps = module.global_components();
  std::vector<std::vector<Vector>> rows(comps);
  for (const auto& g : generators) {
    if (!(g.module() == module)) throw Error(ErrorCode::ModuleMismatch, "generator from another module");
    if (!g.is_global()) throw Error(ErrorCode::OpenMismatch, "span expects global sections");
    for (std::size_t c = 0; c < comps; ++c) rows[c].push_back(g[c]);
  }
  std::vector<Matrix> bases;
  for (std::size_t c = 0; c < comps; ++c) bases.push_back(Matrix::from_rows(module.field, module.rank, rows[c]));
  return Submodule(module, std::move(bases));
}

Submodule sum(const Submodule& f, const Submodule& g) {
  check_same(f, g);
  std::vector<Matrix> bases;
  for (std::size_t c = 0; c < f.bases().size(); ++c) bases.push_back(subspace_sum(f.basis(c), g.basis(c)));
  return Submodule(f.module(), std::move(bases));
}

Submodule intersect(const Submodule& f, const Submodule& g) {
  check_same(f, g);
  std::vector<Matrix> bases;
  for (std::size_t c = 0; c < f.bases().size(); ++c) bases.push_back(subspace_intersection(f.basis(c), g.basis(c)));
  return Submodule(f.module(), std::move(bases));
}

std::optional<std::size_t> is_free(const Submodule& f) {
  auto d = f.dims();
  if (d.empty()) return 0;
  if (std::adjacent_find(d.begin(), d.end(), std::not_equal_to<>()) != d.end()) return std::nullopt;
  return d.front();
}

std::vector<ModuleSection> global_basis(const Submodule& f) {
  auto r = is_free(f);
  if (!r) {
    std::string dims;
    for (auto d : f.dims()) dims += (dims.empty() ? "" : ",") + std::to_string(d);
    throw Error(ErrorCode::NotFree, "component dimensions (" + dims + ") differ", "dims=(" + dims + ")");
  }
  std::vector<ModuleSection> out;
  for (std::size_t i = 0; i < *r; ++i) {
    std::vector<Vector> vecs;
    for (const auto& b : f.bases()) vecs.push_back(b.row(i));
    out.push_back(ModuleSection::global(f.module(), std::move(vecs)));
  }
  return out;
}

bool membership(const Submodule& f, const ModuleSection& t) {
  if (!(f.module() == t.module())) throw Error(ErrorCode::ModuleMismatch, "section from another module");
  auto to_global = f.module().space->to_global_components(t.open());
  for (std::size_t c = 0; c < t.vectors().size(); ++c) {
    if (!subspace_contains(f.basis(to_global[c]), t[c])) return false;
  }
  return true;
}

}  // namespace symplex
