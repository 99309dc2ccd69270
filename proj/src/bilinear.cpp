#include "symplex/bilinear.hpp"

#include "symplex/error.hpp"

namespace symplex {

BilinearForm::BilinearForm(FreeModule module, std::vector<Matrix> gram)
    : module_(std::move(module)), gram_(std::move(gram)) {
  if (gram_.size() != module_.global_components()) {
    throw Error(ErrorCode::DimensionMismatch, "need one Gram matrix per component of the space (" +
                                                  std::to_string(module_.global_components()) + "), got " +
                                                  std::to_string(gram_.size()));
  }
  for (const auto& g : gram_) {
    if (g.rows() != module_.rank || g.cols() != module_.rank) {
      throw Error(ErrorCode::DimensionMismatch, "Gram matrix is not " + std::to_string(module_.rank) + "x" +
                                                    std::to_string(module_.rank));
    }
    if (g.field() != module_.field) throw Error(ErrorCode::FieldMismatch, "Gram matrix outside " + module_.field.name());
  }
}

namespace {

void check_module(const BilinearForm& phi, const FreeModule& m) {
  if (!(phi.module() == m)) throw Error(ErrorCode::ModuleMismatch, "operand belongs to another module");
}

std::string vector_text(const Vector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].to_string();
  return s + ")";
}

}  // namespace

AlgebraSection evaluate(const BilinearForm& phi, const ModuleSection& r, const ModuleSection& s) {
  check_module(phi, r.module());
  check_module(phi, s.module());
  if (r.open() != s.open()) throw Error(ErrorCode::OpenMismatch, "evaluate: sections over different opens");
  const auto& space = phi.module().space;
  auto to_global = space->to_global_components(r.open());
  std::vector<Scalar> values;
  values.reserve(to_global.size());
  for (std::size_t c = 0; c < to_global.size(); ++c) values.push_back(dot(r[c], phi.gram(to_global[c]) * s[c]));
  return AlgebraSection(space, r.open(), phi.module().field, std::move(values));
}

AlgebraSection CovectorSection::apply(const ModuleSection& s) const {
  if (!(s.module() == module) || s.open() != open) throw Error(ErrorCode::OpenMismatch, "functional applied off its open");
  std::vector<Scalar> values;
  for (std::size_t c = 0; c < rows.size(); ++c) values.push_back(dot(rows[c], s[c]));
  return AlgebraSection(module.space, open, module.field, std::move(values));
}

CovectorSection adjoint(const BilinearForm& phi, Side side, const ModuleSection& t) {
  check_module(phi, t.module());
  auto to_global = phi.module().space->to_global_components(t.open());
  CovectorSection out{phi.module(), t.open(), {}};
  for (std::size_t c = 0; c < to_global.size(); ++c) {
    const Matrix& g = phi.gram(to_global[c]);
    out.rows.push_back(side == Side::Left ? g * t[c] : g.transpose() * t[c]);
  }
  return out;
}

Submodule orthogonal(const BilinearForm& phi, const Submodule& f, Side side) {
  check_module(phi, f.module());
  std::vector<Matrix> bases;
  for (std::size_t c = 0; c < f.bases().size(); ++c) {
    const Matrix& g = phi.gram(c);
    bases.push_back(nullspace(f.basis(c) * (side == Side::Left ? g : g.transpose())));
  }
  return Submodule(f.module(), std::move(bases));
}

bool is_symmetric(const Matrix& g) { return g == g.transpose(); }

bool is_alternating(const Matrix& g) {
  if (!(g == -g.transpose())) return false;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    if (!g(i, i).is_zero()) return false;
  }
  return true;
}

bool is_alternating(const BilinearForm& phi) {
  for (const auto& g : phi.gram()) {
    if (!is_alternating(g)) return false;
  }
  return true;
}

bool is_nondegenerate(const BilinearForm& phi) {
  for (const auto& g : phi.gram()) {
    if (rank(g) != g.rows()) return false;
  }
  return true;
}

namespace {

// Some x with x^T G and x^T G^T independent in the sense that the second is
// not a multiple of the first; then any y with x^T G y = 0 != x^T G^T y works.
std::optional<std::pair<Vector, Vector>> search_witness(const Matrix& g) {
  const std::size_t n = g.rows();
  const Field field = g.field();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (g(i, j).is_zero() && !g(j, i).is_zero()) {
        return std::make_pair(unit_vector(field, n, i), unit_vector(field, n, j));
      }
    }
  }
  auto try_x = [&](const Vector& x) -> std::optional<std::pair<Vector, Vector>> {
    Vector f = g.transpose() * x;  // y -> x^T G y
    Vector h = g * x;              // y -> y^T G x
    Matrix fm = Matrix::from_rows(field, n, {f});
    if (subspace_contains(row_space(fm), h)) return std::nullopt;
    Matrix ker = nullspace(fm);
    for (std::size_t r = 0; r < ker.rows(); ++r) {
      Vector y = ker.row(r);
      if (!dot(h, y).is_zero()) return std::make_pair(x, y);
    }
    return std::nullopt;
  };
  // Coefficient vectors over {0, 1, -1}, fewest non-zero entries first.
  if (n > 10) return std::nullopt;
  std::size_t total = 1;
  for (std::size_t k = 0; k < n; ++k) total *= 3;
  auto decode = [&](std::size_t code, std::size_t* weight) {
    Vector x = zero_vector(field, n);
    *weight = 0;
    for (std::size_t k = 0; k < n; ++k, code /= 3) {
      auto d = static_cast<long>(code % 3);
      if (d == 0) continue;
      x[k] = Scalar(field, d == 2 ? -1L : 1L);
      ++*weight;
    }
    return x;
  };
  for (std::size_t target = 1; target <= n; ++target) {
    for (std::size_t code = 1; code < total; ++code) {
      std::size_t weight = 0;
      Vector x = decode(code, &weight);
      if (weight != target) continue;
      if (auto w = try_x(x)) return w;
    }
  }
  return std::nullopt;
}

}  // namespace

OrthoClass classify_orthosymmetry(const BilinearForm& phi) {
  OrthoClass out;
  out.orthosymmetric = true;
  const auto& space = phi.module().space;
  for (std::size_t c = 0; c < phi.gram().size(); ++c) {
    const Matrix& g = phi.gram(c);
    ComponentClass cls{is_symmetric(g), is_alternating(g)};
    out.components.push_back(cls);
    if (cls.symmetric || cls.alternating) continue;
    out.orthosymmetric = false;
    if (out.witness) continue;
    auto found = search_witness(g);
    if (!found) throw Error(ErrorCode::Internal, "no orthosymmetry witness found for " + g.to_string());
    // Components of the whole space are open, so the witness lives over one of them.
    OpenRef u = space->find(space->components(space->top())[c]);
    out.witness = OrthoWitness{u, c, ModuleSection(phi.module(), u, {found->first}),
                               ModuleSection(phi.module(), u, {found->second})};
  }
  return out;
}

Submodule radical(const BilinearForm& phi, const Submodule& f) {
  auto cls = classify_orthosymmetry(phi);
  if (!cls.orthosymmetric) {
    const auto& w = *cls.witness;
    throw Error(ErrorCode::NotOrthosymmetric, "the radical needs an orthosymmetric form",
                "r=" + vector_text(w.r[0]) + " s=" + vector_text(w.s[0]));
  }
  return intersect(f, orthogonal(phi, f, Side::Left));
}

bool is_non_isotropic(const BilinearForm& phi, const Submodule& f) {
  check_module(phi, f.module());
  for (std::size_t c = 0; c < f.bases().size(); ++c) {
    const Matrix& b = f.basis(c);
    Matrix restricted = b * phi.gram(c) * b.transpose();
    if (rank(restricted) != restricted.rows()) return false;
  }
  return true;
}

ModuleSection project(const BilinearForm& phi, const Submodule& f, const ModuleSection& t) {
  check_module(phi, f.module());
  check_module(phi, t.module());
  if (!is_free(f)) throw Error(ErrorCode::NotFree, "projection onto a non-free submodule");
  if (!is_non_isotropic(phi, f)) throw Error(ErrorCode::IsotropicSubmodule, "phi restricted to F is degenerate");
  auto to_global = phi.module().space->to_global_components(t.open());
  std::vector<Vector> out;
  for (std::size_t c = 0; c < to_global.size(); ++c) {
    const Matrix& b = f.basis(to_global[c]);
    Matrix bgt = b * phi.gram(to_global[c]).transpose();
    // phi(t - B^T x, s) = 0 for s in rows(B)  <=>  (B G^T B^T) x = B G^T t
    auto x = solve(bgt * b.transpose(), bgt * t[c]);
    if (!x) throw Error(ErrorCode::Internal, "projection system inconsistent");
    out.push_back(b.transpose() * *x);
  }
  return ModuleSection(t.module(), t.open(), std::move(out));
}

OrthogonalSplit orthogonal_split(const BilinearForm& phi, const Submodule& f) {
  check_module(phi, f.module());
  if (!is_free(f)) throw Error(ErrorCode::NotFree, "splitting off a non-free submodule");
  if (!is_non_isotropic(phi, f)) throw Error(ErrorCode::IsotropicSubmodule, "phi restricted to F is degenerate");
  Submodule complement = orthogonal(phi, f, Side::Right);
  OrthogonalSplit out{f, complement, true, true};
  const auto df = f.dims();
  const auto dc = complement.dims();
  Submodule meet = intersect(f, complement);
  for (std::size_t c = 0; c < df.size(); ++c) {
    if (df[c] + dc[c] != phi.module().rank) out.dimensions_add_up = false;
    if (meet.basis(c).rows() != 0) out.intersection_zero = false;
  }
  return out;
}

BilinearForm induced_form(const BilinearForm& phi, const std::vector<ModuleSection>& basis) {
  const FreeModule& m = phi.module();
  FreeModule coords(m.space, m.field, basis.size());
  std::vector<Matrix> grams;
  for (std::size_t c = 0; c < m.global_components(); ++c) {
    std::vector<Vector> rows;
    for (const auto& b : basis) {
      check_module(phi, b.module());
      if (!b.is_global()) throw Error(ErrorCode::OpenMismatch, "induced form needs global sections");
      rows.push_back(b[c]);
    }
    Matrix bm = Matrix::from_rows(m.field, m.rank, rows);
    grams.push_back(bm * phi.gram(c) * bm.transpose());
  }
  return BilinearForm(coords, std::move(grams));
}

}  // namespace symplex
