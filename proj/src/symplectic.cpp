#include "symplex/symplectic.hpp"

#include <optional>
#include <set>

#include "symplex/error.hpp"

namespace symplex {

namespace {

std::string label(char kind, std::size_t i) { return std::string(1, kind) + std::to_string(i + 1); }

Scalar pairing(const Matrix& g, const Vector& x, const Vector& y) { return dot(x, g * y); }

/// Row vector of the functional x -> phi(a, x).
Vector left_functional(const Matrix& g, const Vector& a) { return g.transpose() * a; }
/// Row vector of the functional x -> phi(x, b).
Vector right_functional(const Matrix& g, const Vector& b) { return g * b; }

/// Solutions of the listed functionals, or the whole space when there are none.
Matrix common_kernel(const Field& field, std::size_t n, const std::vector<Vector>& functionals) {
  return nullspace(Matrix::from_rows(field, n, functionals));
}

/// Least-index echelon row of `candidates` on which `score` does not vanish.
template <typename Score>
std::optional<Vector> first_partner(const Matrix& candidates, Score score) {
  for (std::size_t i = 0; i < candidates.rows(); ++i) {
    Vector x = candidates.row(i);
    if (!score(x).is_zero()) return x;
  }
  return std::nullopt;
}

void check_same_module(const FreeModule& expected, const ModuleSection& t, const std::string& what) {
  if (!(t.module() == expected)) throw Error(ErrorCode::ModuleMismatch, what + " belongs to another module");
  if (!t.is_global()) throw Error(ErrorCode::OpenMismatch, what + " must be a global section");
}

std::string algebra_text(const AlgebraSection& a) {
  std::string s = "(";
  for (std::size_t i = 0; i < a.values().size(); ++i) s += (i ? "," : "") + a[i].to_string();
  return s + ")";
}

void validate_partial(const BilinearForm& phi, const PartialFamily& partial, std::size_t half) {
  const FreeModule& m = phi.module();
  auto check_member = [&](char kind, std::size_t i, const ModuleSection& t) {
    if (i >= half) {
      throw Error(ErrorCode::PartialRelationsViolated,
                  label(kind, i) + " is outside 1.." + std::to_string(half), label(kind, i));
    }
    check_same_module(m, t, label(kind, i));
    if (!t.is_nowhere_zero()) {
      throw Error(ErrorCode::PartialRelationsViolated, label(kind, i) + " vanishes on a component", label(kind, i));
    }
  };
  for (const auto& [i, t] : partial.r) check_member('r', i, t);
  for (const auto& [j, t] : partial.s) check_member('s', j, t);

  const AlgebraSection zero = AlgebraSection::zero(m.space, m.space->top(), m.field);
  const AlgebraSection unit = AlgebraSection::unit(m.space, m.space->top(), m.field);
  auto require = [&](char ka, std::size_t i, const ModuleSection& a, char kb, std::size_t j, const ModuleSection& b,
                     const AlgebraSection& expected) {
    AlgebraSection got = evaluate(phi, a, b);
    if (!(got == expected)) {
      std::string pair = "(" + label(ka, i) + ", " + label(kb, j) + ")";
      throw Error(ErrorCode::PartialRelationsViolated,
                  "phi" + pair + " = " + algebra_text(got) + ", expected " + algebra_text(expected), pair);
    }
  };
  for (const auto& [i, a] : partial.r)
    for (const auto& [j, b] : partial.r) require('r', i, a, 'r', j, b, zero);
  for (const auto& [i, a] : partial.s)
    for (const auto& [j, b] : partial.s) require('s', i, a, 's', j, b, zero);
  for (const auto& [i, a] : partial.r)
    for (const auto& [j, b] : partial.s) require('r', i, a, 's', j, b, i == j ? unit : zero);

  for (std::size_t c = 0; c < m.global_components(); ++c) {
    std::vector<Vector> rows;
    for (const auto& [i, t] : partial.r) rows.push_back(t[c]);
    for (const auto& [j, t] : partial.s) rows.push_back(t[c]);
    if (rank(Matrix::from_rows(m.field, m.rank, rows)) != rows.size()) {
      throw Error(ErrorCode::PartialRelationsViolated,
                  "the partial family is linearly dependent on component " + std::to_string(c),
                  "component=" + std::to_string(c));
    }
  }
}

/// Replaces each row z of `rows` by z + phi(z, r) s - phi(z, s) r, the part of
/// z orthogonal to the plane [r, s] when phi(r, s) = 1.
Matrix split_off_plane(const Matrix& g, const Matrix& rows, const Vector& r, const Vector& s) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    Vector z = rows.row(i);
    Vector p = add(z, scale(pairing(g, z, r), s));
    p = subtract(p, scale(pairing(g, z, s), r));
    out.push_back(std::move(p));
  }
  return row_space(Matrix::from_rows(g.field(), g.cols(), out));
}

std::vector<std::pair<ModuleSection, ModuleSection>> symplectic_pairs(const BilinearForm& phi) {
  SymplecticBasis basis = gram_schmidt_extend(phi);
  std::vector<std::pair<ModuleSection, ModuleSection>> out;
  for (std::size_t i = 0; i < basis.r.size(); ++i) out.emplace_back(basis.r[i], basis.s[i]);
  return out;
}

/// Partners s_i for the isotropic sections r_i inside the non-degenerate
/// ambient submodule W: s_i is taken from W cut down by the planes already
/// built and orthogonal to every later r_j, so the planes come out pairwise
/// orthogonal.
std::vector<ModuleSection> envelope_partners(const BilinearForm& phi, Submodule ambient,
                                             const std::vector<ModuleSection>& rs) {
  const FreeModule& m = phi.module();
  std::vector<ModuleSection> partners;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    std::vector<Vector> chosen;
    for (std::size_t c = 0; c < m.global_components(); ++c) {
      const Matrix& g = phi.gram(c);
      std::vector<Vector> constraints;
      for (std::size_t j = i + 1; j < rs.size(); ++j) constraints.push_back(left_functional(g, rs[j][c]));
      Matrix candidates = subspace_intersection(ambient.basis(c), common_kernel(m.field, m.rank, constraints));
      auto x = first_partner(candidates, [&](const Vector& v) { return pairing(g, rs[i][c], v); });
      if (!x) {
        throw Error(ErrorCode::PartnerNotFound,
                    "no partner for " + label('r', i) + " on component " + std::to_string(c), label('r', i));
      }
      chosen.push_back(std::move(*x));
    }
    partners.push_back(ModuleSection::global(m, std::move(chosen)));
    Submodule plane = span(m, {rs[i], partners.back()});
    ambient = intersect(ambient, orthogonal(phi, plane, Side::Left));
  }
  return partners;
}

void require_free(const Submodule& f, const std::string& what) {
  if (!is_free(f)) {
    std::string dims;
    for (auto d : f.dims()) dims += (dims.empty() ? "" : ",") + std::to_string(d);
    throw Error(ErrorCode::FreenessViolated, what + " is not free: component dimensions (" + dims + ")",
                what + " dims=(" + dims + ")");
  }
}

/// sigma(v) for v in F, from the images of F's global basis.
ModuleSection map_through(const FreeModule& target, const std::vector<ModuleSection>& basis,
                          const std::vector<ModuleSection>& images, const ModuleSection& v) {
  const FreeModule& m = v.module();
  std::vector<Vector> out;
  for (std::size_t c = 0; c < m.global_components(); ++c) {
    std::vector<Vector> cols;
    for (const auto& b : basis) cols.push_back(b[c]);
    auto x = solve(Matrix::from_columns(m.field, m.rank, cols), v[c]);
    if (!x) throw Error(ErrorCode::Internal, "section is not in the domain of sigma");
    Vector y = zero_vector(target.field, target.rank);
    for (std::size_t i = 0; i < images.size(); ++i) y = add(y, scale((*x)[i], images[i][c]));
    out.push_back(std::move(y));
  }
  return ModuleSection::global(target, std::move(out));
}

}  // namespace

Matrix standard_symplectic_matrix(const Field& field, std::size_t two_n) {
  if (two_n % 2 != 0) throw Error(ErrorCode::OddRank, "A_2n needs even size");
  Matrix a(field, two_n, two_n);
  for (std::size_t i = 0; i < two_n; i += 2) {
    a(i, i + 1) = Scalar::one(field);
    a(i + 1, i) = -Scalar::one(field);
  }
  return a;
}

void require_symplectic(const BilinearForm& phi) {
  if (phi.module().rank % 2 != 0) {
    throw Error(ErrorCode::OddRank, "symplectic forms need even rank, got " + std::to_string(phi.module().rank));
  }
  for (std::size_t c = 0; c < phi.gram().size(); ++c) {
    if (!is_alternating(phi.gram(c))) {
      throw Error(ErrorCode::NotAlternating, "Gram matrix on component " + std::to_string(c) + " is not alternating",
                  "component=" + std::to_string(c));
    }
  }
  for (std::size_t c = 0; c < phi.gram().size(); ++c) {
    if (rank(phi.gram(c)) != phi.module().rank) {
      throw Error(ErrorCode::Degenerate, "Gram matrix on component " + std::to_string(c) + " is singular",
                  "component=" + std::to_string(c));
    }
  }
}

bool verify_symplectic_basis(const BilinearForm& phi, const SymplecticBasis& basis) {
  const FreeModule& m = phi.module();
  if (basis.r.size() != basis.s.size() || 2 * basis.r.size() != m.rank) return false;
  const AlgebraSection zero = AlgebraSection::zero(m.space, m.space->top(), m.field);
  const AlgebraSection unit = AlgebraSection::unit(m.space, m.space->top(), m.field);
  const std::size_t n = basis.r.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!(evaluate(phi, basis.r[i], basis.r[j]) == zero)) return false;
      if (!(evaluate(phi, basis.s[i], basis.s[j]) == zero)) return false;
      if (!(evaluate(phi, basis.r[i], basis.s[j]) == (i == j ? unit : zero))) return false;
    }
  }
  for (std::size_t c = 0; c < m.global_components(); ++c) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back(basis.r[i][c]);
      rows.push_back(basis.s[i][c]);
    }
    if (rank(Matrix::from_rows(m.field, m.rank, rows)) != m.rank) return false;
  }
  return true;
}

SymplecticBasis gram_schmidt_extend(const BilinearForm& phi, const PartialFamily& partial) {
  require_symplectic(phi);
  const FreeModule& m = phi.module();
  const std::size_t half = m.rank / 2;
  const std::size_t comps = m.global_components();
  validate_partial(phi, partial, half);

  std::map<std::size_t, ModuleSection> r = partial.r;
  std::map<std::size_t, ModuleSection> s = partial.s;

  // Case 3: every s_k without its r_k gets a partner orthogonal to the rest
  // of the family, normalized so that phi(r_k, s_k) = 1.
  for (const auto& [k, sk] : partial.s) {
    if (r.count(k)) continue;
    std::vector<Vector> chosen;
    for (std::size_t c = 0; c < comps; ++c) {
      const Matrix& g = phi.gram(c);
      std::vector<Vector> constraints;
      for (const auto& [i, ri] : r) constraints.push_back(left_functional(g, ri[c]));
      for (const auto& [j, sj] : s) {
        if (j != k) constraints.push_back(right_functional(g, sj[c]));
      }
      auto x = first_partner(common_kernel(m.field, m.rank, constraints),
                             [&](const Vector& v) { return pairing(g, v, sk[c]); });
      if (!x) throw Error(ErrorCode::PartnerNotFound, "no partner for " + label('s', k), label('s', k));
      chosen.push_back(std::move(*x));
    }
    ModuleSection rbar = ModuleSection::global(m, std::move(chosen));
    AlgebraSection v = evaluate(phi, rbar, sk);
    r.emplace(k, scale(invert(v), rbar));
  }
  for (const auto& [k, rk] : partial.r) {
    if (s.count(k)) continue;
    std::vector<Vector> chosen;
    for (std::size_t c = 0; c < comps; ++c) {
      const Matrix& g = phi.gram(c);
      std::vector<Vector> constraints;
      for (const auto& [i, ri] : r) {
        if (i != k) constraints.push_back(left_functional(g, ri[c]));
      }
      for (const auto& [j, sj] : s) constraints.push_back(left_functional(g, sj[c]));
      auto x = first_partner(common_kernel(m.field, m.rank, constraints),
                             [&](const Vector& v) { return pairing(g, rk[c], v); });
      if (!x) throw Error(ErrorCode::PartnerNotFound, "no partner for " + label('r', k), label('r', k));
      chosen.push_back(std::move(*x));
    }
    ModuleSection sbar = ModuleSection::global(m, std::move(chosen));
    AlgebraSection u = evaluate(phi, rk, sbar);
    s.emplace(k, scale(invert(u), sbar));
  }

  // Case 2: split off the span S of the matched pairs. The orthogonal
  // complement is spanned by z - sum phi(z, r_i) s_i + ... applied to e_1..e_2n.
  std::vector<Matrix> complement;
  for (std::size_t c = 0; c < comps; ++c) {
    const Matrix& g = phi.gram(c);
    std::vector<Vector> rows;
    for (std::size_t e = 0; e < m.rank; ++e) {
      Vector z = unit_vector(m.field, m.rank, e);
      Vector t = z;
      for (const auto& [i, ri] : r) {
        t = add(t, scale(pairing(g, z, ri[c]), s.at(i)[c]));
        t = subtract(t, scale(pairing(g, z, s.at(i)[c]), ri[c]));
      }
      rows.push_back(std::move(t));
    }
    complement.push_back(row_space(Matrix::from_rows(m.field, m.rank, rows)));
  }

  // Case 1: on the complement T pick r as its first echelon row, a partner of
  // least index, normalize, and recurse on the orthogonal of the new plane.
  for (std::size_t idx = 0; idx < half; ++idx) {
    if (r.count(idx)) continue;
    std::vector<Vector> r_vecs, s_bar;
    for (std::size_t c = 0; c < comps; ++c) {
      const Matrix& g = phi.gram(c);
      if (complement[c].rows() < 2) {
        throw Error(ErrorCode::PartnerNotFound, "complement exhausted before " + label('r', idx), label('r', idx));
      }
      Vector rv = complement[c].row(0);
      auto x = first_partner(complement[c], [&](const Vector& v) { return pairing(g, rv, v); });
      if (!x) throw Error(ErrorCode::PartnerNotFound, "no partner for " + label('r', idx), label('r', idx));
      r_vecs.push_back(std::move(rv));
      s_bar.push_back(std::move(*x));
    }
    ModuleSection rr = ModuleSection::global(m, std::move(r_vecs));
    ModuleSection sbar = ModuleSection::global(m, std::move(s_bar));
    ModuleSection ss = scale(invert(evaluate(phi, rr, sbar)), sbar);
    for (std::size_t c = 0; c < comps; ++c) complement[c] = split_off_plane(phi.gram(c), complement[c], rr[c], ss[c]);
    r.emplace(idx, std::move(rr));
    s.emplace(idx, std::move(ss));
  }

  SymplecticBasis out{m, {}, {}};
  for (std::size_t i = 0; i < half; ++i) {
    out.r.push_back(r.at(i));
    out.s.push_back(s.at(i));
  }
  if (!verify_symplectic_basis(phi, out)) throw Error(ErrorCode::Internal, "Gram-Schmidt produced an invalid basis");
  return out;
}

std::vector<HyperbolicPlane> hyperbolic_decomposition(const BilinearForm& phi) {
  std::vector<HyperbolicPlane> planes;
  for (auto& [r, s] : symplectic_pairs(phi)) {
    Submodule plane = span(phi.module(), {r, s});
    planes.push_back(HyperbolicPlane{std::move(r), std::move(s), std::move(plane)});
  }
  return planes;
}

std::vector<Matrix> normal_form(const BilinearForm& phi) {
  const FreeModule& m = phi.module();
  auto planes = hyperbolic_decomposition(phi);
  std::vector<std::vector<Vector>> columns(m.global_components());
  for (const auto& h : planes) {
    AlgebraSection a = evaluate(phi, h.r, h.s);
    ModuleSection s_normalized = scale(invert(a), h.s);
    for (std::size_t c = 0; c < columns.size(); ++c) {
      columns[c].push_back(h.r[c]);
      columns[c].push_back(s_normalized[c]);
    }
  }
  std::vector<Matrix> out;
  for (const auto& cols : columns) out.push_back(Matrix::from_columns(m.field, m.rank, cols));
  return out;
}

bool Isometry::verify() const {
  const FreeModule& m = source.module();
  if (!same_space(m.space, target.module().space) || m.field != target.module().field) return false;
  if (m.rank != target.module().rank || matrices.size() != m.global_components()) return false;
  for (std::size_t c = 0; c < matrices.size(); ++c) {
    const Matrix& mc = matrices[c];
    if (mc.rows() != m.rank || mc.cols() != m.rank || rank(mc) != m.rank) return false;
    if (!(mc.transpose() * target.gram(c) * mc == source.gram(c))) return false;
  }
  return true;
}

ModuleSection Isometry::apply(const ModuleSection& t) const {
  if (!(t.module() == source.module())) throw Error(ErrorCode::ModuleMismatch, "isometry applied off its domain");
  auto to_global = t.module().space->to_global_components(t.open());
  std::vector<Vector> out;
  for (std::size_t c = 0; c < to_global.size(); ++c) out.push_back(matrices.at(to_global[c]) * t[c]);
  return ModuleSection(target.module(), t.open(), std::move(out));
}

Isometry compose(const Isometry& second, const Isometry& first) {
  if (!(first.target == second.source)) throw Error(ErrorCode::ModuleMismatch, "isometries do not compose");
  std::vector<Matrix> ms;
  for (std::size_t c = 0; c < first.matrices.size(); ++c) ms.push_back(second.matrices[c] * first.matrices[c]);
  return Isometry{first.source, second.target, std::move(ms)};
}

Isometry inverse(const Isometry& iso) {
  std::vector<Matrix> ms;
  for (const auto& mc : iso.matrices) ms.push_back(inverse(mc));
  return Isometry{iso.target, iso.source, std::move(ms)};
}

Isometry standard_isometry(const BilinearForm& phi, const BilinearForm& phi_prime) {
  if (!same_space(phi.module().space, phi_prime.module().space) || phi.module().field != phi_prime.module().field) {
    throw Error(ErrorCode::ModuleMismatch, "forms over different spaces or fields");
  }
  if (phi.module().rank != phi_prime.module().rank) {
    throw Error(ErrorCode::RankMismatch, "ranks " + std::to_string(phi.module().rank) + " and " +
                                             std::to_string(phi_prime.module().rank) + " differ");
  }
  auto p = normal_form(phi);
  auto p_prime = normal_form(phi_prime);
  std::vector<Matrix> ms;
  for (std::size_t c = 0; c < p.size(); ++c) ms.push_back(p_prime[c] * inverse(p[c]));
  return Isometry{phi, phi_prime, std::move(ms)};
}

std::vector<HyperbolicPlane> hyperbolic_envelope(const BilinearForm& phi, const Submodule& f) {
  if (!(f.module() == phi.module())) throw Error(ErrorCode::ModuleMismatch, "submodule of another module");
  require_symplectic(phi);
  if (!is_free(f)) throw Error(ErrorCode::NotFree, "the isotropic submodule must be free");
  if (!orthogonal(phi, f, Side::Left).contains(f)) {
    throw Error(ErrorCode::NotTotallyIsotropic, "F is not contained in its orthogonal");
  }
  auto rs = global_basis(f);
  auto partners = envelope_partners(phi, Submodule::full(phi.module()), rs);
  std::vector<HyperbolicPlane> planes;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    Submodule plane = span(phi.module(), {rs[i], partners[i]});
    planes.push_back(HyperbolicPlane{rs[i], partners[i], std::move(plane)});
  }
  return planes;
}

Isometry witt_extend(const BilinearForm& phi, const BilinearForm& phi_prime, const Submodule& f,
                     const std::vector<ModuleSection>& sigma_images) {
  const FreeModule& m = phi.module();
  const FreeModule& mp = phi_prime.module();
  if (!same_space(m.space, mp.space) || m.field != mp.field) {
    throw Error(ErrorCode::ModuleMismatch, "forms over different spaces or fields");
  }
  if (m.rank != mp.rank) {
    throw Error(ErrorCode::RankMismatch,
                "ranks " + std::to_string(m.rank) + " and " + std::to_string(mp.rank) + " differ");
  }
  if (!(f.module() == m)) throw Error(ErrorCode::ModuleMismatch, "F is not a submodule of the source");

  // Convenient-module gates: F, its orthogonal and its radical must be free.
  require_free(f, "F");
  Submodule f_perp = orthogonal(phi, f, Side::Left);
  require_free(f_perp, "F-perp");
  Submodule rad = intersect(f, f_perp);
  require_free(rad, "rad F");

  require_symplectic(phi);
  require_symplectic(phi_prime);

  const auto basis = global_basis(f);
  if (sigma_images.size() != basis.size()) {
    throw Error(ErrorCode::IsometryHypothesisViolated, "sigma needs " + std::to_string(basis.size()) +
                                                           " images, got " + std::to_string(sigma_images.size()));
  }
  for (std::size_t i = 0; i < sigma_images.size(); ++i) check_same_module(mp, sigma_images[i], "sigma image");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = 0; j < basis.size(); ++j) {
      AlgebraSection before = evaluate(phi, basis[i], basis[j]);
      AlgebraSection after = evaluate(phi_prime, sigma_images[i], sigma_images[j]);
      if (!(before == after)) {
        std::string pair = "(b" + std::to_string(i + 1) + ", b" + std::to_string(j + 1) + ")";
        throw Error(ErrorCode::IsometryHypothesisViolated,
                    "sigma changes phi" + pair + " from " + algebra_text(before) + " to " + algebra_text(after), pair);
      }
    }
  }
  for (std::size_t c = 0; c < m.global_components(); ++c) {
    std::vector<Vector> rows;
    for (const auto& t : sigma_images) rows.push_back(t[c]);
    if (rank(Matrix::from_rows(mp.field, mp.rank, rows)) != rows.size()) {
      throw Error(ErrorCode::IsometryHypothesisViolated,
                  "sigma is not injective on component " + std::to_string(c), "component=" + std::to_string(c));
    }
  }

  // F = G + rad F with G any complement of the radical inside F; rad F is
  // orthogonal to all of F, so the sum is orthogonal.
  std::vector<Matrix> g_bases;
  for (std::size_t c = 0; c < m.global_components(); ++c) {
    Matrix chosen = rad.basis(c);
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < f.basis(c).rows(); ++i) {
      Vector b = f.basis(c).row(i);
      if (subspace_contains(chosen, b)) continue;
      rows.push_back(b);
      chosen = subspace_sum(chosen, Matrix::from_rows(m.field, m.rank, {b}));
    }
    g_bases.push_back(Matrix::from_rows(m.field, m.rank, rows));
  }
  Submodule g_sub(m, g_bases);
  require_free(g_sub, "radical complement");

  const auto rad_basis = global_basis(rad);
  const auto g_basis = global_basis(g_sub);
  std::vector<ModuleSection> rad_images, g_images;
  for (const auto& v : rad_basis) rad_images.push_back(map_through(mp, basis, sigma_images, v));
  for (const auto& v : g_basis) g_images.push_back(map_through(mp, basis, sigma_images, v));

  // Hyperbolic envelopes of rad F inside G-perp and of sigma(rad F) inside sigma(G)-perp.
  Submodule g_perp = orthogonal(phi, g_sub, Side::Left);
  require_free(g_perp, "G-perp");
  Submodule g_prime = span(mp, g_images);
  Submodule g_prime_perp = orthogonal(phi_prime, g_prime, Side::Left);
  require_free(g_prime_perp, "G'-perp");
  auto s = envelope_partners(phi, g_perp, rad_basis);
  auto s_prime = envelope_partners(phi_prime, g_prime_perp, rad_images);

  // beta(s_i) = s'_i phi(r_i, s_i) phi'(r'_i, s'_i)^-1 keeps every pairing of H.
  std::vector<ModuleSection> s_images;
  for (std::size_t i = 0; i < s.size(); ++i) {
    AlgebraSection a = evaluate(phi, rad_basis[i], s[i]);
    AlgebraSection a_prime = evaluate(phi_prime, rad_images[i], s_prime[i]);
    s_images.push_back(scale(multiply(a, invert(a_prime)), s_prime[i]));
  }

  std::vector<ModuleSection> hg = rad_basis;
  hg.insert(hg.end(), s.begin(), s.end());
  hg.insert(hg.end(), g_basis.begin(), g_basis.end());
  std::vector<ModuleSection> hg_prime = rad_images;
  hg_prime.insert(hg_prime.end(), s_prime.begin(), s_prime.end());
  hg_prime.insert(hg_prime.end(), g_images.begin(), g_images.end());

  // The residual complements J, J' have equal rank and are isometric.
  Submodule j_sub = orthogonal(phi, span(m, hg), Side::Left);
  Submodule j_prime = orthogonal(phi_prime, span(mp, hg_prime), Side::Left);
  require_free(j_sub, "J");
  require_free(j_prime, "J'");
  const auto j_basis = global_basis(j_sub);
  const auto j_prime_basis = global_basis(j_prime);
  if (j_basis.size() != j_prime_basis.size()) throw Error(ErrorCode::Internal, "residual ranks differ");
  std::vector<ModuleSection> j_images;
  if (!j_basis.empty()) {
    Isometry residual = standard_isometry(induced_form(phi, j_basis), induced_form(phi_prime, j_prime_basis));
    for (std::size_t t = 0; t < j_basis.size(); ++t) {
      std::vector<Vector> vecs;
      for (std::size_t c = 0; c < m.global_components(); ++c) {
        Vector y = zero_vector(m.field, m.rank);
        for (std::size_t u = 0; u < j_prime_basis.size(); ++u) {
          y = add(y, scale(residual.matrices[c](u, t), j_prime_basis[u][c]));
        }
        vecs.push_back(std::move(y));
      }
      j_images.push_back(ModuleSection::global(mp, std::move(vecs)));
    }
  }

  std::vector<ModuleSection> source_cols = rad_basis;
  source_cols.insert(source_cols.end(), s.begin(), s.end());
  source_cols.insert(source_cols.end(), g_basis.begin(), g_basis.end());
  source_cols.insert(source_cols.end(), j_basis.begin(), j_basis.end());
  std::vector<ModuleSection> target_cols = rad_images;
  target_cols.insert(target_cols.end(), s_images.begin(), s_images.end());
  target_cols.insert(target_cols.end(), g_images.begin(), g_images.end());
  target_cols.insert(target_cols.end(), j_images.begin(), j_images.end());
  if (source_cols.size() != m.rank) throw Error(ErrorCode::Internal, "assembled basis has the wrong size");

  std::vector<Matrix> ms;
  for (std::size_t c = 0; c < m.global_components(); ++c) {
    std::vector<Vector> src, dst;
    for (const auto& t : source_cols) src.push_back(t[c]);
    for (const auto& t : target_cols) dst.push_back(t[c]);
    ms.push_back(Matrix::from_columns(m.field, m.rank, dst) * inverse(Matrix::from_columns(m.field, m.rank, src)));
  }
  Isometry out{phi, phi_prime, std::move(ms)};
  if (!out.verify()) throw Error(ErrorCode::Internal, "assembled map is not an isometry");
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!(out.apply(basis[i]) == sigma_images[i])) throw Error(ErrorCode::Internal, "extension disagrees with sigma");
  }
  return out;
}

}  // namespace symplex
