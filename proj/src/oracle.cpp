#include "symplex/oracle.hpp"

#include <functional>

#include "symplex/error.hpp"
#include "symplex/random.hpp"

namespace symplex {

namespace {

using Check = std::optional<std::string>;

class Tally {
 public:
  explicit Tally(OracleResult& result) : result_(result) {}

  /// Runs one case. Library errors count as failures, except that Witt
  /// instances stopped by the freeness gate are set aside when `gate_skips`.
  void record(const std::function<Check()>& body, bool gate_skips = false) {
    Check failure;
    try {
      failure = body();
    } catch (const Error& e) {
      if (gate_skips && e.code() == ErrorCode::FreenessViolated) {
        ++result_.skipped;
        return;
      }
      failure = std::string(to_string(e.code())) + ": " + e.what();
    }
    ++result_.checked;
    if (failure) {
      ++result_.failed;
      if (!result_.counterexample) result_.counterexample = *failure;
    }
  }

 private:
  OracleResult& result_;
};

struct NamedSpace {
  const char* name;
  SpacePtr space;
};

std::vector<NamedSpace> fixture_spaces() {
  return {{"point", fixtures::point()},
          {"sierpinski", fixtures::sierpinski()},
          {"discrete_two_point", fixtures::discrete_two_point()}};
}

std::string grams_text(const BilinearForm& phi) {
  std::string s;
  for (const auto& g : phi.gram()) s += (s.empty() ? "" : " | ") + g.to_string();
  return s;
}

std::string values_text(const std::vector<Scalar>& values) {
  std::string s = "(";
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? "," : "") + values[i].to_string();
  return s + ")";
}

OpenRef random_nonempty_open(Rng& rng, const FiniteSpace& space) {
  for (;;) {
    OpenRef u{static_cast<std::size_t>(rng.below(space.open_count()))};
    if (space.set_of(u) != 0) return u;
  }
}

ModuleSection random_section(Rng& rng, const FreeModule& m, OpenRef u) {
  std::vector<Vector> vecs;
  for (std::size_t c = 0; c < m.space->component_count(u); ++c) {
    vecs.push_back(random_matrix(rng, m.field, 1, m.rank).row(0));
  }
  return ModuleSection(m, u, std::move(vecs));
}

// scholium_invertibility ---------------------------------------------------

Check check_scholium(const AlgebraSection& s) {
  const bool fast = is_nowhere_zero(s);
  const bool slow = is_nowhere_zero_by_enumeration(s);
  bool direct = true;
  for (const auto& v : s.values()) direct = direct && !v.is_zero();
  bool inverts = true;
  try {
    AlgebraSection inv = invert(s);
    if (!(multiply(s, inv) == AlgebraSection::unit(s.space(), s.open(), s.field()))) {
      return "s * invert(s) != 1 for s = " + values_text(s.values());
    }
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotNowhereZero) throw;
    inverts = false;
  }
  if (fast == slow && slow == direct && direct == inverts) return std::nullopt;
  return "s = " + values_text(s.values()) + " over " + s.space()->describe(s.space()->set_of(s.open())) +
         ": componentwise=" + std::to_string(fast) + " enumerated=" + std::to_string(slow) +
         " values=" + std::to_string(direct) + " invertible=" + std::to_string(inverts);
}

void scholium(OracleResult& out, Rng& rng, std::size_t cases) {
  Tally tally(out);
  std::vector<NamedSpace> spaces = fixture_spaces();
  spaces.push_back({"three_point", fixtures::three_point()});
  const Field& field = out.field;
  if (!field.is_rational()) {
    const std::uint64_t p = field.characteristic();
    for (const auto& [name, space] : spaces) {
      for (std::size_t i = 0; i < space->open_count(); ++i) {
        OpenRef u{i};
        if (space->set_of(u) == 0) continue;
        const std::size_t k = space->component_count(u);
        std::uint64_t total = 1;
        for (std::size_t j = 0; j < k; ++j) total *= p;
        if (total > 1000000) {
          out.notes.push_back(std::string(name) + ": open " + space->describe(space->set_of(u)) + " sampled");
          for (std::size_t t = 0; t < cases; ++t) {
            std::vector<Scalar> vals;
            for (std::size_t j = 0; j < k; ++j) vals.push_back(random_scalar(rng, field));
            tally.record([&] { return check_scholium(AlgebraSection(space, u, field, vals)); });
          }
          continue;
        }
        for (std::uint64_t code = 0; code < total; ++code) {
          std::vector<Scalar> vals;
          for (std::uint64_t c = code, j = 0; j < k; ++j, c /= p) vals.emplace_back(field, static_cast<long>(c % p));
          tally.record([&] { return check_scholium(AlgebraSection(space, u, field, vals)); });
        }
      }
    }
    return;
  }
  for (std::size_t t = 0; t < cases; ++t) {
    const SpacePtr& space = spaces[rng.below(spaces.size())].space;
    OpenRef u = random_nonempty_open(rng, *space);
    std::vector<Scalar> vals;
    for (std::size_t j = 0; j < space->component_count(u); ++j) vals.push_back(random_scalar(rng, field));
    tally.record([&] { return check_scholium(AlgebraSection(space, u, field, vals)); });
  }
}

// orthosymmetry_dichotomy ----------------------------------------------------

/// Pairing tables t[x * N + y] = x^T G y mod p over all N = p^n vectors.
std::vector<std::uint32_t> pairing_table(const std::vector<std::uint32_t>& g, std::size_t n, std::uint32_t p) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= p;
  std::vector<std::vector<std::uint32_t>> digits(count, std::vector<std::uint32_t>(n));
  for (std::size_t v = 0; v < count; ++v)
    for (std::size_t i = 0, c = v; i < n; ++i, c /= p) digits[v][i] = static_cast<std::uint32_t>(c % p);
  std::vector<std::uint32_t> table(count * count);
  for (std::size_t x = 0; x < count; ++x) {
    for (std::size_t y = 0; y < count; ++y) {
      std::uint64_t acc = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) acc += std::uint64_t{digits[x][i]} * g[i * n + j] * digits[y][j];
      table[x * count + y] = static_cast<std::uint32_t>(acc % p);
    }
  }
  return table;
}

/// The definition itself: some sections r, s over some non-empty open with
/// phi(r, s) = 0 and phi(s, r) != 0.
bool brute_force_violates(const FiniteSpace& space, const std::vector<std::vector<std::uint32_t>>& tables,
                          std::size_t count) {
  for (std::size_t i = 0; i < space.open_count(); ++i) {
    OpenRef u{i};
    if (space.set_of(u) == 0) continue;
    auto comps = space.to_global_components(u);
    std::size_t total = 1;
    for (std::size_t j = 0; j < comps.size(); ++j) total *= count;
    for (std::size_t r = 0; r < total; ++r) {
      for (std::size_t s = 0; s < total; ++s) {
        bool rs_zero = true;
        bool sr_nonzero = false;
        for (std::size_t j = 0, rc = r, sc = s; j < comps.size(); ++j, rc /= count, sc /= count) {
          const auto& t = tables[comps[j]];
          rs_zero = rs_zero && t[(rc % count) * count + sc % count] == 0;
          sr_nonzero = sr_nonzero || t[(sc % count) * count + rc % count] != 0;
        }
        if (rs_zero && sr_nonzero) return true;
      }
    }
  }
  return false;
}

std::vector<std::uint32_t> decode_matrix(std::uint64_t code, std::size_t n, std::uint32_t p) {
  std::vector<std::uint32_t> g(n * n);
  for (auto& e : g) {
    e = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return g;
}

Check check_dichotomy(const FreeModule& m, const std::vector<std::vector<std::uint32_t>>& ints) {
  const std::size_t n = m.rank;
  const std::uint32_t p = m.field.characteristic();
  std::vector<Matrix> grams;
  std::vector<std::vector<std::uint32_t>> tables;
  for (const auto& g : ints) {
    Matrix gm(m.field, n, n);
    for (std::size_t i = 0; i < n * n; ++i) gm(i / n, i % n) = Scalar(m.field, static_cast<long>(g[i]));
    grams.push_back(std::move(gm));
    tables.push_back(pairing_table(g, n, p));
  }
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= p;
  BilinearForm phi(m, std::move(grams));
  const bool brute = !brute_force_violates(*m.space, tables, count);
  OrthoClass cls = classify_orthosymmetry(phi);
  if (cls.orthosymmetric != brute) {
    return "classifier says " + std::string(cls.orthosymmetric ? "orthosymmetric" : "not orthosymmetric") +
           ", enumeration disagrees, G = " + grams_text(phi);
  }
  if (!cls.orthosymmetric) {
    const auto& w = *cls.witness;
    AlgebraSection rs = evaluate(phi, w.r, w.s);
    AlgebraSection sr = evaluate(phi, w.s, w.r);
    if (!rs.is_zero() || !is_nowhere_zero(sr)) return "witness does not re-evaluate, G = " + grams_text(phi);
  }
  return std::nullopt;
}

void dichotomy(OracleResult& out, Rng& rng) {
  if (out.field.is_rational()) {
    throw Error(ErrorCode::InvalidField, "orthosymmetry_dichotomy enumerates a prime field, got " + out.field.name());
  }
  Tally tally(out);
  const std::uint32_t p = out.field.characteristic();
  constexpr double kBudget = 2e8;
  for (const auto& [name, space] : fixture_spaces()) {
    const std::size_t comps = space->component_count(space->top());
    for (std::size_t n = 1; n <= out.max_rank; ++n) {
      double matrices = 1, vectors = 1;
      for (std::size_t i = 0; i < n * n; ++i) matrices *= p;
      for (std::size_t i = 0; i < n; ++i) vectors *= p;
      double all_tuples = 1;
      for (std::size_t c = 0; c < comps; ++c) all_tuples *= matrices;
      const bool full_product = all_tuples <= 20000;
      const double forms = full_product ? all_tuples : matrices * comps;
      double work = 0;
      for (std::size_t i = 0; i < space->open_count(); ++i) {
        double w = 1;
        for (std::size_t c = 0; c < space->component_count(OpenRef{i}); ++c) w *= vectors * vectors;
        if (space->set_of(OpenRef{i}) != 0) work += w;
      }
      if (forms * work > kBudget) {
        out.skipped += static_cast<std::size_t>(forms);
        out.notes.push_back(std::string(name) + " rank " + std::to_string(n) + " exceeds the enumeration budget");
        continue;
      }
      FreeModule m(space, out.field, n);
      const auto mcount = static_cast<std::uint64_t>(matrices);
      if (full_product) {
        for (std::uint64_t code = 0; code < static_cast<std::uint64_t>(all_tuples); ++code) {
          std::vector<std::vector<std::uint32_t>> ints;
          for (std::uint64_t c = code, j = 0; j < comps; ++j, c /= mcount) ints.push_back(decode_matrix(c % mcount, n, p));
          tally.record([&] { return check_dichotomy(m, ints); });
        }
      } else {
        // Sweep one component through every matrix with the others held at
        // seeded random matrices.
        for (std::size_t c = 0; c < comps; ++c) {
          std::vector<std::vector<std::uint32_t>> ints;
          for (std::size_t j = 0; j < comps; ++j) ints.push_back(decode_matrix(rng.below(mcount), n, p));
          for (std::uint64_t code = 0; code < mcount; ++code) {
            ints[c] = decode_matrix(code, n, p);
            tally.record([&] { return check_dichotomy(m, ints); });
          }
        }
      }
    }
  }
}

// orthogonal_calculus / reflexivity --------------------------------------------

struct FormCase {
  FreeModule module;
  BilinearForm phi;
};

FormCase random_form_case(Rng& rng, const NamedSpace& space, const Field& field, std::size_t max_rank) {
  const auto n = static_cast<std::size_t>(rng.between(1, static_cast<long>(max_rank)));
  FreeModule m(space.space, field, n);
  return FormCase{m, random_orthosymmetric_form(rng, m)};
}

Submodule random_free(Rng& rng, const FreeModule& m) {
  return random_free_submodule(rng, m, static_cast<std::size_t>(rng.between(0, static_cast<long>(m.rank))));
}

void calculus(OracleResult& out, Rng& rng, std::size_t cases) {
  Tally tally(out);
  auto spaces = fixture_spaces();
  for (std::size_t t = 0; t < cases; ++t) {
    FormCase fc = random_form_case(rng, spaces[t % spaces.size()], out.field, out.max_rank);
    Submodule f = random_free(rng, fc.module);
    Submodule g = random_free(rng, fc.module);
    tally.record([&]() -> Check {
      const auto& phi = fc.phi;
      for (Side side : {Side::Left, Side::Right}) {
        const char* tag = side == Side::Left ? "perp" : "top";
        Submodule fp = orthogonal(phi, f, side);
        Submodule gp = orthogonal(phi, g, side);
        if (!(orthogonal(phi, sum(f, g), side) == intersect(fp, gp))) {
          return std::string("(F+G)") + tag + " != F" + tag + " cap G" + tag + ", G = " + grams_text(phi);
        }
        if (!(orthogonal(phi, intersect(f, g), side) == sum(fp, gp))) {
          return std::string("(F cap G)") + tag + " != F" + tag + " + G" + tag + ", G = " + grams_text(phi);
        }
        if (!orthogonal(phi, intersect(f, g), side).contains(fp)) {
          return std::string("inclusion not reversed by ") + tag + ", G = " + grams_text(phi);
        }
      }
      if (!(orthogonal(phi, f, Side::Left) == orthogonal(phi, f, Side::Right))) {
        return "perp != top for an orthosymmetric form, G = " + grams_text(phi);
      }
      return std::nullopt;
    });
  }
}

void reflexivity(OracleResult& out, Rng& rng, std::size_t cases) {
  Tally tally(out);
  auto spaces = fixture_spaces();
  for (std::size_t t = 0; t < cases; ++t) {
    FormCase fc = random_form_case(rng, spaces[t % spaces.size()], out.field, out.max_rank);
    Submodule f = random_free(rng, fc.module);
    tally.record([&]() -> Check {
      const auto& phi = fc.phi;
      if (!(orthogonal(phi, orthogonal(phi, f, Side::Left), Side::Left) == f)) {
        return "F perp perp != F, G = " + grams_text(phi);
      }
      if (!(orthogonal(phi, orthogonal(phi, f, Side::Right), Side::Right) == f)) {
        return "F top top != F, G = " + grams_text(phi);
      }
      if (!(orthogonal(phi, orthogonal(phi, f, Side::Right), Side::Left) == f)) {
        return "F top perp != F, G = " + grams_text(phi);
      }
      Submodule full = Submodule::full(phi.module());
      if (!(orthogonal(phi, full, Side::Left) == Submodule::zero(phi.module()))) {
        return "E perp != 0 for a non-degenerate form, G = " + grams_text(phi);
      }
      return std::nullopt;
    });
  }
}

// splitting ----------------------------------------------------------------

void splitting(OracleResult& out, Rng& rng, std::size_t cases) {
  Tally tally(out);
  auto spaces = fixture_spaces();
  for (std::size_t t = 0; t < cases; ++t) {
    FormCase fc = random_form_case(rng, spaces[t % spaces.size()], out.field, out.max_rank);
    const FreeModule& m = fc.module;
    std::optional<Submodule> f;
    for (int attempt = 0; attempt < 100 && !f; ++attempt) {
      auto k = static_cast<std::size_t>(rng.between(1, static_cast<long>(m.rank)));
      Submodule candidate = random_free_submodule(rng, m, k);
      if (is_non_isotropic(fc.phi, candidate)) f = candidate;
    }
    if (!f) f = Submodule::full(m);
    std::vector<ModuleSection> samples;
    std::vector<AlgebraSection> scalars;
    for (int i = 0; i < 10; ++i) {
      OpenRef u = random_nonempty_open(rng, *m.space);
      samples.push_back(random_section(rng, m, u));
      samples.push_back(random_section(rng, m, u));
      std::vector<Scalar> vals;
      for (std::size_t c = 0; c < m.space->component_count(u); ++c) vals.push_back(random_scalar(rng, m.field));
      scalars.emplace_back(m.space, u, m.field, std::move(vals));
    }
    tally.record([&]() -> Check {
      const auto& phi = fc.phi;
      OrthogonalSplit split = orthogonal_split(phi, *f);
      if (!split.dimensions_add_up || !split.intersection_zero) return "split certificate fails, G = " + grams_text(phi);
      for (std::size_t c = 0; c < m.global_components(); ++c) {
        const Matrix& b = f->basis(c);
        const Matrix& z = split.complement.basis(c);
        if (b.rows() + z.rows() != m.rank || rank(b.stack(z)) != m.rank) {
          return "F and its complement do not span on component " + std::to_string(c);
        }
        if (!(z * phi.gram(c) * b.transpose()).is_zero()) return "complement is not orthogonal to F";
      }
      const auto basis = global_basis(*f);
      for (std::size_t i = 0; i < scalars.size(); ++i) {
        const ModuleSection& s = samples[2 * i];
        const ModuleSection& u = samples[2 * i + 1];
        ModuleSection p = project(phi, *f, s);
        if (!membership(*f, p)) return "p(t) is not in F";
        if (!(project(phi, *f, p) == p)) return "p(p(t)) != p(t), G = " + grams_text(phi);
        ModuleSection rest = subtract(s, p);
        for (const auto& b : basis) {
          if (!evaluate(phi, rest, restrict(b, s.open())).is_zero()) return "phi(t - p(t), F) != 0, G = " + grams_text(phi);
        }
        ModuleSection lhs = project(phi, *f, add(scale(scalars[i], s), u));
        ModuleSection rhs = add(scale(scalars[i], p), project(phi, *f, u));
        if (!(lhs == rhs)) return "p is not A-linear, G = " + grams_text(phi);
      }
      return std::nullopt;
    });
  }
}

// gram_schmidt -------------------------------------------------------------

struct Config {
  std::vector<std::size_t> r;
  std::vector<std::size_t> s;
};

const std::vector<Config>& partial_configs() {
  static const std::vector<Config> configs = {
      {{}, {}},     {{0}, {}},     {{}, {0}},     {{0}, {0}},     {{0}, {1}},         {{1}, {0}},
      {{0, 1}, {}}, {{}, {0, 1}},  {{0, 1}, {0}}, {{1}, {0, 1}},  {{0, 1}, {0, 1}},   {{0, 1}, {1}},
  };
  return configs;
}

Check check_symplectic_relations(const BilinearForm& phi, const SymplecticBasis& basis) {
  const FreeModule& m = phi.module();
  const std::size_t half = m.rank / 2;
  if (basis.r.size() != half || basis.s.size() != half) return std::string("basis has the wrong size");
  for (std::size_t c = 0; c < m.global_components(); ++c) {
    std::vector<Vector> rc, sc;
    for (std::size_t i = 0; i < half; ++i) {
      rc.push_back(basis.r[i][c]);
      sc.push_back(basis.s[i][c]);
    }
    Matrix r = Matrix::from_columns(m.field, m.rank, rc);
    Matrix s = Matrix::from_columns(m.field, m.rank, sc);
    const Matrix& g = phi.gram(c);
    if (!(r.transpose() * g * r).is_zero()) return "phi(r_i, r_j) != 0 on component " + std::to_string(c);
    if (!(s.transpose() * g * s).is_zero()) return "phi(s_i, s_j) != 0 on component " + std::to_string(c);
    if (!(r.transpose() * g * s == Matrix::identity(m.field, half))) {
      return "phi(r_i, s_j) != delta_ij on component " + std::to_string(c);
    }
    if (rank(r.transpose().stack(s.transpose())) != m.rank) return "not a basis on component " + std::to_string(c);
  }
  return std::nullopt;
}

std::size_t random_even_rank(Rng& rng, std::size_t max_rank) {
  return 2 * static_cast<std::size_t>(rng.between(1, static_cast<long>(std::max<std::size_t>(max_rank / 2, 1))));
}

void gram_schmidt(OracleResult& out, Rng& rng, std::size_t cases) {
  Tally tally(out);
  auto spaces = fixture_spaces();
  const auto& configs = partial_configs();
  for (std::size_t t = 0; t < cases; ++t) {
    const std::size_t n = random_even_rank(rng, out.max_rank);
    FreeModule m(spaces[t % spaces.size()].space, out.field, n);
    BilinearForm phi = random_symplectic_form(rng, m);
    std::size_t pick = t % configs.size();
    auto fits = [&](const Config& cfg) {
      for (auto i : cfg.r)
        if (i >= n / 2) return false;
      for (auto j : cfg.s)
        if (j >= n / 2) return false;
      return true;
    };
    while (!fits(configs[pick])) pick = (pick + 1) % configs.size();
    const Config& cfg = configs[pick];
    SymplecticBasis source = random_symplectic_basis(rng, phi);
    PartialFamily partial;
    for (auto i : cfg.r) partial.r.emplace(i, source.r[i]);
    for (auto j : cfg.s) partial.s.emplace(j, source.s[j]);
    tally.record([&]() -> Check {
      SymplecticBasis basis = gram_schmidt_extend(phi, partial);
      if (auto bad = check_symplectic_relations(phi, basis)) return *bad + ", G = " + grams_text(phi);
      for (const auto& [i, r] : partial.r)
        if (!(basis.r[i] == r)) return "r_" + std::to_string(i + 1) + " was not kept";
      for (const auto& [j, s] : partial.s)
        if (!(basis.s[j] == s)) return "s_" + std::to_string(j + 1) + " was not kept";
      auto p = normal_form(phi);
      const Matrix a = standard_symplectic_matrix(m.field, n);
      for (std::size_t c = 0; c < p.size(); ++c) {
        if (!(p[c].transpose() * phi.gram(c) * p[c] == a)) return "P^T G P != A on component " + std::to_string(c);
      }
      return std::nullopt;
    });
  }
}

// witt ---------------------------------------------------------------------

Check check_isometry_matrices(const BilinearForm& phi, const BilinearForm& phi_prime, const std::vector<Matrix>& ms) {
  for (std::size_t c = 0; c < ms.size(); ++c) {
    if (!(ms[c].transpose() * phi_prime.gram(c) * ms[c] == phi.gram(c))) {
      return "M^T G' M != G on component " + std::to_string(c);
    }
  }
  return std::nullopt;
}

void witt(OracleResult& out, Rng& rng, std::size_t cases) {
  Tally tally(out);
  auto spaces = fixture_spaces();
  for (std::size_t t = 0; t < cases; ++t) {
    const std::size_t n = random_even_rank(rng, out.max_rank);
    const std::size_t half = n / 2;
    FreeModule m(spaces[t % spaces.size()].space, out.field, n);
    BilinearForm phi = random_symplectic_form(rng, m);
    BilinearForm phi_prime = random_symplectic_form(rng, m);
    SymplecticBasis basis = random_symplectic_basis(rng, phi);
    std::optional<Submodule> f;
    switch (t % 3) {
      case 0:
        f = random_isotropic_submodule(rng, phi, static_cast<std::size_t>(rng.between(1, static_cast<long>(half))));
        break;
      case 1: {
        auto j = static_cast<std::size_t>(rng.between(1, static_cast<long>(half)));
        std::vector<ModuleSection> gens;
        for (std::size_t i = 0; i < j; ++i) {
          gens.push_back(basis.r[i]);
          gens.push_back(basis.s[i]);
        }
        f = span(m, gens);
        break;
      }
      default: {
        auto j = static_cast<std::size_t>(rng.between(0, static_cast<long>(half - 1)));
        auto a = static_cast<std::size_t>(rng.between(1, static_cast<long>(half - j)));
        std::vector<ModuleSection> gens;
        for (std::size_t i = 0; i < j; ++i) {
          gens.push_back(basis.r[i]);
          gens.push_back(basis.s[i]);
        }
        for (std::size_t i = j; i < j + a; ++i) gens.push_back(basis.r[i]);
        f = span(m, gens);
        break;
      }
    }
    Isometry sigma = random_isometry(rng, phi, phi_prime);
    const auto f_basis = global_basis(*f);
    std::vector<ModuleSection> images;
    for (const auto& b : f_basis) images.push_back(sigma.apply(b));
    tally.record(
        [&]() -> Check {
          Isometry ext = witt_extend(phi, phi_prime, *f, images);
          if (auto bad = check_isometry_matrices(phi, phi_prime, ext.matrices)) return *bad + ", G = " + grams_text(phi);
          for (std::size_t i = 0; i < f_basis.size(); ++i) {
            for (std::size_t c = 0; c < m.global_components(); ++c) {
              if (!(ext.matrices[c] * f_basis[i][c] == images[i][c])) {
                return "M disagrees with sigma on basis section " + std::to_string(i + 1);
              }
            }
          }
          return std::nullopt;
        },
        true);
  }
}

struct Suite {
  const char* name;
  Field field;
  std::size_t max_rank;
  std::size_t cases;
};

const std::vector<Suite>& suites() {
  static const std::vector<Suite> list = {
      {"scholium_invertibility", Field::prime(3), 0, 1000},
      {"orthosymmetry_dichotomy", Field::prime(3), 2, 0},
      {"orthogonal_calculus", Field::rationals(), 6, 500},
      {"reflexivity", Field::rationals(), 6, 500},
      {"splitting", Field::rationals(), 6, 200},
      {"gram_schmidt", Field::rationals(), 8, 200},
      {"witt", Field::rationals(), 8, 100},
  };
  return list;
}

}  // namespace

const std::vector<std::string>& oracle_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& s : suites()) out.emplace_back(s.name);
    return out;
  }();
  return names;
}

OracleResult run_oracle(std::string_view name, const OracleOptions& options) {
  const Suite* suite = nullptr;
  for (const auto& s : suites()) {
    if (name == s.name) suite = &s;
  }
  if (!suite) throw Error(ErrorCode::UnknownSuite, "unknown oracle suite '" + std::string(name) + "'", std::string(name));
  OracleResult out;
  out.suite = suite->name;
  out.field = options.field.value_or(suite->field);
  out.seed = options.seed;
  out.max_rank = options.max_rank ? options.max_rank : suite->max_rank;
  const std::size_t cases = options.cases ? options.cases : suite->cases;
  Rng rng(options.seed);
  const std::string_view n = suite->name;
  if (n == "scholium_invertibility") {
    out.max_rank = 0;
    scholium(out, rng, cases);
  } else if (n == "orthosymmetry_dichotomy") {
    dichotomy(out, rng);
  } else if (n == "orthogonal_calculus") {
    calculus(out, rng, cases);
  } else if (n == "reflexivity") {
    reflexivity(out, rng, cases);
  } else if (n == "splitting") {
    splitting(out, rng, cases);
  } else if (n == "gram_schmidt") {
    gram_schmidt(out, rng, cases);
  } else {
    witt(out, rng, cases);
  }
  return out;
}

}  // namespace symplex
