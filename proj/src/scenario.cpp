#include "symplex/scenario.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include "io.hpp"
#include "symplex/error.hpp"
#include "symplex/symplectic.hpp"

#ifndef SYMPLEX_VERSION
#define SYMPLEX_VERSION "0.0.0"
#endif

namespace symplex {

namespace {

using io::Json;

struct Task {
  std::string op;
  std::optional<Submodule> submodule;
  std::vector<ModuleSection> generators;
  std::optional<ModuleSection> section;
  Side side = Side::Left;
  PartialFamily partial;
  std::optional<BilinearForm> target;
  std::vector<ModuleSection> sigma;
  std::string suite;
  OracleOptions oracle;
  bool seed_given = false;
};

struct Scenario {
  SpacePtr space;
  Field field;
  std::string field_source;
  std::optional<BilinearForm> phi;
  std::vector<Task> tasks;
};

class Certificate {
 public:
  void check(const std::string& name, bool holds) {
    checks_.push_back(Json{{"check", name}, {"holds", holds}});
    verified_ = verified_ && holds;
  }
  bool verified() const { return verified_; }
  Json json() const { return Json{{"verified", verified_}, {"checks", checks_}}; }

 private:
  Json checks_ = Json::array();
  bool verified_ = true;
};

struct Outcome {
  Json payload;
  Certificate certificate;
};

std::uint64_t uint_from(const Json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    io::fail(where, "expected a non-negative integer");
  }
  return j.get<std::uint64_t>();
}

std::string string_from(const Json& j, const std::string& where) {
  if (!j.is_string()) io::fail(where, "expected a string");
  return j.get<std::string>();
}

Field field_from(const Json& j, const std::string& where) {
  try {
    return Field::parse(string_from(j, where));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError) throw;
    io::fail(where, e.what());
  }
}

SpacePtr space_from(const Json& j) {
  const Json& points = io::field_of(j, "points", "space");
  const Json& opens = io::field_of(j, "opens", "space");
  if (!points.is_array()) io::fail("space.points", "expected an array of point names");
  if (!opens.is_array()) io::fail("space.opens", "expected an array of opens");
  std::vector<std::string> names;
  for (const auto& p : points) names.push_back(string_from(p, "space.points"));
  std::vector<std::vector<std::string>> sets;
  for (std::size_t i = 0; i < opens.size(); ++i) {
    const std::string where = "space.opens[" + std::to_string(i) + "]";
    if (!opens[i].is_array()) io::fail(where, "expected an array of point names");
    std::vector<std::string> set;
    for (const auto& p : opens[i]) set.push_back(string_from(p, where));
    sets.push_back(std::move(set));
  }
  return share(FiniteSpace::validate(std::move(names), sets));
}

PartialFamily partial_from(const Json& j, const FreeModule& m, const std::string& where) {
  PartialFamily out;
  if (!j.is_object()) io::fail(where, "expected {\"r\": {...}, \"s\": {...}}");
  for (const char* kind : {"r", "s"}) {
    if (!j.contains(kind)) continue;
    const Json& members = j.at(kind);
    const std::string at = where + "." + kind;
    if (!members.is_object()) io::fail(at, "expected an object keyed by 1-based index");
    for (const auto& [key, value] : members.items()) {
      std::size_t index = 0;
      try {
        std::size_t used = 0;
        index = std::stoul(key, &used);
        if (used != key.size()) index = 0;
      } catch (const std::exception&) {
        index = 0;
      }
      if (index == 0) io::fail(at, "index '" + key + "' is not a positive integer");
      auto& target = kind[0] == 'r' ? out.r : out.s;
      target.emplace(index - 1, io::section_from(value, m, at + "." + key));
    }
  }
  return out;
}

Task task_from(const Json& j, const Scenario& sc, std::size_t index) {
  const std::string where = "tasks[" + std::to_string(index) + "]";
  Task t;
  t.op = string_from(io::field_of(j, "op", where), where + ".op");
  const std::string& op = t.op;
  const bool needs_form = op != "oracle";
  if (needs_form && !sc.phi) io::fail(where, "task '" + op + "' needs 'rank' and 'gram'");
  auto submodule = [&](bool required) {
    if (!j.contains("submodule")) {
      if (required) io::fail(where, "missing key 'submodule'");
      return;
    }
    t.generators = io::sections_from(j.at("submodule"), sc.phi->module(), where + ".submodule");
    for (std::size_t i = 0; i < t.generators.size(); ++i) {
      if (!t.generators[i].is_global()) {
        io::fail(where + ".submodule[" + std::to_string(i) + "]", "generators must be global sections");
      }
    }
    t.submodule = span(sc.phi->module(), t.generators);
  };
  if (op == "classify" || op == "normal_form" || op == "decomposition") {
  } else if (op == "radical") {
    submodule(false);
  } else if (op == "orthogonal") {
    submodule(true);
    if (j.contains("side")) {
      const std::string side = string_from(j.at("side"), where + ".side");
      if (side == "left") {
        t.side = Side::Left;
      } else if (side == "right") {
        t.side = Side::Right;
      } else {
        io::fail(where + ".side", "expected \"left\" or \"right\"");
      }
    }
  } else if (op == "project") {
    submodule(true);
    t.section = io::section_from(io::field_of(j, "section", where), sc.phi->module(), where + ".section");
  } else if (op == "symplectic_basis") {
    if (j.contains("partial")) t.partial = partial_from(j.at("partial"), sc.phi->module(), where + ".partial");
  } else if (op == "envelope") {
    submodule(true);
  } else if (op == "witt") {
    submodule(true);
    // Without a target the form is extended into itself.
    t.target = *sc.phi;
    if (j.contains("target")) {
      const Json& target = j.at("target");
      if (!target.is_object()) io::fail(where + ".target", "expected an object");
      const FreeModule& m = sc.phi->module();
      std::size_t rank = m.rank;
      if (target.contains("rank")) rank = uint_from(target.at("rank"), where + ".target.rank");
      FreeModule mp(m.space, m.field, rank);
      t.target = BilinearForm(mp, io::grams_from(io::field_of(target, "gram", where + ".target"), mp, where + ".target.gram"));
    }
    t.sigma = io::sections_from(io::field_of(j, "sigma", where), t.target->module(), where + ".sigma");
    if (t.sigma.size() != t.generators.size()) {
      io::fail(where + ".sigma", "expected one image per submodule generator (" + std::to_string(t.generators.size()) + ")");
    }
    for (std::size_t i = 0; i < t.sigma.size(); ++i) {
      if (!t.sigma[i].is_global()) io::fail(where + ".sigma[" + std::to_string(i) + "]", "images must be global sections");
    }
  } else if (op == "oracle") {
    t.suite = string_from(io::field_of(j, "suite", where), where + ".suite");
    if (j.contains("seed")) {
      t.oracle.seed = uint_from(j.at("seed"), where + ".seed");
      t.seed_given = true;
    }
    if (j.contains("max_rank")) t.oracle.max_rank = uint_from(j.at("max_rank"), where + ".max_rank");
    if (j.contains("cases")) t.oracle.cases = uint_from(j.at("cases"), where + ".cases");
    if (j.contains("field")) t.oracle.field = field_from(j.at("field"), where + ".field");
  } else {
    io::fail(where + ".op", "unknown operation '" + op + "'");
  }
  return t;
}

Scenario scenario_from(const Json& doc, const RunOptions& options) {
  if (!doc.is_object()) io::fail("scenario", "expected an object");
  Scenario sc;
  sc.space = space_from(io::field_of(doc, "space", "scenario"));
  Field field = options.default_field.value_or(Field::rationals());
  sc.field_source = options.default_field_source;
  if (doc.contains("field")) {
    field = field_from(doc.at("field"), "field");
    sc.field_source = "scenario";
  }
  sc.field = field;
  if (doc.contains("rank") || doc.contains("gram")) {
    const std::size_t rank = uint_from(io::field_of(doc, "rank", "scenario"), "rank");
    FreeModule m(sc.space, field, rank);
    sc.phi = BilinearForm(m, io::grams_from(io::field_of(doc, "gram", "scenario"), m, "gram"));
  }
  const Json& tasks = io::field_of(doc, "tasks", "scenario");
  if (!tasks.is_array()) io::fail("tasks", "expected an array");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    sc.tasks.push_back(task_from(tasks[i], sc, i));
  }
  return sc;
}

// Certificates: direct matrix arithmetic on the payload, never the solver path.

Matrix columns_of(const std::vector<ModuleSection>& ts, std::size_t c, const FreeModule& m) {
  std::vector<Vector> cols;
  for (const auto& t : ts) cols.push_back(t[c]);
  return Matrix::from_columns(m.field, m.rank, cols);
}

Scalar pair(const Matrix& g, const Vector& x, const Vector& y) { return dot(x, g * y); }

std::string index_name(char kind, std::size_t i) { return std::string(1, kind) + std::to_string(i + 1); }

Outcome do_classify(const BilinearForm& phi) {
  Outcome out;
  OrthoClass cls = classify_orthosymmetry(phi);
  Json comps = Json::array();
  for (std::size_t c = 0; c < cls.components.size(); ++c) {
    const auto& k = cls.components[c];
    std::string geometry = k.symmetric && k.alternating ? "orthogonal+symplectic"
                           : k.symmetric                ? "orthogonal"
                           : k.alternating              ? "symplectic"
                                                        : "none";
    comps.push_back(Json{{"symmetric", k.symmetric}, {"alternating", k.alternating}, {"geometry", geometry}});
    const Matrix& g = phi.gram(c);
    bool sym = true, alt = true;
    for (std::size_t i = 0; i < g.rows(); ++i) {
      alt = alt && g(i, i).is_zero();
      for (std::size_t j = 0; j < g.cols(); ++j) {
        sym = sym && g(i, j) == g(j, i);
        alt = alt && g(i, j) == -g(j, i);
      }
    }
    out.certificate.check("component " + std::to_string(c) + " flags", sym == k.symmetric && alt == k.alternating);
  }
  out.payload = Json{{"verdict", cls.orthosymmetric ? "Orthosymmetric" : "NotOrthosymmetric"}, {"components", comps}};
  bool expected = true;
  for (const auto& k : cls.components) expected = expected && (k.symmetric || k.alternating);
  out.certificate.check("verdict matches component flags", expected == cls.orthosymmetric);
  if (cls.witness) {
    const auto& w = *cls.witness;
    const auto& space = *phi.module().space;
    out.payload["witness"] = Json{{"open", space.names_of(space.set_of(w.open))},
                                  {"r", io::to_json(w.r)},
                                  {"s", io::to_json(w.s)},
                                  {"phi(r,s)", io::to_json(evaluate(phi, w.r, w.s))},
                                  {"phi(s,r)", io::to_json(evaluate(phi, w.s, w.r))}};
    const Matrix& g = phi.gram(w.component);
    bool rs_zero = true, sr_nowhere_zero = true;
    for (std::size_t c = 0; c < w.r.vectors().size(); ++c) {
      rs_zero = rs_zero && pair(g, w.r[c], w.s[c]).is_zero();
      sr_nowhere_zero = sr_nowhere_zero && !pair(g, w.s[c], w.r[c]).is_zero();
    }
    out.certificate.check("phi(r,s) = 0", rs_zero);
    out.certificate.check("phi(s,r) nowhere zero", sr_nowhere_zero);
  }
  return out;
}

/// Checks that `result` is exactly { t in F-or-E : B G t = 0 } style data:
/// rows annihilate `against` on the given side, and the dimension is maximal.
void certify_orthogonal(Certificate& cert, const BilinearForm& phi, const Submodule& f, const Submodule& result,
                        Side side, const std::optional<Submodule>& within) {
  const FreeModule& m = phi.module();
  for (std::size_t c = 0; c < m.global_components(); ++c) {
    const Matrix& b = f.basis(c);
    const Matrix& z = result.basis(c);
    const Matrix g = side == Side::Left ? phi.gram(c) : phi.gram(c).transpose();
    // Left: phi(s, t) = s^T G t = 0 for s in F.
    cert.check("component " + std::to_string(c) + " annihilates F", (b * g * z.transpose()).is_zero());
    std::size_t expected = 0;
    if (within) {
      const Matrix& w = within->basis(c);
      cert.check("component " + std::to_string(c) + " inside F", rank(w.stack(z)) == w.rows());
      expected = w.rows() - rank(b * g * w.transpose());
    } else {
      expected = m.rank - rank(b * g);
    }
    cert.check("component " + std::to_string(c) + " dimension " + std::to_string(expected),
               z.rows() == expected && rank(z) == z.rows());
  }
}

Outcome do_radical(const BilinearForm& phi, const Task& t) {
  Outcome out;
  Submodule f = t.submodule.value_or(Submodule::full(phi.module()));
  Submodule rad = radical(phi, f);
  out.payload = io::to_json(rad);
  certify_orthogonal(out.certificate, phi, f, rad, Side::Left, f);
  return out;
}

Outcome do_orthogonal(const BilinearForm& phi, const Task& t) {
  Outcome out;
  Submodule result = orthogonal(phi, *t.submodule, t.side);
  out.payload = io::to_json(result);
  out.payload["side"] = t.side == Side::Left ? "left" : "right";
  out.payload["free"] = is_free(result).has_value();
  certify_orthogonal(out.certificate, phi, *t.submodule, result, t.side, std::nullopt);
  return out;
}

Outcome do_project(const BilinearForm& phi, const Task& t) {
  Outcome out;
  const Submodule& f = *t.submodule;
  const ModuleSection& s = *t.section;
  ModuleSection p = project(phi, f, s);
  ModuleSection rest = subtract(s, p);
  out.payload = Json{{"projection", io::to_json(p)}, {"remainder", io::to_json(rest)}};
  auto to_global = phi.module().space->to_global_components(s.open());
  for (std::size_t c = 0; c < to_global.size(); ++c) {
    const Matrix& b = f.basis(to_global[c]);
    const Matrix& g = phi.gram(to_global[c]);
    const std::string tag = "component " + std::to_string(c);
    out.certificate.check(tag + " p(t) in F", rank(b.stack(Matrix::from_rows(phi.module().field, phi.module().rank, {p[c]}))) == b.rows());
    out.certificate.check(tag + " phi(t - p(t), F) = 0", (Matrix::from_rows(phi.module().field, phi.module().rank, {rest[c]}) * g * b.transpose()).is_zero());
    out.certificate.check(tag + " F non-isotropic", rank(b * g * b.transpose()) == b.rows());
  }
  return out;
}

Json pairs_json(const std::vector<ModuleSection>& r, const std::vector<ModuleSection>& s) {
  Json out = Json{{"r", Json::array()}, {"s", Json::array()}};
  for (const auto& x : r) out["r"].push_back(io::to_json(x));
  for (const auto& x : s) out["s"].push_back(io::to_json(x));
  return out;
}

void certify_symplectic(Certificate& cert, const BilinearForm& phi, const std::vector<ModuleSection>& r,
                        const std::vector<ModuleSection>& s) {
  const FreeModule& m = phi.module();
  for (std::size_t c = 0; c < m.global_components(); ++c) {
    Matrix rm = columns_of(r, c, m);
    Matrix sm = columns_of(s, c, m);
    const Matrix& g = phi.gram(c);
    const std::string tag = "component " + std::to_string(c);
    cert.check(tag + " phi(r_i, r_j) = 0", (rm.transpose() * g * rm).is_zero());
    cert.check(tag + " phi(s_i, s_j) = 0", (sm.transpose() * g * sm).is_zero());
    cert.check(tag + " phi(r_i, s_j) = delta_ij", rm.transpose() * g * sm == Matrix::identity(m.field, r.size()));
    cert.check(tag + " basis", 2 * r.size() == m.rank && rank(rm.transpose().stack(sm.transpose())) == m.rank);
  }
}

Outcome do_symplectic_basis(const BilinearForm& phi, const Task& t) {
  Outcome out;
  SymplecticBasis basis = gram_schmidt_extend(phi, t.partial);
  out.payload = pairs_json(basis.r, basis.s);
  certify_symplectic(out.certificate, phi, basis.r, basis.s);
  for (const auto& [i, x] : t.partial.r) out.certificate.check(index_name('r', i) + " kept", basis.r.at(i) == x);
  for (const auto& [j, x] : t.partial.s) out.certificate.check(index_name('s', j) + " kept", basis.s.at(j) == x);
  return out;
}

Outcome do_normal_form(const BilinearForm& phi) {
  Outcome out;
  auto p = normal_form(phi);
  Json ps = Json::array();
  const Matrix a = standard_symplectic_matrix(phi.module().field, phi.module().rank);
  for (std::size_t c = 0; c < p.size(); ++c) {
    ps.push_back(io::to_json(p[c]));
    out.certificate.check("component " + std::to_string(c) + " P^T G P = A", p[c].transpose() * phi.gram(c) * p[c] == a);
  }
  out.payload = Json{{"P", ps}};
  return out;
}

/// Pairwise orthogonal, non-isotropic planes; `span_all` also demands they fill E.
void certify_planes(Certificate& cert, const BilinearForm& phi, const std::vector<ModuleSection>& r,
                    const std::vector<ModuleSection>& s, bool span_all) {
  const FreeModule& m = phi.module();
  for (std::size_t c = 0; c < m.global_components(); ++c) {
    const Matrix& g = phi.gram(c);
    const std::string tag = "component " + std::to_string(c);
    bool orthogonal_planes = true, non_isotropic = true;
    for (std::size_t i = 0; i < r.size(); ++i) {
      Matrix hi = Matrix::from_rows(m.field, m.rank, {r[i][c], s[i][c]});
      non_isotropic = non_isotropic && rank(hi * g * hi.transpose()) == 2;
      for (std::size_t j = 0; j < r.size(); ++j) {
        if (i == j) continue;
        Matrix hj = Matrix::from_rows(m.field, m.rank, {r[j][c], s[j][c]});
        orthogonal_planes = orthogonal_planes && (hi * g * hj.transpose()).is_zero();
      }
    }
    cert.check(tag + " planes pairwise orthogonal", orthogonal_planes);
    cert.check(tag + " planes non-isotropic", non_isotropic);
    if (span_all) {
      std::vector<Vector> rows;
      for (std::size_t i = 0; i < r.size(); ++i) {
        rows.push_back(r[i][c]);
        rows.push_back(s[i][c]);
      }
      cert.check(tag + " planes span E", rank(Matrix::from_rows(m.field, m.rank, rows)) == m.rank);
    }
  }
}

Json planes_json(const BilinearForm& phi, const std::vector<HyperbolicPlane>& planes) {
  Json out = Json::array();
  for (const auto& h : planes) {
    out.push_back(Json{{"r", io::to_json(h.r)}, {"s", io::to_json(h.s)}, {"phi(r,s)", io::to_json(evaluate(phi, h.r, h.s))}});
  }
  return out;
}

Outcome do_decomposition(const BilinearForm& phi) {
  Outcome out;
  auto planes = hyperbolic_decomposition(phi);
  std::vector<ModuleSection> r, s;
  for (const auto& h : planes) {
    r.push_back(h.r);
    s.push_back(h.s);
  }
  out.payload = Json{{"planes", planes_json(phi, planes)}};
  certify_planes(out.certificate, phi, r, s, true);
  return out;
}

Outcome do_envelope(const BilinearForm& phi, const Task& t) {
  Outcome out;
  const Submodule& f = *t.submodule;
  auto planes = hyperbolic_envelope(phi, f);
  std::vector<ModuleSection> r, s;
  for (const auto& h : planes) {
    r.push_back(h.r);
    s.push_back(h.s);
  }
  out.payload = Json{{"planes", planes_json(phi, planes)}};
  certify_planes(out.certificate, phi, r, s, false);
  const FreeModule& m = phi.module();
  for (std::size_t c = 0; c < m.global_components(); ++c) {
    const Matrix& b = f.basis(c);
    std::vector<Vector> rows;
    for (const auto& x : r) rows.push_back(x[c]);
    Matrix rm = Matrix::from_rows(m.field, m.rank, rows);
    out.certificate.check("component " + std::to_string(c) + " r_i span F",
                          rm.rows() == b.rows() && rank(rm) == b.rows() && rank(b.stack(rm)) == b.rows());
  }
  return out;
}

/// Images of global_basis(F) from the images of F's generators; rejects a
/// sigma that is not well defined on the span.
std::vector<ModuleSection> sigma_on_basis(const Task& t, const FreeModule& m, const std::vector<ModuleSection>& basis) {
  const FreeModule& mp = t.target->module();
  std::vector<std::vector<Vector>> images(basis.size());
  for (std::size_t c = 0; c < m.global_components(); ++c) {
    Matrix gens = columns_of(t.generators, c, m);
    Matrix kernel = nullspace(gens);
    for (std::size_t k = 0; k < kernel.rows(); ++k) {
      Vector y = zero_vector(mp.field, mp.rank);
      for (std::size_t i = 0; i < t.sigma.size(); ++i) y = add(y, scale(kernel(k, i), t.sigma[i][c]));
      if (!is_zero(y)) {
        throw Error(ErrorCode::IsometryHypothesisViolated,
                    "sigma is not linear on F: a relation among the generators is not preserved on component " +
                        std::to_string(c),
                    "component=" + std::to_string(c));
      }
    }
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto x = solve(gens, basis[b][c]);
      if (!x) throw Error(ErrorCode::Internal, "basis section outside the generated submodule");
      Vector y = zero_vector(mp.field, mp.rank);
      for (std::size_t i = 0; i < t.sigma.size(); ++i) y = add(y, scale((*x)[i], t.sigma[i][c]));
      images[b].push_back(std::move(y));
    }
  }
  std::vector<ModuleSection> out;
  for (auto& v : images) out.push_back(ModuleSection::global(mp, std::move(v)));
  return out;
}

Outcome do_witt(const BilinearForm& phi, const Task& t) {
  Outcome out;
  const Submodule& f = *t.submodule;
  const BilinearForm& target = *t.target;
  // Rank and freeness problems are left to witt_extend's own gates.
  std::vector<ModuleSection> images;
  if (phi.module().rank == target.module().rank && is_free(f)) images = sigma_on_basis(t, phi.module(), global_basis(f));
  Isometry iso = witt_extend(phi, target, f, images);
  Json ms = Json::array();
  for (const auto& mc : iso.matrices) ms.push_back(io::to_json(mc));
  out.payload = Json{{"M", ms}};
  const FreeModule& m = phi.module();
  for (std::size_t c = 0; c < m.global_components(); ++c) {
    const Matrix& mc = iso.matrices[c];
    const std::string tag = "component " + std::to_string(c);
    out.certificate.check(tag + " M invertible", rank(mc) == m.rank);
    out.certificate.check(tag + " M^T G' M = G", mc.transpose() * target.gram(c) * mc == phi.gram(c));
    bool agrees = true;
    for (std::size_t i = 0; i < t.generators.size(); ++i) agrees = agrees && mc * t.generators[i][c] == t.sigma[i][c];
    out.certificate.check(tag + " M agrees with sigma", agrees);
  }
  return out;
}

Json oracle_json(const OracleResult& r) {
  Json out{{"suite", r.suite},
           {"field", r.field.name()},
           {"seed", r.seed},
           {"max_rank", r.max_rank},
           {"checked", r.checked},
           {"failed", r.failed},
           {"skipped", r.skipped},
           {"counterexample", r.counterexample ? Json(*r.counterexample) : Json(nullptr)}};
  if (!r.notes.empty()) out["notes"] = r.notes;
  return out;
}

Outcome do_oracle(const Task& t, std::uint64_t run_seed) {
  Outcome out;
  OracleOptions options = t.oracle;
  if (!t.seed_given) options.seed = run_seed;
  OracleResult r = run_oracle(t.suite, options);
  out.payload = oracle_json(r);
  out.certificate.check("no counterexample", r.failed == 0);
  return out;
}

Json error_json(const Error& e) {
  Json out{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
  if (!e.witness().empty()) out["witness"] = e.witness();
  return out;
}

Json header(const Scenario* sc, const RunOptions& options, std::uint64_t seed) {
  Json out{{"tool", "symplex"}, {"version", SYMPLEX_VERSION}, {"seed", seed}};
  if (sc) {
    const auto& space = *sc->space;
    Json opens = Json::array();
    for (auto set : space.opens()) opens.push_back(space.names_of(set));
    Json comps = Json::array();
    for (auto set : space.components(space.top())) comps.push_back(space.names_of(set));
    out["space"] = Json{{"points", space.points()}, {"opens", opens}, {"components", comps}};
    out["field"] = sc->field.name();
    out["field_source"] = sc->field_source;
    if (sc->phi) out["rank"] = sc->phi->module().rank;
  } else {
    out["field_source"] = options.default_field_source;
  }
  return out;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

RunResult run_scenario_text(std::string_view text, const RunOptions& options) {
  const std::uint64_t seed = options.seed.value_or(0);
  Scenario sc;
  try {
    Json doc = Json::parse(text.begin(), text.end());
    sc = scenario_from(doc, options);
  } catch (const Json::exception& e) {
    Json report = header(nullptr, options, seed);
    report["status"] = "parse_error";
    report["error"] = Json{{"code", "ParseError"}, {"message", e.what()}};
    report["tasks"] = Json::array();
    return {dump(report), 2};
  } catch (const Error& e) {
    Json report = header(nullptr, options, seed);
    report["status"] = "parse_error";
    report["error"] = Json{{"code", "ParseError"}, {"cause", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (!e.witness().empty()) report["error"]["witness"] = e.witness();
    report["tasks"] = Json::array();
    return {dump(report), 2};
  }

  Json report = header(&sc, options, seed);
  Json tasks = Json::array();
  bool all_ok = true;
  for (std::size_t i = 0; i < sc.tasks.size(); ++i) {
    const Task& t = sc.tasks[i];
    Json entry{{"index", i + 1}, {"op", t.op}};
    const auto start = std::chrono::steady_clock::now();
    try {
      Outcome out;
      if (t.op == "oracle") {
        out = do_oracle(t, seed);
      } else {
        const BilinearForm& phi = *sc.phi;
        if (t.op == "classify") out = do_classify(phi);
        else if (t.op == "radical") out = do_radical(phi, t);
        else if (t.op == "orthogonal") out = do_orthogonal(phi, t);
        else if (t.op == "project") out = do_project(phi, t);
        else if (t.op == "symplectic_basis") out = do_symplectic_basis(phi, t);
        else if (t.op == "normal_form") out = do_normal_form(phi);
        else if (t.op == "decomposition") out = do_decomposition(phi);
        else if (t.op == "envelope") out = do_envelope(phi, t);
        else out = do_witt(phi, t);
      }
      if (out.certificate.verified()) {
        entry["status"] = "ok";
      } else {
        entry["status"] = "error";
        entry["error"] = Json{{"code", "Internal"}, {"message", "certificate re-verification failed"}};
        all_ok = false;
      }
      entry["payload"] = out.payload;
      entry["certificate"] = out.certificate.json();
    } catch (const Error& e) {
      entry["status"] = "error";
      entry["error"] = error_json(e);
      all_ok = false;
    }
    if (options.timing) {
      entry["timing_ms"] =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    tasks.push_back(std::move(entry));
  }
  report["status"] = all_ok ? "ok" : "failed";
  report["tasks"] = std::move(tasks);
  return {dump(report), all_ok ? 0 : 1};
}

RunResult run_scenario_file(const std::string& path, const RunOptions& options) {
  std::ifstream in(path);
  if (!in) {
    Json report = header(nullptr, options, options.seed.value_or(0));
    report["status"] = "parse_error";
    report["error"] = Json{{"code", "ParseError"}, {"message", "cannot read " + path}};
    report["tasks"] = Json::array();
    return {dump(report), 2};
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return run_scenario_text(buffer.str(), options);
}

RunResult oracle_report(std::string_view suite, const OracleOptions& options) {
  Json report{{"tool", "symplex"}, {"version", SYMPLEX_VERSION}};
  try {
    OracleResult r = run_oracle(suite, options);
    report["status"] = r.failed == 0 ? "ok" : "failed";
    report["oracle"] = oracle_json(r);
    return {dump(report), r.failed == 0 ? 0 : 1};
  } catch (const Error& e) {
    report["status"] = "error";
    report["error"] = error_json(e);
    return {dump(report), e.code() == ErrorCode::UnknownSuite || e.code() == ErrorCode::InvalidField ? 2 : 1};
  }
}

}  // namespace symplex
