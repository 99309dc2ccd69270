#include <algorithm>
#include <set>

#include "support.hpp"

using namespace support;

namespace {

// ---- scalars

TEST(Scalar, RationalCanonicalText) {
  EXPECT_EQ(Scalar::parse(Q(), "6/4").to_string(), "3/2");
  EXPECT_EQ(Scalar::parse(Q(), "-10/5").to_string(), "-2");
  EXPECT_EQ(Scalar::parse(Q(), "0/7").to_string(), "0");
  EXPECT_EQ(Scalar::parse(Q(), "3/-6").to_string(), "-1/2");
  EXPECT_SX_ERROR(Scalar::parse(Q(), "1/0"), ErrorCode::ParseError);
  EXPECT_SX_ERROR(Scalar::parse(Q(), "abc"), ErrorCode::ParseError);
}

TEST(Scalar, PrimeFieldArithmetic) {
  const Field f5 = Field::prime(5);
  EXPECT_EQ(Scalar(f5, 2L).inverse(), Scalar(f5, 3L));
  EXPECT_EQ(Scalar(f5, -1L).to_string(), "4 mod 5");
  EXPECT_EQ(Scalar::parse(f5, "7 mod 5"), Scalar(f5, 2L));
  EXPECT_EQ(Scalar::parse(f5, "1/2"), Scalar(f5, 3L));
  EXPECT_SX_ERROR(Scalar(f5, 0L).inverse(), ErrorCode::Singular);
  EXPECT_SX_ERROR(Scalar(f5, 1L) + Scalar(Q(), 1L), ErrorCode::FieldMismatch);
}

TEST(Scalar, PrimeFieldMatchesModularIntegers) {
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    const Field f = Field::prime(p);
    for (long a = 0; a < static_cast<long>(p); ++a) {
      for (long b = 0; b < static_cast<long>(p); ++b) {
        EXPECT_EQ((Scalar(f, a) * Scalar(f, b)).value(), mpq_class((a * b) % p));
        EXPECT_EQ((Scalar(f, a) + Scalar(f, b)).value(), mpq_class((a + b) % p));
        if (b != 0) EXPECT_EQ((Scalar(f, a) / Scalar(f, b)) * Scalar(f, b), Scalar(f, a));
      }
    }
  }
}

TEST(Field, ParseAndValidate) {
  EXPECT_TRUE(Field::parse("rationals").is_rational());
  EXPECT_TRUE(Field::parse("Q").is_rational());
  EXPECT_EQ(Field::parse("gf:7").characteristic(), 7u);
  EXPECT_SX_ERROR(Field::prime(2), ErrorCode::InvalidField);
  EXPECT_SX_ERROR(Field::prime(9), ErrorCode::InvalidField);
  EXPECT_SX_ERROR(Field::parse("gf:x"), ErrorCode::InvalidField);
  EXPECT_SX_ERROR(Field::parse("reals"), ErrorCode::InvalidField);
}

// ---- matrices, against brute force over GF(3)

std::vector<Vector> all_vectors(const Field& f, std::size_t n) {
  const long p = f.characteristic();
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  std::vector<Vector> out;
  for (std::size_t code = 0; code < total; ++code) {
    Vector v;
    std::size_t c = code;
    for (std::size_t i = 0; i < n; ++i, c /= p) v.emplace_back(f, static_cast<long>(c % p));
    out.push_back(v);
  }
  return out;
}

std::string key(const Vector& v) {
  std::string s;
  for (const auto& x : v) s += x.to_string() + ",";
  return s;
}

TEST(Matrix, RankAndNullspaceAgreeWithEnumeration) {
  const Field f = Field::prime(3);
  auto vs2 = all_vectors(f, 2);
  auto vs3 = all_vectors(f, 3);
  // every 2x3 matrix over GF(3)
  for (const auto& a : vs3) {
    for (const auto& b : vs3) {
      Matrix m = Matrix::from_rows(f, 3, {a, b});
      std::set<std::string> span;
      for (const auto& c : vs2) span.insert(key(add(scale(c[0], a), scale(c[1], b))));
      std::size_t r = rank(m);
      std::size_t size = 1;
      for (std::size_t i = 0; i < r; ++i) size *= 3;
      ASSERT_EQ(span.size(), size);
      std::size_t kernel = 0;
      Matrix ns = nullspace(m);
      for (const auto& x : vs3) {
        if (is_zero(m * x)) {
          ++kernel;
          EXPECT_TRUE(subspace_contains(ns, x));
        }
      }
      std::size_t expect = 1;
      for (std::size_t i = 0; i < ns.rows(); ++i) expect *= 3;
      EXPECT_EQ(kernel, expect);
      EXPECT_EQ(r + ns.rows(), 3u);
    }
  }
}

TEST(Matrix, InverseOfEveryInvertible2x2OverGF3) {
  const Field f = Field::prime(3);
  auto vs = all_vectors(f, 2);
  std::size_t invertible = 0;
  for (const auto& a : vs) {
    for (const auto& b : vs) {
      Matrix m = Matrix::from_rows(f, 2, {a, b});
      Scalar det = a[0] * b[1] - a[1] * b[0];
      if (det.is_zero()) {
        EXPECT_SX_ERROR(inverse(m), ErrorCode::Singular);
        continue;
      }
      ++invertible;
      EXPECT_EQ(m * inverse(m), Matrix::identity(f, 2));
    }
  }
  EXPECT_EQ(invertible, 48u);  // |GL(2,3)|
}

TEST(Matrix, SubspaceOperations) {
  Matrix a = row_space(mat({{1, 1, 0}, {0, 1, 0}}));
  Matrix b = row_space(mat({{1, 0, 0}, {0, 0, 1}}));
  EXPECT_EQ(subspace_intersection(a, b), mat({{1, 0, 0}}));
  EXPECT_EQ(subspace_sum(a, b), Matrix::identity(Q(), 3));
  EXPECT_TRUE(subspace_contains(a, vec({2, 5, 0})));
  EXPECT_FALSE(subspace_contains(a, vec({0, 0, 1})));
  auto x = solve(mat({{2, 1}, {1, 3}}), vec({5, 10}));
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, vec({1, 3}));
  EXPECT_FALSE(solve(mat({{1, 1}, {1, 1}}), vec({1, 2})));
}

// ---- topology

TEST(Topology, ValidationExamples) {
  EXPECT_NO_THROW(FiniteSpace::validate({"a", "b"}, {{}, {"a"}, {"a", "b"}}));
  EXPECT_SX_ERROR(FiniteSpace::validate({"a", "b"}, {{}, {"a"}, {"b"}}), ErrorCode::MissingEmptyOrTotal);
  EXPECT_NO_THROW(FiniteSpace::validate({"a", "b", "c"}, {{}, {"a"}, {"b"}, {"a", "b"}, {"a", "b", "c"}}));
  EXPECT_SX_ERROR(FiniteSpace::validate({"a", "b"}, {{"a"}, {"a", "b"}}), ErrorCode::MissingEmptyOrTotal);
  EXPECT_SX_ERROR(FiniteSpace::validate({"a", "b", "c"}, {{}, {"a"}, {"b"}, {"a", "b", "c"}}),
                  ErrorCode::NotClosedUnderUnion);
  EXPECT_SX_ERROR(FiniteSpace::validate({"a", "b", "c"}, {{}, {"a", "b"}, {"b", "c"}, {"a", "b", "c"}}),
                  ErrorCode::NotClosedUnderIntersection);
  EXPECT_SX_ERROR(FiniteSpace::validate({"a", "b"}, {{}, {"z"}, {"a", "b"}}), ErrorCode::UnknownPoint);
  EXPECT_SX_ERROR(FiniteSpace::validate({"a", "a"}, {{}, {"a"}}), ErrorCode::InvalidOpen);
}

TEST(Topology, DuplicateOpensMerge) {
  auto s = FiniteSpace::validate({"a", "b"}, {{}, {"a"}, {"a"}, {"a", "b"}});
  EXPECT_EQ(s.open_count(), 3u);
}

TEST(Topology, ComponentExamples) {
  auto sier = fixtures::sierpinski();
  EXPECT_EQ(sier->components(sier->top()), std::vector<PointSet>{0b11});
  auto two = fixtures::discrete_two_point();
  EXPECT_EQ(two->components(two->top()), (std::vector<PointSet>{0b01, 0b10}));
  auto three = fixtures::three_point();
  EXPECT_EQ(three->components(three->find({"a", "b"})), (std::vector<PointSet>{0b001, 0b010}));
  EXPECT_EQ(three->component_count(three->top()), 1u);
  EXPECT_EQ(three->component_count(three->empty()), 0u);
}

TEST(Topology, RefinementExamples) {
  auto sier = fixtures::sierpinski();
  EXPECT_EQ(sier->component_refinement(sier->find({"a"}), sier->top()), std::vector<std::size_t>{0});
  auto two = fixtures::discrete_two_point();
  EXPECT_EQ(two->component_refinement(two->find({"b"}), two->top()), std::vector<std::size_t>{1});
  auto three = fixtures::three_point();
  EXPECT_EQ(three->component_refinement(three->find({"a", "b"}), three->top()), (std::vector<std::size_t>{0, 0}));
  EXPECT_SX_ERROR(three->component_refinement(three->find({"a", "b"}), three->find({"a"})), ErrorCode::NotASubset);
  EXPECT_SX_ERROR(three->find({"a", "c"}), ErrorCode::InvalidOpen);
}

// Components by brute force: a subset C of U is connected when no pair of
// opens separates it; components are the maximal connected subsets.
std::vector<PointSet> brute_components(const FiniteSpace& s, PointSet u) {
  auto connected = [&](PointSet c) {
    if (c == 0) return false;
    for (PointSet v : s.opens()) {
      for (PointSet w : s.opens()) {
        if ((c & v) && (c & w) && !(c & v & w) && (c & ~(v | w)) == 0) return false;
      }
    }
    return true;
  };
  std::vector<PointSet> conn;
  for (PointSet c = u;; c = (c - 1) & u) {
    if (connected(c)) conn.push_back(c);
    if (c == 0) break;
  }
  std::vector<PointSet> out;
  for (PointSet c : conn) {
    bool maximal = true;
    for (PointSet d : conn) {
      if (d != c && (c & d) == c) maximal = false;
    }
    if (maximal) out.push_back(c);
  }
  std::sort(out.begin(), out.end(), [](PointSet a, PointSet b) { return (a & -a) < (b & -b); });
  return out;
}

TEST(Topology, ComponentsMatchBruteForceOnRandomSpaces) {
  std::uint64_t state = 12345;
  auto next = [&] {
    state = state * 6364136223846793005ULL + 1442695040888963407ULL;
    return state >> 33;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + next() % 5;
    const PointSet full = (PointSet{1} << n) - 1;
    std::set<PointSet> opens{0, full};
    for (int k = 0; k < 3; ++k) opens.insert(next() & full);
    for (bool grew = true; grew;) {
      grew = false;
      std::vector<PointSet> cur(opens.begin(), opens.end());
      for (PointSet a : cur) {
        for (PointSet b : cur) grew |= opens.insert(a | b).second | opens.insert(a & b).second;
      }
    }
    std::vector<std::string> points;
    for (std::size_t i = 0; i < n; ++i) points.push_back("p" + std::to_string(i));
    auto space = FiniteSpace::validate_masks(points, {opens.begin(), opens.end()});
    for (PointSet u : opens) {
      EXPECT_EQ(space.components(space.find(u)), brute_components(space, u));
    }
  }
}

// ---- algebra

AlgebraSection two(std::initializer_list<long> v, const Field& f = Q()) {
  auto s = fixtures::discrete_two_point();
  return AlgebraSection(s, s->top(), f, vec(f, v));
}

TEST(Algebra, ArithmeticExamples) {
  EXPECT_EQ(add(two({2, 3}), two({1, -1})), two({3, 2}));
  AlgebraSection half_third(fixtures::discrete_two_point(), fixtures::discrete_two_point()->top(), Q(),
                            {q(1, 2), q(1, 3)});
  EXPECT_EQ(multiply(two({2, 3}), half_third), two({1, 1}));
  auto sier = fixtures::sierpinski();
  auto five = AlgebraSection::constant(sier, sier->top(), q(5));
  EXPECT_TRUE(multiply(five, AlgebraSection::zero(sier, sier->top(), Q())).is_zero());
  EXPECT_EQ(negate(two({2, -3})), two({-2, 3}));
  EXPECT_SX_ERROR(add(two({1, 1}), AlgebraSection::unit(sier, sier->top(), Q())), ErrorCode::OpenMismatch);
}

TEST(Algebra, RestrictionExamples) {
  auto sier = fixtures::sierpinski();
  auto r = restrict(AlgebraSection::constant(sier, sier->top(), q(7)), sier->find({"a"}));
  EXPECT_EQ(r.values(), std::vector<Scalar>{q(7)});
  auto d = fixtures::discrete_two_point();
  EXPECT_TRUE(restrict(two({1, 0}), d->find({"b"})).is_zero());
  auto three = fixtures::three_point();
  auto r3 = restrict(AlgebraSection::constant(three, three->top(), q(4)), three->find({"a", "b"}));
  EXPECT_EQ(r3.values(), (std::vector<Scalar>{q(4), q(4)}));
  EXPECT_SX_ERROR(restrict(r3, three->top()), ErrorCode::NotASubset);
}

TEST(Algebra, NowhereZeroAndInverse) {
  EXPECT_FALSE(is_nowhere_zero(two({1, 0})));
  EXPECT_TRUE(is_nowhere_zero(two({2, 3})));
  auto sier = fixtures::sierpinski();
  EXPECT_FALSE(is_nowhere_zero(AlgebraSection::zero(sier, sier->top(), Q())));
  AlgebraSection expect(fixtures::discrete_two_point(), fixtures::discrete_two_point()->top(), Q(),
                        {q(1, 2), q(1, 3)});
  EXPECT_EQ(invert(two({2, 3})), expect);
  EXPECT_EQ(invert(AlgebraSection::constant(sier, sier->top(), q(4))).values(), std::vector<Scalar>{q(1, 4)});
  const Field f5 = Field::prime(5);
  auto p = fixtures::point();
  EXPECT_EQ(invert(AlgebraSection::constant(p, p->top(), Scalar(f5, 2L))).values(),
            std::vector<Scalar>{Scalar(f5, 3L)});
  EXPECT_SX_ERROR(invert(two({1, 0})), ErrorCode::NotNowhereZero);
  EXPECT_SX_ERROR(is_nowhere_zero(AlgebraSection::zero(sier, sier->empty(), Q())), ErrorCode::EmptyOpen);
}

TEST(Algebra, NowhereZeroCriterionMatchesDefinition) {
  const Field f = Field::prime(3);
  for (auto space : {fixtures::point(), fixtures::sierpinski(), fixtures::discrete_two_point(), fixtures::three_point()}) {
    for (std::size_t i = 0; i < space->open_count(); ++i) {
      OpenRef u{i};
      const std::size_t k = space->component_count(u);
      if (k == 0) continue;
      for (const auto& v : all_vectors(f, k)) {
        AlgebraSection s(space, u, f, v);
        EXPECT_EQ(is_nowhere_zero(s), is_nowhere_zero_by_enumeration(s));
      }
    }
  }
}

// ---- modules

TEST(Module, SpanExamples) {
  FreeModule m(fixtures::point(), Q(), 2);
  Submodule f = span(m, {e(m, 1)});
  EXPECT_EQ(f.dims(), std::vector<std::size_t>{1});
  EXPECT_EQ(f.basis(0), mat({{1, 0}}));
  EXPECT_EQ(span(m, {}).dims(), std::vector<std::size_t>{0});
  FreeModule m2(fixtures::discrete_two_point(), Q(), 2);
  EXPECT_EQ(span(m2, {global(m2, {{1, 0}, {0, 0}})}).dims(), (std::vector<std::size_t>{1, 0}));
}

TEST(Module, SumAndIntersection) {
  FreeModule m(fixtures::point(), Q(), 2);
  EXPECT_EQ(sum(span(m, {e(m, 1)}), span(m, {e(m, 2)})), Submodule::full(m));
  EXPECT_EQ(intersect(span(m, {e(m, 1)}), span(m, {e(m, 2)})), Submodule::zero(m));
  FreeModule m3(fixtures::point(), Q(), 3);
  Submodule a = span(m3, {constant(m3, {1, 1, 0}), e(m3, 2)});
  Submodule b = span(m3, {e(m3, 1), e(m3, 3)});
  EXPECT_EQ(intersect(a, b), span(m3, {e(m3, 1)}));
}

TEST(Module, IntersectionAgreesWithEnumerationOverGF3) {
  const Field f = Field::prime(3);
  FreeModule m(fixtures::point(), f, 3);
  auto vs = all_vectors(f, 3);
  // a sample of pairs of planes and lines
  for (std::size_t i = 1; i < vs.size(); i += 4) {
    for (std::size_t j = 1; j < vs.size(); j += 5) {
      Submodule a = span(m, {ModuleSection::global(m, {vs[i]}), ModuleSection::global(m, {vs[(i * 7) % vs.size()]})});
      Submodule b = span(m, {ModuleSection::global(m, {vs[j]})});
      Submodule meet = intersect(a, b);
      for (const auto& v : vs) {
        bool in_both = subspace_contains(a.basis(0), v) && subspace_contains(b.basis(0), v);
        EXPECT_EQ(subspace_contains(meet.basis(0), v), in_both);
      }
    }
  }
}

TEST(Module, Freeness) {
  FreeModule m(fixtures::discrete_two_point(), Q(), 2);
  EXPECT_EQ(is_free(span(m, {global(m, {{1, 0}, {0, 1}})})), std::optional<std::size_t>(1));
  Submodule uneven(m, {mat({{1, 0}}), Matrix::identity(Q(), 2)});
  EXPECT_FALSE(is_free(uneven));
  EXPECT_SX_ERROR(global_basis(uneven), ErrorCode::NotFree);
  FreeModule m3(fixtures::point(), Q(), 3);
  EXPECT_EQ(is_free(Submodule::full(m3)), std::optional<std::size_t>(3));
}

TEST(Module, GlobalBasisExamples) {
  FreeModule m(fixtures::point(), Q(), 2);
  EXPECT_EQ(global_basis(Submodule::full(m)), (std::vector<ModuleSection>{e(m, 1), e(m, 2)}));
  EXPECT_TRUE(global_basis(Submodule::zero(m)).empty());
  FreeModule m2(fixtures::discrete_two_point(), Q(), 2);
  Submodule f(m2, {mat({{1, 0}}), mat({{0, 1}})});
  auto basis = global_basis(f);
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_EQ(basis[0], global(m2, {{1, 0}, {0, 1}}));
  EXPECT_EQ(span(m2, basis), f);
}

TEST(Module, Membership) {
  FreeModule m(fixtures::point(), Q(), 2);
  EXPECT_TRUE(membership(span(m, {e(m, 1)}), e(m, 1)));
  EXPECT_FALSE(membership(span(m, {e(m, 1)}), e(m, 2)));
  EXPECT_TRUE(membership(span(m, {constant(m, {1, 1}), e(m, 2)}), constant(m, {2, 3})));
  // membership over a smaller open reads the refined components
  FreeModule m3(fixtures::three_point(), Q(), 2);
  auto space = m3.space;
  ModuleSection t(m3, space->find({"a", "b"}), {vec({1, 0}), vec({2, 0})});
  EXPECT_TRUE(membership(span(m3, {e(m3, 1)}), t));
  EXPECT_FALSE(membership(span(m3, {e(m3, 2)}), t));
}

TEST(Module, ModularLaw) {
  // F inside H  =>  (F + G) cap H = F + (G cap H)
  FreeModule m(fixtures::point(), Q(), 4);
  Submodule f = span(m, {e(m, 1)});
  Submodule h = span(m, {e(m, 1), e(m, 2), e(m, 3)});
  Submodule g = span(m, {constant(m, {0, 1, 0, 1}), constant(m, {0, 0, 1, 0})});
  EXPECT_EQ(intersect(sum(f, g), h), sum(f, intersect(g, h)));
}

TEST(Module, SectionOperations) {
  FreeModule m(fixtures::discrete_two_point(), Q(), 2);
  auto a = global(m, {{1, 2}, {3, 4}});
  auto b = global(m, {{1, 1}, {1, 1}});
  EXPECT_EQ(add(a, b), global(m, {{2, 3}, {4, 5}}));
  EXPECT_EQ(subtract(a, a), ModuleSection::zero(m, m.space->top()));
  auto s = two({2, 0});
  auto scaled = scale(s, a);
  EXPECT_EQ(scaled, global(m, {{2, 4}, {0, 0}}));
  EXPECT_FALSE(scaled.is_nowhere_zero());
  EXPECT_TRUE(a.is_nowhere_zero());
  EXPECT_EQ(restrict(a, m.space->find({"b"})).vectors(), std::vector<Vector>{vec({3, 4})});
  EXPECT_SX_ERROR(ModuleSection::global(m, {vec({1, 2})}), ErrorCode::DimensionMismatch);
  FreeModule other(fixtures::discrete_two_point(), Q(), 3);
  EXPECT_SX_ERROR(add(a, constant(other, {1, 1, 1})), ErrorCode::ModuleMismatch);
}

}  // namespace
