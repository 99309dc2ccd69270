#include "symplex/algebra.hpp"

#include <algorithm>

#include "symplex/error.hpp"

namespace symplex {

AlgebraSection::AlgebraSection(SpacePtr space, OpenRef open, Field field, std::vector<Scalar> values)
    : space_(std::move(space)), open_(open), field_(field), values_(std::move(values)) {
  if (!space_) throw Error(ErrorCode::InvalidOpen, "section without a space");
  if (values_.size() != space_->component_count(open_)) {
    throw Error(ErrorCode::DimensionMismatch,
                "section over " + space_->describe(space_->set_of(open_)) + " needs " +
                    std::to_string(space_->component_count(open_)) + " values, got " +
                    std::to_string(values_.size()));
  }
  for (const auto& v : values_) {
    if (v.field() != field_) throw Error(ErrorCode::FieldMismatch, "section value outside " + field_.name());
  }
}

AlgebraSection AlgebraSection::constant(SpacePtr space, OpenRef open, const Scalar& value) {
  std::size_t n = space->component_count(open);
  return AlgebraSection(std::move(space), open, value.field(), std::vector<Scalar>(n, value));
}

AlgebraSection AlgebraSection::zero(SpacePtr space, OpenRef open, const Field& field) {
  return constant(std::move(space), open, Scalar::zero(field));
}

AlgebraSection AlgebraSection::unit(SpacePtr space, OpenRef open, const Field& field) {
  return constant(std::move(space), open, Scalar::one(field));
}

bool AlgebraSection::is_zero() const {
  return std::all_of(values_.begin(), values_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool operator==(const AlgebraSection& a, const AlgebraSection& b) {
  return same_space(a.space_, b.space_) && a.open_ == b.open_ && a.field_ == b.field_ &&
         a.values_ == b.values_;
}

namespace {

void check_compatible(const AlgebraSection& a, const AlgebraSection& b) {
  if (!same_space(a.space(), b.space()) || a.open() != b.open()) {
    throw Error(ErrorCode::OpenMismatch, "sections live over different opens");
  }
  if (a.field() != b.field()) throw Error(ErrorCode::FieldMismatch, "sections over different fields");
}

template <typename Op>
AlgebraSection zip(const AlgebraSection& a, const AlgebraSection& b, Op op) {
  check_compatible(a, b);
  std::vector<Scalar> out;
  out.reserve(a.values().size());
  for (std::size_t i = 0; i < a.values().size(); ++i) out.push_back(op(a[i], b[i]));
  return AlgebraSection(a.space(), a.open(), a.field(), std::move(out));
}

}  // namespace

AlgebraSection add(const AlgebraSection& a, const AlgebraSection& b) {
  return zip(a, b, [](const Scalar& x, const Scalar& y) { return x + y; });
}

AlgebraSection subtract(const AlgebraSection& a, const AlgebraSection& b) {
  return zip(a, b, [](const Scalar& x, const Scalar& y) { return x - y; });
}

AlgebraSection multiply(const AlgebraSection& a, const AlgebraSection& b) {
  return zip(a, b, [](const Scalar& x, const Scalar& y) { return x * y; });
}

AlgebraSection negate(const AlgebraSection& a) {
  std::vector<Scalar> out;
  for (const auto& v : a.values()) out.push_back(-v);
  return AlgebraSection(a.space(), a.open(), a.field(), std::move(out));
}

AlgebraSection restrict(const AlgebraSection& s, OpenRef v) {
  auto map = s.space()->component_refinement(v, s.open());
  std::vector<Scalar> out;
  out.reserve(map.size());
  for (std::size_t c : map) out.push_back(s[c]);
  return AlgebraSection(s.space(), v, s.field(), std::move(out));
}

bool is_nowhere_zero(const AlgebraSection& s) {
  if (s.space()->set_of(s.open()) == 0) throw Error(ErrorCode::EmptyOpen, "nowhere-zero test on the empty open");
  return std::none_of(s.values().begin(), s.values().end(), [](const Scalar& x) { return x.is_zero(); });
}

bool is_nowhere_zero_by_enumeration(const AlgebraSection& s) {
  const auto& space = *s.space();
  if (space.set_of(s.open()) == 0) throw Error(ErrorCode::EmptyOpen, "nowhere-zero test on the empty open");
  for (OpenRef v : space.opens_inside(s.open())) {
    if (space.set_of(v) == 0) continue;
    if (restrict(s, v).is_zero()) return false;
  }
  return true;
}

AlgebraSection invert(const AlgebraSection& s) {
  if (!is_nowhere_zero(s)) {
    throw Error(ErrorCode::NotNowhereZero,
                "section over " + s.space()->describe(s.space()->set_of(s.open())) + " vanishes on a component");
  }
  std::vector<Scalar> out;
  for (const auto& v : s.values()) out.push_back(v.inverse());
  return AlgebraSection(s.space(), s.open(), s.field(), std::move(out));
}

}  // namespace symplex
