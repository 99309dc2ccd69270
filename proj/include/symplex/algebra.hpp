#pragma once

#include <vector>

#include "symplex/scalar.hpp"
#include "symplex/topology.hpp"

namespace symplex {

/// A section of the locally constant sheaf of field values over an open U:
/// one scalar per connected component of U, in components() order.
class AlgebraSection {
 public:
  AlgebraSection(SpacePtr space, OpenRef open, Field field, std::vector<Scalar> values);

  static AlgebraSection constant(SpacePtr space, OpenRef open, const Scalar& value);
  static AlgebraSection zero(SpacePtr space, OpenRef open, const Field& field);
  static AlgebraSection unit(SpacePtr space, OpenRef open, const Field& field);

  const SpacePtr& space() const noexcept { return space_; }
  OpenRef open() const noexcept { return open_; }
  const Field& field() const noexcept { return field_; }
  const std::vector<Scalar>& values() const noexcept { return values_; }
  const Scalar& operator[](std::size_t component) const { return values_.at(component); }

  bool is_zero() const;

  friend bool operator==(const AlgebraSection& a, const AlgebraSection& b);

 private:
  SpacePtr space_;
  OpenRef open_;
  Field field_;
  std::vector<Scalar> values_;
};

AlgebraSection add(const AlgebraSection& a, const AlgebraSection& b);
AlgebraSection subtract(const AlgebraSection& a, const AlgebraSection& b);
AlgebraSection multiply(const AlgebraSection& a, const AlgebraSection& b);
AlgebraSection negate(const AlgebraSection& a);

/// The restriction map A(U) -> A(V) for V inside U.
AlgebraSection restrict(const AlgebraSection& s, OpenRef v);

/// Every non-empty open V inside U sees a non-zero restriction. Decided by
/// the per-component criterion; see is_nowhere_zero_by_enumeration.
bool is_nowhere_zero(const AlgebraSection& s);
/// The literal definition: restrict to each non-empty open inside U.
bool is_nowhere_zero_by_enumeration(const AlgebraSection& s);

/// Componentwise inverse. Throws NotNowhereZero when some component value is 0.
AlgebraSection invert(const AlgebraSection& s);

}  // namespace symplex
