#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace symplex {

/// Exact ground field: the rationals or GF(p) for an odd prime p.
class Field {
 public:
  Field() = default;

  static Field rationals() { return Field{}; }
  /// Throws InvalidField unless p is an odd prime.
  static Field prime(std::uint32_t p);
  /// Accepts "rationals" / "Q" and "gf:p".
  static Field parse(std::string_view text);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

/// A field element. Prime-field values are kept as integers in [0, p).
class Scalar {
 public:
  Scalar() = default;
  Scalar(const Field& field, long value);
  Scalar(const Field& field, const mpq_class& value);

  static Scalar zero(const Field& field) { return Scalar(field, 0L); }
  static Scalar one(const Field& field) { return Scalar(field, 1L); }
  /// Rationals: "p/q" or "p". Prime fields: "k mod p" or a plain integer.
  static Scalar parse(const Field& field, std::string_view text);

  Field field() const;
  bool is_zero() const { return sgn(value_) == 0; }
  const mpq_class& value() const noexcept { return value_; }

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.p_ == b.p_ && a.value_ == b.value_;
  }

  /// Canonical text: lowest-terms "p/q" (integers print bare) or "k mod p".
  std::string to_string() const;

 private:
  void reduce();
  void check_same(const Scalar& other) const;

  mpq_class value_;
  std::uint32_t p_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace symplex
