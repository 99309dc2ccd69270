#include "symplex/scalar.hpp"

#include <charconv>
#include <ostream>

#include "symplex/error.hpp"

namespace symplex {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

bool is_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  s = trim(s);
  if (!is_integer_text(s)) {
    throw Error(ErrorCode::ParseError, "malformed integer '" + std::string(s) + "'");
  }
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p < 3 || !is_prime(p)) {
    throw Error(ErrorCode::InvalidField, "GF(p) requires an odd prime, got " + std::to_string(p));
  }
  return Field(p);
}

Field Field::parse(std::string_view text) {
  text = trim(text);
  if (text == "rationals" || text == "Q" || text == "QQ") return rationals();
  if (text.starts_with("gf:") || text.starts_with("GF:")) {
    auto digits = text.substr(3);
    std::uint32_t p = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), p);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
      throw Error(ErrorCode::InvalidField, "malformed field '" + std::string(text) + "'");
    }
    return prime(p);
  }
  throw Error(ErrorCode::InvalidField, "unknown field '" + std::string(text) + "'");
}

std::string Field::name() const {
  return is_rational() ? std::string("rationals") : "gf:" + std::to_string(p_);
}

Scalar::Scalar(const Field& field, long value) : value_(value), p_(field.characteristic()) {
  reduce();
}

Scalar::Scalar(const Field& field, const mpq_class& value)
    : value_(value), p_(field.characteristic()) {
  value_.canonicalize();
  reduce();
}

Scalar Scalar::parse(const Field& field, std::string_view text) {
  text = trim(text);
  if (field.is_rational()) {
    auto slash = text.find('/');
    if (slash == std::string_view::npos) return Scalar(field, mpq_class(parse_integer(text)));
    mpz_class num = parse_integer(text.substr(0, slash));
    mpz_class den = parse_integer(text.substr(slash + 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + std::string(text) + "'");
    return Scalar(field, mpq_class(num, den));
  }
  auto mod = text.find("mod");
  if (mod != std::string_view::npos) {
    mpz_class k = parse_integer(text.substr(0, mod));
    mpz_class p = parse_integer(text.substr(mod + 3));
    if (p != field.characteristic()) {
      throw Error(ErrorCode::FieldMismatch,
                  "scalar '" + std::string(text) + "' is not in " + field.name());
    }
    return Scalar(field, mpq_class(k));
  }
  if (text.find('/') != std::string_view::npos) {
    auto slash = text.find('/');
    Scalar num(field, mpq_class(parse_integer(text.substr(0, slash))));
    Scalar den(field, mpq_class(parse_integer(text.substr(slash + 1))));
    return num / den;
  }
  return Scalar(field, mpq_class(parse_integer(text)));
}

Field Scalar::field() const { return Field(p_); }

void Scalar::reduce() {
  if (p_ == 0) return;
  mpz_class p(p_);
  if (value_.get_den() != 1) {
    mpz_class den_inv;
    mpz_class den = value_.get_den();
    if (mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t()) == 0) {
      throw Error(ErrorCode::Singular, "denominator not invertible mod " + std::to_string(p_));
    }
    mpz_class num = value_.get_num() * den_inv;
    value_ = mpq_class(num);
  }
  mpz_class r;
  mpz_fdiv_r(r.get_mpz_t(), value_.get_num_mpz_t(), p.get_mpz_t());
  value_ = mpq_class(r);
}

void Scalar::check_same(const Scalar& other) const {
  if (p_ != other.p_) {
    throw Error(ErrorCode::FieldMismatch, "arithmetic across different fields");
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::Singular, "inverse of zero");
  Scalar out = *this;
  if (p_ == 0) {
    out.value_ = 1 / value_;
    return out;
  }
  mpz_class inv;
  mpz_class p(p_);
  mpz_invert(inv.get_mpz_t(), value_.get_num_mpz_t(), p.get_mpz_t());
  out.value_ = mpq_class(inv);
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  out.value_ = -value_;
  out.reduce();
  return out;
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  check_same(rhs);
  value_ += rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  check_same(rhs);
  value_ -= rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  check_same(rhs);
  value_ *= rhs.value_;
  reduce();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& rhs) {
  check_same(rhs);
  return *this *= rhs.inverse();
}

std::string Scalar::to_string() const {
  if (p_ == 0) return value_.get_str();
  return value_.get_num().get_str() + " mod " + std::to_string(p_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace symplex
