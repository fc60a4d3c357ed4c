#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <cstdint>
#include <string>

namespace gfcech {

using Rational = boost::multiprecision::mpq_rational;

/* Coefficient field: exact rationals, or F_p for a word-sized prime p. */
class Field {
 public:
  Field() = default;
  static Field rationals() { return Field(0); }
  static Field prime(std::uint64_t p);

  bool is_rationals() const { return p_ == 0; }
  std::uint64_t characteristic() const { return p_; }
  bool operator==(const Field& o) const { return p_ == o.p_; }
  bool operator!=(const Field& o) const { return p_ != o.p_; }
  std::string describe() const;

 private:
  explicit Field(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;  // 0 encodes the rationals
};

bool is_prime_u64(std::uint64_t n);

class Scalar {
 public:
  Scalar() : field_(Field::rationals()), rat_(0) {}

  static Scalar zero(const Field& f);
  static Scalar one(const Field& f);
  static Scalar of(const Field& f, long long n);
  static Scalar from_rational(const Field& f, const Rational& q);

  const Field& field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inverse() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  const Rational& rational() const;
  std::uint64_t residue() const;

  std::string to_string() const;

 private:
  Scalar(Field f, Rational q) : field_(f), rat_(std::move(q)) {}
  Scalar(Field f, std::uint64_t r) : field_(f), res_(r) {}
  void require_same_field(const Scalar& o) const;

  Field field_;
  Rational rat_ = 0;
  std::uint64_t res_ = 0;
};

}  // namespace gfcech
