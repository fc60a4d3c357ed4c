#include "gfcech/scalar.hpp"

#include <stdexcept>

namespace gfcech {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= (1ull << 62)) throw std::invalid_argument("field characteristic too large");
  if (!is_prime_u64(p)) throw std::invalid_argument("field characteristic is not prime: " + std::to_string(p));
  return Field(p);
}

std::string Field::describe() const {
  return is_rationals() ? "q" : "fp:" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) {
  return f.is_rationals() ? Scalar(f, Rational(0)) : Scalar(f, std::uint64_t{0});
}

Scalar Scalar::one(const Field& f) {
  return f.is_rationals() ? Scalar(f, Rational(1)) : Scalar(f, std::uint64_t{1});
}

Scalar Scalar::of(const Field& f, long long n) {
  if (f.is_rationals()) return Scalar(f, Rational(n));
  std::uint64_t p = f.characteristic();
  long long m = n % static_cast<long long>(p);
  if (m < 0) m += static_cast<long long>(p);
  return Scalar(f, static_cast<std::uint64_t>(m));
}

Scalar Scalar::from_rational(const Field& f, const Rational& q) {
  if (f.is_rationals()) return Scalar(f, q);
  std::uint64_t p = f.characteristic();
  auto reduce = [&](const boost::multiprecision::mpz_int& z) {
    boost::multiprecision::mpz_int m = z % p;
    if (m < 0) m += p;
    return static_cast<std::uint64_t>(m);
  };
  std::uint64_t num = reduce(boost::multiprecision::numerator(q));
  std::uint64_t den = reduce(boost::multiprecision::denominator(q));
  if (den == 0) throw std::domain_error("denominator vanishes modulo " + std::to_string(p));
  return Scalar(f, mulmod(num, powmod(den, p - 2, p), p));
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_) throw std::invalid_argument("scalar field mismatch");
}

bool Scalar::is_zero() const {
  return field_.is_rationals() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rationals() ? rat_ == 1 : res_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_rationals()) return Scalar(field_, rat_ + o.rat_);
  std::uint64_t p = field_.characteristic();
  std::uint64_t s = res_ + o.res_;
  if (s >= p) s -= p;
  return Scalar(field_, s);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_rationals()) return Scalar(field_, rat_ - o.rat_);
  std::uint64_t p = field_.characteristic();
  std::uint64_t s = res_ + p - o.res_;
  if (s >= p) s -= p;
  return Scalar(field_, s);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_rationals()) return Scalar(field_, rat_ * o.rat_);
  return Scalar(field_, mulmod(res_, o.res_, field_.characteristic()));
}

Scalar Scalar::operator/(const Scalar& o) const {
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  if (field_.is_rationals()) return Scalar(field_, -rat_);
  std::uint64_t p = field_.characteristic();
  return Scalar(field_, res_ == 0 ? 0 : p - res_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("scalar inverse of zero");
  if (field_.is_rationals()) return Scalar(field_, Rational(1) / rat_);
  std::uint64_t p = field_.characteristic();
  return Scalar(field_, powmod(res_, p - 2, p));
}

bool Scalar::operator==(const Scalar& o) const {
  if (field_ != o.field_) return false;
  return field_.is_rationals() ? rat_ == o.rat_ : res_ == o.res_;
}

const Rational& Scalar::rational() const {
  if (!field_.is_rationals()) throw std::logic_error("not a rational scalar");
  return rat_;
}

std::uint64_t Scalar::residue() const {
  if (field_.is_rationals()) throw std::logic_error("not a residue scalar");
  return res_;
}

std::string Scalar::to_string() const {
  if (field_.is_rationals()) return rat_.str();
  return std::to_string(res_);
}

}  // namespace gfcech
