#pragma once

#include "gfcech/scalar.hpp"

#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace gfcech {

/* Exponent vector of a monomial. */
using Expo = std::vector<int>;

int weighted_degree(const Expo& e, const std::vector<int>& weights);
bool mono_divides(const Expo& a, const Expo& b);
Expo mono_mul(const Expo& a, const Expo& b);
Expo mono_div(const Expo& a, const Expo& b);
Expo mono_lcm(const Expo& a, const Expo& b);

/* Weighted graded reverse lexicographic order; returns +1 if a > b, 0, or -1. */
int cmp_grevlex(const Expo& a, const Expo& b, const std::vector<int>& weights);

struct RingData;

class Polynomial;

class Ring {
 public:
  Ring() = default;

  static Ring polynomial(Field field, std::vector<std::string> vars, std::vector<int> weights);
  /* Same variables and weights, with a defining ideal attached (generators must be
     homogeneous polynomials over this ring). */
  Ring quotient(std::vector<Polynomial> defining) const;

  bool valid() const { return d_ != nullptr; }
  int nvars() const;
  const std::vector<std::string>& vars() const;
  const std::vector<int>& weights() const;
  const Field& field() const;
  const std::vector<Polynomial>& defining() const;
  const std::vector<Polynomial>& defining_gb() const;
  bool is_quotient() const;

  /* Arithmetic compatibility: same field, same variable list, same weights. */
  bool compatible(const Ring& o) const;
  /* Full identity including the defining ideal (pointer or structural). */
  bool same_presentation(const Ring& o) const;

  Polynomial zero() const;
  Polynomial one() const;
  Polynomial var(int i) const;
  Polynomial monomial(Expo e, Scalar c) const;
  Polynomial constant(const Scalar& c) const;
  Polynomial constant(long long n) const;

  std::string describe() const;

 private:
  explicit Ring(std::shared_ptr<const RingData> d) : d_(std::move(d)) {}
  std::shared_ptr<const RingData> d_;
};

struct PolyTerm {
  Expo mono;
  Scalar coeff;
};

/* Element of the ambient weighted polynomial ring, terms sorted descending in
   the grevlex order, no zero coefficients. Quotient semantics are applied by
   the module layer, not by polynomial arithmetic. */
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(Ring ring, std::vector<PolyTerm> terms, bool presorted = false);

  const Ring& ring() const { return ring_; }
  const std::vector<PolyTerm>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const PolyTerm& leading_term() const;

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial mul_term(const Expo& m, const Scalar& c) const;
  Polynomial pow(int k) const;
  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  bool is_homogeneous() const;
  /* Weighted degree of a nonzero homogeneous polynomial; nullopt for zero. */
  std::optional<int> homogeneous_degree() const;
  /* Largest weighted degree among terms (zero polynomial: nullopt). */
  std::optional<int> top_degree() const;

  std::string to_string() const;

 private:
  void require_compatible(const Polynomial& o) const;
  Ring ring_;
  std::vector<PolyTerm> terms_;
};

struct RingData {
  Field field;
  std::vector<std::string> vars;
  std::vector<int> weights;
  std::vector<Polynomial> defining;
  std::vector<Polynomial> defining_gb;
};

std::string monomial_to_string(const Expo& e, const std::vector<std::string>& vars);

}  // namespace gfcech
