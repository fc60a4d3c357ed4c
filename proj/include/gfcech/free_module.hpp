#pragma once

#include "gfcech/ring.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gfcech {

class FreeVector;

/* Graded free module A(-s_1) + ... + A(-s_r): a basis element e_t placed in
   internal degree shifts[t]. */
struct FreeModule {
  Ring ring;
  std::vector<int> shifts;

  int rank() const { return static_cast<int>(shifts.size()); }
  bool compatible(const FreeModule& o) const { return ring.compatible(o.ring) && shifts == o.shifts; }
  FreeVector zero() const;
  FreeVector basis_vector(int t) const;
};

/* A term c * m * e_comp of a free module element. */
struct ModTerm {
  int comp;
  Expo mono;
  Scalar coeff;
};

/* Position-over-term order with lower positions dominant; +1 if a > b. */
int cmp_modterm(int comp_a, const Expo& a, int comp_b, const Expo& b, const std::vector<int>& weights);

class FreeVector {
 public:
  FreeVector() = default;
  FreeVector(FreeModule mod, std::vector<Polynomial> comps);

  const FreeModule& ambient() const { return mod_; }
  int rank() const { return mod_.rank(); }
  const Polynomial& comp(int t) const { return comps_[t]; }
  bool is_zero() const;

  std::optional<ModTerm> leading_term() const;

  FreeVector operator+(const FreeVector& o) const;
  FreeVector operator-(const FreeVector& o) const;
  FreeVector operator-() const;
  FreeVector scaled(const Scalar& c) const;
  FreeVector mul(const Polynomial& f) const;
  FreeVector mul_term(const Expo& m, const Scalar& c) const;
  bool operator==(const FreeVector& o) const;
  bool operator!=(const FreeVector& o) const { return !(*this == o); }

  bool is_homogeneous() const;
  /* Internal degree of a nonzero homogeneous vector (component degree plus shift). */
  std::optional<int> homogeneous_degree() const;

  std::string to_string() const;

 private:
  FreeModule mod_;
  std::vector<Polynomial> comps_;
};

}  // namespace gfcech
