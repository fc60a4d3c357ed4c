#pragma once

#include "gfcech/free_module.hpp"

#include <cstddef>
#include <vector>

namespace gfcech {

struct GroebnerOptions {
  std::size_t max_pairs = 200000;
};

struct MembershipResult {
  bool member = false;
  FreeVector normal_form;
  /* Cofactors reproducing v exactly in the ambient free module:
     v = normal_form + sum_i gen_cofactors[i] * gens[i] + sum_j defining[j] * defining_cofactors[j]. */
  std::vector<Polynomial> gen_cofactors;
  std::vector<FreeVector> defining_cofactors;
};

/* Submodule of a graded free module over a (possibly quotient) ring, with an
   eagerly computed Groebner basis. Over a quotient ring A = P/I the basis is
   computed for N + I*F, which represents N as a submodule of the free A-module.
   A single extended run with tag columns also yields membership witnesses and
   the syzygy module. Zero generators are dropped; generators must be
   homogeneous. Immutable once constructed. */
class SubmoduleBasis {
 public:
  SubmoduleBasis(FreeModule ambient, std::vector<FreeVector> gens, GroebnerOptions opts = {});

  const FreeModule& ambient() const { return ambient_; }
  const std::vector<FreeVector>& generators() const { return gens_; }
  /* Reduced Groebner basis, leads descending, monic. */
  const std::vector<FreeVector>& groebner_basis() const { return gb_; }
  /* Leading terms of the Groebner basis. */
  const std::vector<ModTerm>& lead_terms() const { return leads_; }

  /* Canonical normal form: no term divisible by a basis lead. */
  FreeVector normal_form(const FreeVector& v) const;
  MembershipResult membership(const FreeVector& v) const;

  /* Generators of the syzygy module of the (kept) generators, as vectors in
     A^s graded by the generator degrees. */
  const std::vector<FreeVector>& syzygy_generators() const { return syzygies_; }
  FreeModule syzygy_ambient() const;

  bool contains(const SubmoduleBasis& other) const;
  bool equals(const SubmoduleBasis& other) const;

 private:
  FreeModule ambient_;
  std::vector<FreeVector> gens_;
  std::vector<FreeVector> gb_;
  std::vector<ModTerm> leads_;
  std::vector<FreeVector> ext_gb_;
  std::vector<ModTerm> ext_leads_;
  FreeModule ext_ambient_;
  std::vector<FreeVector> syzygies_;
  GroebnerOptions opts_;
};

/* {u in F : f*u lies in N, as submodules of F/(relations)}. */
SubmoduleBasis colon(const SubmoduleBasis& n, const Polynomial& f,
                     const std::vector<FreeVector>& relations, GroebnerOptions opts = {});

/* {u in F : a_j*u in N for every j, as submodules of F/(relations)}. */
SubmoduleBasis colon_by_ideal(const SubmoduleBasis& n, const std::vector<Polynomial>& a,
                              const std::vector<FreeVector>& relations, GroebnerOptions opts = {});

/* Union of N : a^k over k, computed by iterating colon until the chain is
   stationary; *exponent_out receives the stabilizing exponent. */
SubmoduleBasis saturate(const SubmoduleBasis& n, const std::vector<Polynomial>& a,
                        const std::vector<FreeVector>& relations, int* exponent_out = nullptr,
                        GroebnerOptions opts = {});

/* Mutual containment of N + (relations) and N' + (relations). */
bool equal_submodules(const SubmoduleBasis& a, const SubmoduleBasis& b,
                      const std::vector<FreeVector>& relations, GroebnerOptions opts = {});

/* Groebner basis of an ideal, as polynomials. */
std::vector<Polynomial> ideal_groebner(const Ring& ring, const std::vector<Polynomial>& gens,
                                       GroebnerOptions opts = {});

}  // namespace gfcech
