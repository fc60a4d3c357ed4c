#pragma once

#include "gfcech/groebner.hpp"
#include "gfcech/matrix.hpp"

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace gfcech {

/* Basis of one graded piece: standard monomials (component, exponents) in
   descending module-term order. */
struct GradedPieceBasis {
  int degree = 0;
  std::vector<std::pair<int, Expo>> monomials;
  int dim() const { return static_cast<int>(monomials.size()); }
};

/* Finitely generated graded module presented as ambient free module modulo a
   relation submodule. Queries are pure; the Groebner basis is computed at
   construction. */
class GradedModule {
 public:
  GradedModule(FreeModule ambient, std::vector<FreeVector> relations, GroebnerOptions opts = {});
  static GradedModule free_of(FreeModule ambient);
  static GradedModule cyclic(const Ring& ring, std::vector<Polynomial> ideal_gens);

  const FreeModule& ambient() const { return ambient_; }
  const Ring& ring() const { return ambient_.ring; }
  const SubmoduleBasis& relations() const { return *rel_; }

  GradedPieceBasis piece(int degree) const;
  FreeVector nf(const FreeVector& v) const { return rel_->normal_form(v); }
  bool is_zero_element(const FreeVector& v) const { return nf(v).is_zero(); }

  /* Coordinates of v in the piece basis; requires v homogeneous of the piece
     degree (or zero). */
  std::vector<Scalar> coords(const GradedPieceBasis& piece, const FreeVector& v) const;
  FreeVector from_coords(const GradedPieceBasis& piece, const std::vector<Scalar>& c) const;

  GradedModule quotient_by(const std::vector<FreeVector>& extra) const;

  std::string label(int comp, const Expo& mono) const;

 private:
  FreeModule ambient_;
  std::shared_ptr<const SubmoduleBasis> rel_;
};

/* All p * e_t for p in polys and basis vectors e_t of mod. */
std::vector<FreeVector> ideal_multiples(const FreeModule& mod, const std::vector<Polynomial>& polys);

/* All exponent vectors of the given weighted degree. */
std::vector<Expo> monomials_of_degree(const std::vector<int>& weights, int degree);

/* Matrix of the degree-zero map sending ambient e_t of src to images[t], on
   pieces of the given degree. Rejects inhomogeneous or degree-shifting images. */
Matrix map_matrix(const GradedModule& src, const GradedModule& tgt,
                  const std::vector<FreeVector>& images, int degree);

/* Matrix of v -> scale * f * v from the src piece at src_degree to the tgt
   piece at tgt_degree; requires deg f = tgt_degree - src_degree unless f = 0. */
Matrix mult_matrix(const GradedModule& src, int src_degree, const GradedModule& tgt, int tgt_degree,
                   const Polynomial& f, const Scalar& scale);

}  // namespace gfcech
