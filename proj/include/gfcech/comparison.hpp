#pragma once

#include "gfcech/cech.hpp"
#include "gfcech/filter_regular.hpp"
#include "gfcech/genfrac.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gfcech {

/* The comparison map on one summand: a numerator over the full-prefix subset
   keeps its fraction, every other subset is sent to zero. 1-based subset
   entries, k >= 1. */
GeneralizedFraction theta(const GenfracContext& ctx, int k, const std::vector<int>& subset,
                          const FreeVector& numerator, int level);

/* Matrices of the comparison morphism between the two models; commutation
   with differentials and transitions is verified at build time. */
ModelMorphism build_theta(const CechComplex& cech, const GenfracComplex& gf);

enum class CellVerdict { iso, not_iso, inconclusive };

struct ComparisonCell {
  int spot = 0;
  int degree = 0;
  InducedCellResult induced;
  CellVerdict verdict = CellVerdict::inconclusive;
};

struct QuasiIsoReport {
  FilterRegularReport hypothesis;
  bool hypothesis_met = false;
  std::vector<ComparisonCell> cells;
  CellVerdict global = CellVerdict::inconclusive;
  std::size_t identities_checked = 0;
};

/* Compares the two models of local cohomology through the comparison morphism
   cell by cell; the filter-regularity hypothesis is checked and attached, and
   a failed hypothesis only labels the report, the comparison still runs.
   An empty a means the ideal spanned by x itself. */
QuasiIsoReport verify_quasi_isomorphism(const std::vector<Polynomial>& x, const GradedModule& m,
                                        std::pair<int, int> window, int level_max, int margin,
                                        const std::vector<Polynomial>& a = {},
                                        GroebnerOptions opts = {});

struct TopIsoCell {
  ComparisonCell cell;
  /* Surjectivity recomputed from the rank identity rank[phi K | B] =
     rank[K | B], independently of the rank-modulo comparison. */
  bool surjective_checked = false;
};

struct TopIsoReport {
  std::vector<TopIsoCell> cells;
  bool conclusive = false;
  bool all_iso = false;
};

/* The top-spot comparison alone (no hypothesis: it does not need one). */
TopIsoReport top_homology_iso_check(const std::vector<Polynomial>& x, const GradedModule& m,
                                    std::pair<int, int> window, int level_max, int margin,
                                    GroebnerOptions opts = {});

struct SurjectivityCertificate {
  int degree = 0;
  std::string target_fraction;
  std::string preimage;
  int level_star = 0;
  int level_clear = 0;
  bool preimage_verified = false;
  bool cycle_verified = false;
};

struct InjectivityCertificate {
  int degree = 0;
  std::string cycle;
  bool maps_to_zero = false;
  bool is_boundary = false;
  std::string boundary_preimage;
  std::optional<int> annihilator_power;
};

struct TwoElementReport {
  FilterRegularReport hypothesis;
  bool hypothesis_met = false;
  std::vector<ComparisonCell> cells;
  bool conclusive = false;
  bool all_iso = false;
  std::vector<SurjectivityCertificate> surjectivity;
  std::vector<InjectivityCertificate> injectivity;
};

/* Middle-spot comparison for a two-element sequence, with element-level
   certificates: a chain preimage for each stable fraction class in the
   target, and boundary data for every cycle the comparison kills. An empty a
   means the ideal spanned by x itself. */
TwoElementReport two_element_case(const std::vector<Polynomial>& x, const GradedModule& m,
                                  std::pair<int, int> window, int level_max, int margin,
                                  const std::vector<Polynomial>& a = {}, GroebnerOptions opts = {});

struct SesGfApplication {
  bool input_exact = false;
  std::vector<std::string> input_failures;
  FilterRegularReport hypothesis;
  bool hypothesis_met = false;
  bool last_entry_in_ideal = false;
  SesExactnessReport colimit;
  bool exact_at_top = false;
  bool conclusive = false;
};

/* Applies the top generalized-fraction functor to a short exact sequence
   0 -> A -> B -> C -> 0 (maps given by images of the ambient generators) and
   reports exactness of the resulting colimit complex, separating hypothesis
   failures (filter-regularity of x_1..x_{n-1} on C, last entry in the ideal
   spanned by x) from exactness failures. */
SesGfApplication apply_gf_to_ses(const GradedModule& a_mod, const GradedModule& b_mod,
                                 const GradedModule& c_mod, const std::vector<FreeVector>& inj,
                                 const std::vector<FreeVector>& sur, const std::vector<Polynomial>& x,
                                 std::pair<int, int> window, int level_max, int margin,
                                 GroebnerOptions opts = {});

/* Finite free resolution F_c -> ... -> F_0 of target; diffs[j] holds the
   images of the F_j basis in F_{j-1}. */
struct FreeResolution {
  std::vector<FreeModule> modules;
  std::vector<std::vector<FreeVector>> diffs;
  GradedModule target;
};

/* Koszul complex of the given elements, resolving the cyclic quotient by
   their ideal; squares to zero by construction and is checked at build. */
FreeResolution koszul_resolution(const Ring& ring, const std::vector<Polynomial>& f,
                                 GroebnerOptions opts = {});

/* Resolution by iterated syzygies, length-capped. */
FreeResolution syzygy_resolution(const GradedModule& m, int max_length, GroebnerOptions opts = {});

struct TorReport {
  int resolution_length = 0;
  int i_max = 0;
  /* (homological index i, degree) -> colimit homology of the tensored model. */
  HomologyTable tor;
  HomologyTable direct_top;
  bool tor0_matches = false;
  bool vanishing = false;
  bool conclusive = false;
};

/* Tor of the top generalized-fraction module of the ring against the target of
   the resolution, reported for homological indices 0..i_max, with the zeroth
   value cross-checked against the directly computed colimit of module pieces.
   Requires x filter-regular on both the ring and the target. */
TorReport tor_vanishing_check(const FreeResolution& res, const std::vector<Polynomial>& x,
                              int i_max, std::pair<int, int> window, int level_max, int margin,
                              GroebnerOptions opts = {});

}  // namespace gfcech
