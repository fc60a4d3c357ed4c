#pragma once

#include "gfcech/complex_model.hpp"
#include "gfcech/graded_module.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace gfcech {

/* Exponents of a triangular denominator: a positive prefix followed by zeros
   (a zero exponent stands for the entry 1). */
struct TriangularDenominator {
  int arity = 0;
  std::vector<int> exponents;
};

TriangularDenominator validate_denominator(int arity, std::vector<int> exponents);

/* A sequence on a module, with the convention that entries past the end read
   as the last entry. */
class GenfracContext {
 public:
  GenfracContext(GradedModule m, std::vector<Polynomial> x, GroebnerOptions opts = {});

  const GradedModule& module() const { return m_; }
  const std::vector<Polynomial>& sequence() const { return x_; }
  int n() const { return static_cast<int>(x_.size()); }
  /* 1-based; r > n reads as the last entry. */
  const Polynomial& entry(int r) const;
  int entry_degree(int r) const;
  const GroebnerOptions& options() const { return opts_; }

 private:
  GradedModule m_;
  std::vector<Polynomial> x_;
  GroebnerOptions opts_;
};

struct GeneralizedFraction {
  FreeVector numerator;
  TriangularDenominator den;
};

std::optional<int> fraction_degree(const GenfracContext& ctx, const GeneralizedFraction& f);
/* Representative with all denominator exponents equal to level. */
GeneralizedFraction to_full_power(const GenfracContext& ctx, const GeneralizedFraction& f, int level);
std::string render_fraction(const GenfracContext& ctx, const GeneralizedFraction& f);

struct GfZeroCertificate {
  int level = 0;
  FreeVector multiplied_numerator;
  std::vector<Polynomial> powers;
  std::size_t power_generator_count = 0;
  MembershipResult witness;
};

enum class GfZeroStatus { zero, nonzero_at_bound, undecided };

struct GfZeroResult {
  GfZeroStatus status = GfZeroStatus::undecided;
  int levels_checked = 0;
  std::optional<GfZeroCertificate> certificate;
};

/* Vanishing test: the fraction is zero iff some level up to level_max clears
   the multiplied numerator into the span of the matching denominator powers.
   At the bound, a stabilization side-check separates nonzero_at_bound from
   undecided. */
GfZeroResult gf_is_zero(const GenfracContext& ctx, const GeneralizedFraction& f, int level_max);
/* Re-checks a zero certificate one level higher. */
bool replay_certificate(const GenfracContext& ctx, const GeneralizedFraction& f,
                        const GfZeroCertificate& cert);

struct GfEqualResult {
  bool decided = false;
  bool equal = false;
  GfZeroResult difference;
};

GfEqualResult gf_equal(const GenfracContext& ctx, const GeneralizedFraction& f1,
                       const GeneralizedFraction& f2, int level_max);

/* Level-filtered model of the generalized-fractions complex: spot i at level l
   models fractions with denominator (x_1^l,...,x_i^l) by the piece of
   M/(x_1^l,...,x_{i-1}^l)M in degree d + l*w_i, transitioning by
   multiplication with x_1*...*x_i and differentiating by multiplication with
   (-1)^i x_{i+1}^l. */
struct GenfracComplex {
  GradedModule m;
  std::vector<Polynomial> sequence;
  std::pair<int, int> window{0, -1};
  int level_max = 0;
  std::vector<int> spot_weight;
  DegreewiseComplexModel grid;
  std::map<std::pair<int, int>, GradedModule> level_modules;

  const GradedModule& level_module(int spot, int level) const;
};

GenfracComplex build_genfrac_complex(const GenfracContext& ctx, std::pair<int, int> window,
                                     int level_max);

HomologyTable genfrac_homology(const std::vector<Polynomial>& x, const GradedModule& m,
                               std::pair<int, int> window, int level_max, int margin,
                               GroebnerOptions opts = {});

/* Coordinates of the fraction's class in the model cell at its own internal
   degree and the given level. */
std::vector<Scalar> fraction_class(const GenfracComplex& gc, const GenfracContext& ctx,
                                   const GeneralizedFraction& f, int level);

}  // namespace gfcech
