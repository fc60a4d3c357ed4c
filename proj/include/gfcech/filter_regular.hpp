#pragma once

#include "gfcech/graded_module.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace gfcech {

/* One step of the filter-regularity test: generators of
   (x_1,...,x_i)M :_M x_{i+1} and of (x_1,...,x_i)M :_M a^inf, whether the
   first lies in the second, and a witness generator when it does not. */
struct FilterRegularStep {
  int index = 0;
  std::vector<FreeVector> colon_generators;
  std::vector<FreeVector> saturation_generators;
  int saturation_exponent = 0;
  bool contained = false;
  std::optional<FreeVector> witness;
};

struct FilterRegularReport {
  bool verdict = false;
  std::vector<FilterRegularStep> steps;
};

struct OrderCheckReport {
  bool verdict = false;
  std::size_t orders_checked = 0;
  std::vector<int> failing_order;
  FilterRegularReport failing_report;
};

struct PowerStabilityReport {
  std::vector<int> exponents;
  FilterRegularReport base;
  FilterRegularReport powered;
  bool agree = false;
};

struct SynthesisResult {
  bool success = false;
  std::vector<Polynomial> sequence;
  int trials = 0;
  std::uint64_t seed = 0;
  OrderCheckReport verification;
  bool ideal_matches = false;
};

/* Whether x_1,...,x_n is an a-filter-regular sequence on M, step by step with
   witnesses. Entries must lie in the ideal a (distinct precondition error). */
FilterRegularReport is_filter_regular(const std::vector<Polynomial>& x, const GradedModule& m,
                                      const std::vector<Polynomial>& a, GroebnerOptions opts = {});

/* Filter-regularity in every order of the entries (n <= 6). */
OrderCheckReport is_unconditioned(const std::vector<Polynomial>& x, const GradedModule& m,
                                  const std::vector<Polynomial>& a, GroebnerOptions opts = {});

/* Filter-regularity of x versus the entrywise powers x_i^{e_i}. */
PowerStabilityReport check_power_stability(const std::vector<Polynomial>& x,
                                           const std::vector<int>& exponents, const GradedModule& m,
                                           const std::vector<Polynomial>& a,
                                           GroebnerOptions opts = {});

/* Searches for generators x of the ideal spanned by a that form an
   unconditioned a-filter-regular sequence on M: each entry is the matching
   generator of a perturbed by random homogeneous combinations of the others,
   the original generator tried first. Deterministic in the seed. */
SynthesisResult synthesize_generators(const std::vector<Polynomial>& a, const GradedModule& m,
                                      int max_trials, std::uint64_t seed, GroebnerOptions opts = {});

}  // namespace gfcech
