#pragma once

#include "gfcech/complex_model.hpp"
#include "gfcech/graded_module.hpp"

#include <string>
#include <utility>
#include <vector>

namespace gfcech {

/* Level-filtered model of the Cech complex of a sequence x on M: spot k holds
   one summand per size-k subset S of the sequence, whose level-l piece in
   internal degree d is the piece of M in degree d + l*w(S), transitioning by
   multiplication with the product over S and differentiating into S + {j} by
   multiplication with x_j^l and the insertion sign. */
struct CechComplex {
  GradedModule m;
  std::vector<Polynomial> sequence;
  std::pair<int, int> window{0, -1};
  int level_max = 0;
  std::vector<std::vector<std::vector<int>>> subsets;
  DegreewiseComplexModel grid;

  int subset_weight(const std::vector<int>& s) const;
  /* Starting row of the summand block of subsets[k][si] in the cell at
     (k, d, level), plus that summand's piece. */
  int block_offset(int k, int si, int d, int level) const;
  GradedPieceBasis summand_piece(int k, int si, int d, int level) const;
};

CechComplex build_cech(std::vector<Polynomial> x, GradedModule m, std::pair<int, int> window,
                       int level_max, GroebnerOptions opts = {});

HomologyTable local_cohomology(const std::vector<Polynomial>& x, const GradedModule& m,
                               std::pair<int, int> window, int level_max, int margin,
                               GroebnerOptions opts = {});

struct IndependenceReport {
  bool conclusive = false;
  bool agree = false;
  HomologyTable first;
  HomologyTable second;
  std::vector<std::string> mismatches;
};

/* Local cohomology computed from two generating sequences of the same ideal,
   compared spot by spot (missing spots read as zero). */
IndependenceReport generator_independence_check(const std::vector<Polynomial>& x1,
                                                const std::vector<Polynomial>& x2,
                                                const GradedModule& m, std::pair<int, int> window,
                                                int level_max, int margin, GroebnerOptions opts = {});

}  // namespace gfcech
