#pragma once

#include "gfcech/matrix.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gfcech {

struct CellKey {
  int spot;
  int degree;
  int level;
  bool operator<(const CellKey& o) const {
    if (spot != o.spot) return spot < o.spot;
    if (degree != o.degree) return degree < o.degree;
    return level < o.level;
  }
};

/* Finite model of a level-filtered complex of graded pieces: for each spot k,
   internal degree d in the window, and level 1..level_max, a based vector
   space with differential D(k): (k,d,l) -> (k+1,d,l) and transition
   T: (k,d,l) -> (k,d,l+1). Unset cells are zero. */
class DegreewiseComplexModel {
 public:
  DegreewiseComplexModel() = default;
  DegreewiseComplexModel(Field field, int spots, std::pair<int, int> window, int level_max);

  void set_cell(int spot, int degree, int level, std::vector<std::string> labels);
  void set_diff(int spot, int degree, int level, Matrix m);
  void set_trans(int spot, int degree, int level, Matrix m);

  const Field& field() const { return field_; }
  int spots() const { return spots_; }
  std::pair<int, int> window() const { return window_; }
  int level_max() const { return level_max_; }

  int dim(int spot, int degree, int level) const;
  const std::vector<std::string>& labels(int spot, int degree, int level) const;
  Matrix diff(int spot, int degree, int level) const;
  Matrix trans(int spot, int degree, int level) const;

  /* Checks D(k+1)D(k) = 0 and T D = D T everywhere; returns the number of
     identities checked, throws on the first violation. */
  std::size_t verify_identities() const;

 private:
  Field field_;
  int spots_ = 0;
  std::pair<int, int> window_{0, -1};
  int level_max_ = 0;
  std::map<CellKey, std::vector<std::string>> cells_;
  std::map<CellKey, Matrix> diffs_;
  std::map<CellKey, Matrix> trans_;
};

/* Homology of one cell of the colimit system. The cell is stable at the
   smallest level with plain homology dimensions constant across the margin and
   transition-induced image ranks equal to them; then dim is both the plain
   homology dimension at that level and the colimit dimension. */
struct HomologyCell {
  int spot = 0;
  int degree = 0;
  int dim = 0;
  int level = 0;
  bool stable = false;
  std::vector<int> level_dims;
  std::vector<int> image_ranks;
  std::vector<std::string> representatives;
};

using HomologyTable = std::map<std::pair<int, int>, HomologyCell>;

/* Plain homology at one (spot, degree, level): dimension, kernel basis K and
   boundary matrix B (image columns of the incoming differential). */
struct LevelHomology {
  Matrix kernel;
  Matrix boundary;
  int dim = 0;
};
LevelHomology homology_at(const DegreewiseComplexModel& m, int spot, int degree, int level);

/* Composite transition from level a to level b at (spot, degree). */
Matrix transition_composite(const DegreewiseComplexModel& m, int spot, int degree, int a, int b);

HomologyCell colimit_homology(const DegreewiseComplexModel& m, int spot, int degree, int margin);
HomologyTable homology_table(const DegreewiseComplexModel& m, int margin);

/* A morphism of models: one matrix per cell, zero where unset. */
class ModelMorphism {
 public:
  void set(int spot, int degree, int level, Matrix m);
  Matrix at(const DegreewiseComplexModel& src, const DegreewiseComplexModel& tgt, int spot,
            int degree, int level) const;
  /* Checks commutation with differentials and transitions; returns the number
     of identities checked, throws on the first violation. */
  std::size_t verify(const DegreewiseComplexModel& src, const DegreewiseComplexModel& tgt) const;

 private:
  std::map<CellKey, Matrix> mats_;
};

struct InducedCellResult {
  HomologyCell src;
  HomologyCell tgt;
  int rank = 0;
  bool conclusive = false;
  bool injective = false;
  bool surjective = false;
  bool iso = false;
};

/* Rank of the map induced on colimit homology at one (spot, degree), read off
   at the common stabilized level. */
InducedCellResult induced_on_colimit(const DegreewiseComplexModel& src,
                                     const DegreewiseComplexModel& tgt, const ModelMorphism& phi,
                                     int spot, int degree, int margin);

struct SesSpotVerdict {
  int spot = 0;
  int degree = 0;
  HomologyCell h[3];
  bool conclusive = false;
  bool exact = false;
};

struct SesExactnessReport {
  std::vector<SesSpotVerdict> cells;
  bool conclusive = false;
  bool all_exact = false;
};

/* Exactness of 0 -> A -> B -> C -> 0 after taking colimits, cell by cell:
   builds the three-spot complex A -> B -> C per (spot, degree) and requires
   vanishing colimit homology at all three positions. */
SesExactnessReport ses_exactness_report(const DegreewiseComplexModel& a,
                                        const DegreewiseComplexModel& b,
                                        const DegreewiseComplexModel& c, const ModelMorphism& ab,
                                        const ModelMorphism& bc, int margin);

}  // namespace gfcech
