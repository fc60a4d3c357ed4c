#include "gfcech/complex_model.hpp"

#include <stdexcept>

namespace gfcech {

namespace {

const std::vector<std::string> kNoLabels;

std::string cell_name(int spot, int degree, int level) {
  return "(spot " + std::to_string(spot) + ", degree " + std::to_string(degree) + ", level " +
         std::to_string(level) + ")";
}

}  // namespace

DegreewiseComplexModel::DegreewiseComplexModel(Field field, int spots, std::pair<int, int> window,
                                               int level_max)
    : field_(field), spots_(spots), window_(window), level_max_(level_max) {
  if (spots < 0 || level_max < 1 || window.first > window.second)
    throw std::invalid_argument("bad complex model shape");
}

void DegreewiseComplexModel::set_cell(int spot, int degree, int level, std::vector<std::string> labels) {
  cells_[{spot, degree, level}] = std::move(labels);
}

void DegreewiseComplexModel::set_diff(int spot, int degree, int level, Matrix m) {
  if (m.rows() != dim(spot + 1, degree, level) || m.cols() != dim(spot, degree, level))
    throw std::invalid_argument("differential shape mismatch at " + cell_name(spot, degree, level));
  diffs_[{spot, degree, level}] = std::move(m);
}

void DegreewiseComplexModel::set_trans(int spot, int degree, int level, Matrix m) {
  if (m.rows() != dim(spot, degree, level + 1) || m.cols() != dim(spot, degree, level))
    throw std::invalid_argument("transition shape mismatch at " + cell_name(spot, degree, level));
  trans_[{spot, degree, level}] = std::move(m);
}

int DegreewiseComplexModel::dim(int spot, int degree, int level) const {
  auto it = cells_.find({spot, degree, level});
  return it == cells_.end() ? 0 : static_cast<int>(it->second.size());
}

const std::vector<std::string>& DegreewiseComplexModel::labels(int spot, int degree, int level) const {
  auto it = cells_.find({spot, degree, level});
  return it == cells_.end() ? kNoLabels : it->second;
}

Matrix DegreewiseComplexModel::diff(int spot, int degree, int level) const {
  auto it = diffs_.find({spot, degree, level});
  if (it != diffs_.end()) return it->second;
  return Matrix(field_, dim(spot + 1, degree, level), dim(spot, degree, level));
}

Matrix DegreewiseComplexModel::trans(int spot, int degree, int level) const {
  auto it = trans_.find({spot, degree, level});
  if (it != trans_.end()) return it->second;
  return Matrix(field_, dim(spot, degree, level + 1), dim(spot, degree, level));
}

std::size_t DegreewiseComplexModel::verify_identities() const {
  std::size_t checked = 0;
  for (int d = window_.first; d <= window_.second; ++d) {
    for (int l = 1; l <= level_max_; ++l) {
      for (int k = 0; k < spots_; ++k) {
        Matrix dd = diff(k + 1, d, l) * diff(k, d, l);
        if (!dd.is_zero())
          throw std::logic_error("differential does not square to zero at " + cell_name(k, d, l));
        ++checked;
        if (l < level_max_) {
          Matrix lhs = trans(k + 1, d, l) * diff(k, d, l);
          Matrix rhs = diff(k, d, l + 1) * trans(k, d, l);
          if (!(lhs == rhs))
            throw std::logic_error("transition square fails at " + cell_name(k, d, l));
          ++checked;
        }
      }
    }
  }
  return checked;
}

LevelHomology homology_at(const DegreewiseComplexModel& m, int spot, int degree, int level) {
  LevelHomology h;
  h.kernel = kernel_basis(m.diff(spot, degree, level));
  Matrix incoming = m.diff(spot - 1, degree, level);
  h.boundary = incoming;
  h.dim = h.kernel.cols() - rank(incoming);
  return h;
}

Matrix transition_composite(const DegreewiseComplexModel& m, int spot, int degree, int a, int b) {
  Matrix t = Matrix::identity(m.field(), m.dim(spot, degree, a));
  for (int l = a; l < b; ++l) t = m.trans(spot, degree, l) * t;
  return t;
}

HomologyCell colimit_homology(const DegreewiseComplexModel& m, int spot, int degree, int margin) {
  HomologyCell out;
  out.spot = spot;
  out.degree = degree;
  const int lmax = m.level_max();
  std::vector<LevelHomology> lh;
  lh.reserve(lmax);
  for (int l = 1; l <= lmax; ++l) lh.push_back(homology_at(m, spot, degree, l));
  for (const auto& h : lh) out.level_dims.push_back(h.dim);

  auto image_rank = [&](int l) {
    Matrix phi = transition_composite(m, spot, degree, l, l + margin) * lh[l - 1].kernel;
    return rank_modulo(phi, lh[l + margin - 1].boundary);
  };
  for (int l = 1; l + margin <= lmax; ++l) out.image_ranks.push_back(image_rank(l));

  /* Stable once the plain dimensions and the margin-forward image ranks sit
     on a common plateau reaching the end of the measured range; a leading
     plateau that later rises is not stabilization. */
  const int rmax = lmax - margin;
  int found = 0;
  for (int cand = 1; cand <= rmax && !found; ++cand) {
    bool ok = true;
    for (int l = cand; l <= lmax && ok; ++l) ok = lh[l - 1].dim == lh[cand - 1].dim;
    for (int l = cand; l <= rmax && ok; ++l) ok = out.image_ranks[l - 1] == lh[cand - 1].dim;
    if (ok) found = cand;
  }

  if (found) {
    out.stable = true;
    out.level = found;
    out.dim = lh[found - 1].dim;
    /* Greedy kernel columns independent modulo boundaries. */
    const LevelHomology& h = lh[found - 1];
    Matrix chosen(m.field(), h.kernel.rows(), 0);
    const auto& labels = m.labels(spot, degree, found);
    for (int c = 0; c < h.kernel.cols() && chosen.cols() < out.dim; ++c) {
      Matrix col(m.field(), h.kernel.rows(), 1);
      for (int r = 0; r < h.kernel.rows(); ++r) col.at(r, 0) = h.kernel.at(r, c);
      Matrix trial = chosen.hcat(col);
      if (rank_modulo(trial, h.boundary) > rank_modulo(chosen, h.boundary)) {
        chosen = std::move(trial);
        std::string s;
        for (int r = 0; r < h.kernel.rows(); ++r) {
          const Scalar& v = h.kernel.at(r, c);
          if (v.is_zero()) continue;
          std::string cs = v.to_string();
          if (!s.empty()) s += " + ";
          s += (cs == "1" ? "" : cs + "*") + labels[r];
        }
        out.representatives.push_back(s.empty() ? "0" : s);
      }
    }
  } else {
    out.stable = false;
    out.level = lmax;
    out.dim = lh[lmax - 1].dim;
  }
  return out;
}

HomologyTable homology_table(const DegreewiseComplexModel& m, int margin) {
  HomologyTable t;
  for (int k = 0; k < m.spots(); ++k)
    for (int d = m.window().first; d <= m.window().second; ++d)
      t[{k, d}] = colimit_homology(m, k, d, margin);
  return t;
}

void ModelMorphism::set(int spot, int degree, int level, Matrix m) {
  mats_[{spot, degree, level}] = std::move(m);
}

Matrix ModelMorphism::at(const DegreewiseComplexModel& src, const DegreewiseComplexModel& tgt,
                         int spot, int degree, int level) const {
  auto it = mats_.find({spot, degree, level});
  if (it != mats_.end()) return it->second;
  return Matrix(src.field(), tgt.dim(spot, degree, level), src.dim(spot, degree, level));
}

std::size_t ModelMorphism::verify(const DegreewiseComplexModel& src,
                                  const DegreewiseComplexModel& tgt) const {
  if (src.window() != tgt.window() || src.level_max() != tgt.level_max())
    throw std::invalid_argument("morphism endpoints have different shapes");
  std::size_t checked = 0;
  int spots = std::max(src.spots(), tgt.spots());
  for (int k = 0; k < spots; ++k) {
    for (int d = src.window().first; d <= src.window().second; ++d) {
      for (int l = 1; l <= src.level_max(); ++l) {
        Matrix lhs = at(src, tgt, k + 1, d, l) * src.diff(k, d, l);
        Matrix rhs = tgt.diff(k, d, l) * at(src, tgt, k, d, l);
        if (!(lhs == rhs))
          throw std::logic_error("morphism does not commute with differentials at " + cell_name(k, d, l));
        ++checked;
        if (l < src.level_max()) {
          Matrix lt = at(src, tgt, k, d, l + 1) * src.trans(k, d, l);
          Matrix rt = tgt.trans(k, d, l) * at(src, tgt, k, d, l);
          if (!(lt == rt))
            throw std::logic_error("morphism does not commute with transitions at " + cell_name(k, d, l));
          ++checked;
        }
      }
    }
  }
  return checked;
}

InducedCellResult induced_on_colimit(const DegreewiseComplexModel& src,
                                     const DegreewiseComplexModel& tgt, const ModelMorphism& phi,
                                     int spot, int degree, int margin) {
  InducedCellResult res;
  res.src = colimit_homology(src, spot, degree, margin);
  res.tgt = colimit_homology(tgt, spot, degree, margin);
  if (!res.src.stable || !res.tgt.stable) return res;
  int beta = std::max(res.src.level, res.tgt.level);
  int lambda = beta + margin;
  LevelHomology hs = homology_at(src, spot, degree, beta);
  LevelHomology ht = homology_at(tgt, spot, degree, lambda);
  Matrix carried = transition_composite(tgt, spot, degree, beta, lambda) *
                   phi.at(src, tgt, spot, degree, beta) * hs.kernel;
  res.rank = rank_modulo(carried, ht.boundary);
  res.conclusive = true;
  res.injective = res.rank == res.src.dim;
  res.surjective = res.rank == res.tgt.dim;
  res.iso = res.injective && res.surjective;
  return res;
}

SesExactnessReport ses_exactness_report(const DegreewiseComplexModel& a,
                                        const DegreewiseComplexModel& b,
                                        const DegreewiseComplexModel& c, const ModelMorphism& ab,
                                        const ModelMorphism& bc, int margin) {
  SesExactnessReport rep;
  rep.conclusive = true;
  rep.all_exact = true;
  int spots = std::max(a.spots(), std::max(b.spots(), c.spots()));
  for (int k = 0; k < spots; ++k) {
    for (int d = a.window().first; d <= a.window().second; ++d) {
      DegreewiseComplexModel mini(a.field(), 3, {d, d}, a.level_max());
      for (int l = 1; l <= a.level_max(); ++l) {
        mini.set_cell(0, d, l, a.labels(k, d, l));
        mini.set_cell(1, d, l, b.labels(k, d, l));
        mini.set_cell(2, d, l, c.labels(k, d, l));
      }
      for (int l = 1; l <= a.level_max(); ++l) {
        mini.set_diff(0, d, l, ab.at(a, b, k, d, l));
        mini.set_diff(1, d, l, bc.at(b, c, k, d, l));
        if (l < a.level_max()) {
          mini.set_trans(0, d, l, a.trans(k, d, l));
          mini.set_trans(1, d, l, b.trans(k, d, l));
          mini.set_trans(2, d, l, c.trans(k, d, l));
        }
      }
      SesSpotVerdict v;
      v.spot = k;
      v.degree = d;
      for (int pos = 0; pos < 3; ++pos) v.h[pos] = colimit_homology(mini, pos, d, margin);
      v.conclusive = v.h[0].stable && v.h[1].stable && v.h[2].stable;
      v.exact = v.conclusive && v.h[0].dim == 0 && v.h[1].dim == 0 && v.h[2].dim == 0;
      rep.conclusive = rep.conclusive && v.conclusive;
      rep.all_exact = rep.all_exact && v.exact;
      rep.cells.push_back(std::move(v));
    }
  }
  return rep;
}

}  // namespace gfcech
