#include "gfcech/cech.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gfcech {

namespace {

void subsets_of_size(int n, int k, int start, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    subsets_of_size(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

std::string denominator_label(const std::vector<Polynomial>& x, const std::vector<int>& s, int level) {
  std::string prod;
  for (int t : s) {
    if (!prod.empty()) prod += "*";
    bool atom = x[t].terms().size() == 1;
    prod += atom ? x[t].to_string() : "(" + x[t].to_string() + ")";
  }
  return "(" + prod + ")^" + std::to_string(level);
}

}  // namespace

int CechComplex::subset_weight(const std::vector<int>& s) const {
  int w = 0;
  for (int t : s) w += *sequence[t].homogeneous_degree();
  return w;
}

int CechComplex::block_offset(int k, int si, int d, int level) const {
  int off = 0;
  for (int b = 0; b < si; ++b) off += summand_piece(k, b, d, level).dim();
  return off;
}

GradedPieceBasis CechComplex::summand_piece(int k, int si, int d, int level) const {
  return m.piece(d + level * subset_weight(subsets[k][si]));
}

CechComplex build_cech(std::vector<Polynomial> x, GradedModule m, std::pair<int, int> window,
                       int level_max, GroebnerOptions opts) {
  static_cast<void>(opts);
  for (const auto& p : x) {
    if (p.is_zero()) throw std::invalid_argument("sequence entries must be nonzero");
    if (!p.is_homogeneous()) throw std::invalid_argument("sequence entry not homogeneous: " + p.to_string());
    if (!p.ring().compatible(m.ring())) throw std::invalid_argument("sequence entry from a different ring");
  }
  if (window.first > window.second) throw std::invalid_argument("empty degree window");
  if (level_max < 1) throw std::invalid_argument("level bound must be positive");

  const int n = static_cast<int>(x.size());
  CechComplex c{std::move(m), std::move(x), window, level_max, {}, {}};
  c.subsets.resize(n + 1);
  for (int k = 0; k <= n; ++k) {
    std::vector<int> cur;
    subsets_of_size(n, k, 0, cur, c.subsets[k]);
  }

  const Field& field = c.m.ring().field();
  c.grid = DegreewiseComplexModel(field, n + 1, window, level_max);
  Scalar one = Scalar::one(field);

  std::map<std::pair<int, std::vector<int>>, int> subset_index;
  for (int k = 0; k <= n; ++k)
    for (std::size_t si = 0; si < c.subsets[k].size(); ++si)
      subset_index[{k, c.subsets[k][si]}] = static_cast<int>(si);

  for (int d = window.first; d <= window.second; ++d) {
    for (int l = 1; l <= level_max; ++l) {
      for (int k = 0; k <= n; ++k) {
        std::vector<std::string> labels;
        for (std::size_t si = 0; si < c.subsets[k].size(); ++si) {
          GradedPieceBasis p = c.summand_piece(k, static_cast<int>(si), d, l);
          for (const auto& [comp, mono] : p.monomials) {
            std::string lab = c.m.label(comp, mono);
            if (k > 0) lab += "/" + denominator_label(c.sequence, c.subsets[k][si], l);
            labels.push_back(std::move(lab));
          }
        }
        c.grid.set_cell(k, d, l, std::move(labels));
      }
    }
  }

  for (int d = window.first; d <= window.second; ++d) {
    for (int l = 1; l <= level_max; ++l) {
      for (int k = 0; k <= n; ++k) {
        if (k < n) {
          Matrix diff(field, c.grid.dim(k + 1, d, l), c.grid.dim(k, d, l));
          for (std::size_t si = 0; si < c.subsets[k].size(); ++si) {
            const auto& s = c.subsets[k][si];
            int src_off = c.block_offset(k, static_cast<int>(si), d, l);
            GradedPieceBasis sp = c.summand_piece(k, static_cast<int>(si), d, l);
            for (int j = 0; j < n; ++j) {
              if (std::find(s.begin(), s.end(), j) != s.end()) continue;
              std::vector<int> s2 = s;
              auto pos_it = std::lower_bound(s2.begin(), s2.end(), j);
              int pos = static_cast<int>(pos_it - s2.begin());
              s2.insert(pos_it, j);
              int ti = subset_index.at({k + 1, s2});
              int tgt_off = c.block_offset(k + 1, ti, d, l);
              GradedPieceBasis tp = c.summand_piece(k + 1, ti, d, l);
              Scalar sign = pos % 2 == 0 ? one : -one;
              Matrix block = mult_matrix(c.m, sp.degree, c.m, tp.degree, c.sequence[j].pow(l), sign);
              for (int r = 0; r < block.rows(); ++r)
                for (int cc = 0; cc < block.cols(); ++cc)
                  diff.at(tgt_off + r, src_off + cc) = block.at(r, cc);
            }
          }
          c.grid.set_diff(k, d, l, std::move(diff));
        }
        if (l < level_max) {
          Matrix tr(field, c.grid.dim(k, d, l + 1), c.grid.dim(k, d, l));
          for (std::size_t si = 0; si < c.subsets[k].size(); ++si) {
            int src_off = c.block_offset(k, static_cast<int>(si), d, l);
            int tgt_off = c.block_offset(k, static_cast<int>(si), d, l + 1);
            GradedPieceBasis sp = c.summand_piece(k, static_cast<int>(si), d, l);
            GradedPieceBasis tp = c.summand_piece(k, static_cast<int>(si), d, l + 1);
            Polynomial prod = c.m.ring().one();
            for (int t : c.subsets[k][si]) prod = prod * c.sequence[t];
            Matrix block = mult_matrix(c.m, sp.degree, c.m, tp.degree, prod, one);
            for (int r = 0; r < block.rows(); ++r)
              for (int cc = 0; cc < block.cols(); ++cc)
                tr.at(tgt_off + r, src_off + cc) = block.at(r, cc);
          }
          c.grid.set_trans(k, d, l, std::move(tr));
        }
      }
    }
  }

  c.grid.verify_identities();
  return c;
}

HomologyTable local_cohomology(const std::vector<Polynomial>& x, const GradedModule& m,
                               std::pair<int, int> window, int level_max, int margin,
                               GroebnerOptions opts) {
  CechComplex c = build_cech(x, m, window, level_max, opts);
  return homology_table(c.grid, margin);
}

IndependenceReport generator_independence_check(const std::vector<Polynomial>& x1,
                                                const std::vector<Polynomial>& x2,
                                                const GradedModule& m, std::pair<int, int> window,
                                                int level_max, int margin, GroebnerOptions opts) {
  FreeModule f1{m.ring(), {0}};
  auto as_ideal = [&](const std::vector<Polynomial>& gens) {
    std::vector<FreeVector> vecs;
    for (const auto& g : gens) vecs.push_back(FreeVector(f1, {g}));
    return SubmoduleBasis(f1, std::move(vecs), opts);
  };
  if (!as_ideal(x1).equals(as_ideal(x2)))
    throw std::invalid_argument("the two sequences generate different ideals");

  IndependenceReport rep;
  rep.first = local_cohomology(x1, m, window, level_max, margin, opts);
  rep.second = local_cohomology(x2, m, window, level_max, margin, opts);
  rep.conclusive = true;
  rep.agree = true;
  int spots = static_cast<int>(std::max(x1.size(), x2.size())) + 1;
  for (int k = 0; k < spots; ++k) {
    for (int d = window.first; d <= window.second; ++d) {
      auto read = [&](const HomologyTable& t) {
        auto it = t.find({k, d});
        if (it == t.end()) return std::pair<bool, int>{true, 0};
        return std::pair<bool, int>{it->second.stable, it->second.dim};
      };
      auto [st1, d1] = read(rep.first);
      auto [st2, d2] = read(rep.second);
      if (!st1 || !st2) {
        rep.conclusive = false;
        rep.mismatches.push_back("H^" + std::to_string(k) + " degree " + std::to_string(d) +
                                 ": not stabilized");
        continue;
      }
      if (d1 != d2) {
        rep.agree = false;
        rep.mismatches.push_back("H^" + std::to_string(k) + " degree " + std::to_string(d) + ": " +
                                 std::to_string(d1) + " vs " + std::to_string(d2));
      }
    }
  }
  rep.agree = rep.agree && rep.conclusive;
  return rep;
}

}  // namespace gfcech
