#include "gfcech/graded_module.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfcech {

namespace {

void enumerate_monomials(const std::vector<int>& weights, int var, int remaining, Expo& cur,
                         std::vector<Expo>& out) {
  if (var == static_cast<int>(weights.size())) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  if (var == static_cast<int>(weights.size()) - 1) {
    if (remaining % weights[var] == 0) {
      cur[var] = remaining / weights[var];
      out.push_back(cur);
      cur[var] = 0;
    }
    return;
  }
  for (int k = 0; k * weights[var] <= remaining; ++k) {
    cur[var] = k;
    enumerate_monomials(weights, var + 1, remaining - k * weights[var], cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Expo> monomials_of_degree(const std::vector<int>& weights, int degree) {
  std::vector<Expo> out;
  if (degree < 0) return out;
  Expo cur(weights.size(), 0);
  enumerate_monomials(weights, 0, degree, cur, out);
  return out;
}

GradedModule::GradedModule(FreeModule ambient, std::vector<FreeVector> relations, GroebnerOptions opts)
    : ambient_(ambient),
      rel_(std::make_shared<SubmoduleBasis>(std::move(ambient), std::move(relations), opts)) {}

GradedModule GradedModule::free_of(FreeModule ambient) { return GradedModule(std::move(ambient), {}); }

GradedModule GradedModule::cyclic(const Ring& ring, std::vector<Polynomial> ideal_gens) {
  FreeModule f1{ring, {0}};
  std::vector<FreeVector> rels;
  rels.reserve(ideal_gens.size());
  for (auto& g : ideal_gens) rels.push_back(FreeVector(f1, {std::move(g)}));
  return GradedModule(f1, std::move(rels));
}

GradedPieceBasis GradedModule::piece(int degree) const {
  GradedPieceBasis out;
  out.degree = degree;
  const auto& weights = ring().weights();
  const auto& leads = rel_->lead_terms();
  for (int t = 0; t < ambient_.rank(); ++t) {
    int mono_deg = degree - ambient_.shifts[t];
    if (mono_deg < 0) continue;
    std::vector<Expo> monos;
    Expo cur(weights.size(), 0);
    enumerate_monomials(weights, 0, mono_deg, cur, monos);
    for (auto& m : monos) {
      bool standard = true;
      for (const auto& lt : leads) {
        if (lt.comp == t && mono_divides(lt.mono, m)) {
          standard = false;
          break;
        }
      }
      if (standard) out.monomials.emplace_back(t, std::move(m));
    }
  }
  std::sort(out.monomials.begin(), out.monomials.end(), [&](const auto& a, const auto& b) {
    return cmp_modterm(a.first, a.second, b.first, b.second, weights) > 0;
  });
  return out;
}

std::vector<Scalar> GradedModule::coords(const GradedPieceBasis& piece, const FreeVector& v) const {
  FreeVector r = nf(v);
  std::vector<Scalar> c(piece.monomials.size(), Scalar::zero(ring().field()));
  for (int t = 0; t < r.rank(); ++t) {
    for (const auto& term : r.comp(t).terms()) {
      bool found = false;
      for (std::size_t i = 0; i < piece.monomials.size(); ++i) {
        if (piece.monomials[i].first == t && piece.monomials[i].second == term.mono) {
          c[i] = term.coeff;
          found = true;
          break;
        }
      }
      if (!found)
        throw std::logic_error("term outside the piece basis in degree " + std::to_string(piece.degree) +
                               ": " + label(t, term.mono));
    }
  }
  return c;
}

FreeVector GradedModule::from_coords(const GradedPieceBasis& piece, const std::vector<Scalar>& c) const {
  if (c.size() != piece.monomials.size()) throw std::invalid_argument("coordinate length mismatch");
  FreeVector v = ambient_.zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i].is_zero()) continue;
    std::vector<Polynomial> comps(ambient_.rank(), ring().zero());
    comps[piece.monomials[i].first] = ring().monomial(piece.monomials[i].second, c[i]);
    v = v + FreeVector(ambient_, std::move(comps));
  }
  return v;
}

GradedModule GradedModule::quotient_by(const std::vector<FreeVector>& extra) const {
  std::vector<FreeVector> rels = rel_->generators();
  rels.insert(rels.end(), extra.begin(), extra.end());
  return GradedModule(ambient_, std::move(rels));
}

std::string GradedModule::label(int comp, const Expo& mono) const {
  std::string s = monomial_to_string(mono, ring().vars());
  if (ambient_.rank() > 1) s += "*e" + std::to_string(comp + 1);
  return s;
}

std::vector<FreeVector> ideal_multiples(const FreeModule& mod, const std::vector<Polynomial>& polys) {
  std::vector<FreeVector> out;
  for (const auto& p : polys) {
    if (p.is_zero()) continue;
    for (int t = 0; t < mod.rank(); ++t) {
      std::vector<Polynomial> comps(mod.rank(), mod.ring.zero());
      comps[t] = p;
      out.push_back(FreeVector(mod, std::move(comps)));
    }
  }
  return out;
}

Matrix map_matrix(const GradedModule& src, const GradedModule& tgt,
                  const std::vector<FreeVector>& images, int degree) {
  if (static_cast<int>(images.size()) != src.ambient().rank())
    throw std::invalid_argument("one image per ambient generator required");
  for (int t = 0; t < src.ambient().rank(); ++t) {
    if (!images[t].is_homogeneous())
      throw std::invalid_argument("image of e" + std::to_string(t + 1) +
                                  " is not homogeneous: " + images[t].to_string());
    auto d = images[t].homogeneous_degree();
    if (d && *d != src.ambient().shifts[t])
      throw std::invalid_argument("image of e" + std::to_string(t + 1) + " shifts degree by " +
                                  std::to_string(*d - src.ambient().shifts[t]) + ": " +
                                  images[t].to_string());
  }
  GradedPieceBasis sp = src.piece(degree);
  GradedPieceBasis tp = tgt.piece(degree);
  Matrix m(src.ring().field(), tp.dim(), sp.dim());
  for (int j = 0; j < sp.dim(); ++j) {
    const auto& [comp, mono] = sp.monomials[j];
    FreeVector img = images[comp].mul_term(mono, Scalar::one(src.ring().field()));
    std::vector<Scalar> col = tgt.coords(tp, img);
    for (int i = 0; i < tp.dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

Matrix mult_matrix(const GradedModule& src, int src_degree, const GradedModule& tgt, int tgt_degree,
                   const Polynomial& f, const Scalar& scale) {
  GradedPieceBasis sp = src.piece(src_degree);
  GradedPieceBasis tp = tgt.piece(tgt_degree);
  Matrix m(src.ring().field(), tp.dim(), sp.dim());
  Polynomial g = f.scaled(scale);
  if (g.is_zero()) return m;
  if (!g.is_homogeneous() || *g.homogeneous_degree() != tgt_degree - src_degree)
    throw std::invalid_argument("multiplier degree mismatch: " + f.to_string());
  for (int j = 0; j < sp.dim(); ++j) {
    const auto& [comp, mono] = sp.monomials[j];
    std::vector<Polynomial> comps(src.ambient().rank(), src.ring().zero());
    comps[comp] = g.mul_term(mono, Scalar::one(src.ring().field()));
    std::vector<Scalar> col = tgt.coords(tp, FreeVector(src.ambient(), std::move(comps)));
    for (int i = 0; i < tp.dim(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

}  // namespace gfcech
