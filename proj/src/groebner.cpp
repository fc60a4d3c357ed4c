#include "gfcech/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gfcech {

namespace {

ModTerm lead_of(const FreeVector& v) {
  auto lt = v.leading_term();
  if (!lt) throw std::logic_error("leading term of zero vector");
  return *lt;
}

FreeVector term_vector(const FreeModule& mod, const ModTerm& t) {
  std::vector<Polynomial> comps(mod.rank(), mod.ring.zero());
  comps[t.comp] = mod.ring.monomial(t.mono, t.coeff);
  return FreeVector(mod, std::move(comps));
}

/* Full normal form against a list of monic basis elements; first divisor in
   list order wins, tails reduced. */
FreeVector reduce_full(FreeVector v, const std::vector<FreeVector>& basis,
                       const std::vector<ModTerm>& leads) {
  const FreeModule& mod = v.ambient();
  FreeVector rem = mod.zero();
  while (true) {
    auto lt = v.leading_term();
    if (!lt) break;
    bool reduced = false;
    for (std::size_t i = 0; i < basis.size(); ++i) {
      const ModTerm& bl = leads[i];
      if (bl.comp == lt->comp && mono_divides(bl.mono, lt->mono)) {
        v = v - basis[i].mul_term(mono_div(lt->mono, bl.mono), lt->coeff);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      FreeVector t = term_vector(mod, *lt);
      rem = rem + t;
      v = v - t;
    }
  }
  return rem;
}

struct PairKey {
  int degree;
  std::size_t i, j;
  bool operator<(const PairKey& o) const {
    if (degree != o.degree) return degree < o.degree;
    if (j != o.j) return j < o.j;
    return i < o.i;
  }
};

/* Buchberger with only same-component pairs (the product criterion is not
   valid for module positions), minimal then tail-reduced output, leads
   descending. */
std::vector<FreeVector> buchberger(const FreeModule& mod, const std::vector<FreeVector>& gens,
                                   const GroebnerOptions& opts) {
  std::vector<FreeVector> g;
  std::vector<ModTerm> leads;
  std::set<PairKey> pairs;
  const auto& w = mod.ring.weights();

  auto push = [&](FreeVector v) {
    ModTerm lt = lead_of(v);
    v = v.scaled(lt.coeff.inverse());
    lt.coeff = Scalar::one(mod.ring.field());
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (leads[i].comp != lt.comp) continue;
      PairKey k{weighted_degree(mono_lcm(leads[i].mono, lt.mono), w) + mod.shifts[lt.comp], i, g.size()};
      pairs.insert(k);
    }
    g.push_back(std::move(v));
    leads.push_back(std::move(lt));
  };

  for (const auto& gen : gens) {
    FreeVector r = reduce_full(gen, g, leads);
    if (!r.is_zero()) push(std::move(r));
  }

  std::size_t processed = 0;
  while (!pairs.empty()) {
    if (++processed > opts.max_pairs)
      throw std::runtime_error("groebner pair ceiling exceeded (" + std::to_string(opts.max_pairs) +
                               " pairs; ambient rank " + std::to_string(mod.rank()) + ", " +
                               std::to_string(g.size()) + " basis elements)");
    PairKey k = *pairs.begin();
    pairs.erase(pairs.begin());
    const ModTerm& a = leads[k.i];
    const ModTerm& b = leads[k.j];
    Expo lcm = mono_lcm(a.mono, b.mono);
    Scalar one = Scalar::one(mod.ring.field());
    FreeVector s = g[k.i].mul_term(mono_div(lcm, a.mono), one) - g[k.j].mul_term(mono_div(lcm, b.mono), one);
    FreeVector r = reduce_full(std::move(s), g, leads);
    if (!r.is_zero()) push(std::move(r));
  }

  /* Minimalize. */
  std::vector<bool> keep(g.size(), true);
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (leads[j].comp == leads[i].comp && mono_divides(leads[j].mono, leads[i].mono) &&
          !(j > i && leads[j].mono == leads[i].mono)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<FreeVector> min_g;
  std::vector<ModTerm> min_leads;
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (keep[i]) {
      min_g.push_back(g[i]);
      min_leads.push_back(leads[i]);
    }
  }

  /* Tail-reduce. */
  std::vector<FreeVector> out(min_g.size(), mod.zero());
  for (std::size_t i = 0; i < min_g.size(); ++i) {
    std::vector<FreeVector> others;
    std::vector<ModTerm> other_leads;
    for (std::size_t j = 0; j < min_g.size(); ++j) {
      if (j == i) continue;
      others.push_back(min_g[j]);
      other_leads.push_back(min_leads[j]);
    }
    out[i] = reduce_full(min_g[i], others, other_leads);
  }

  std::sort(out.begin(), out.end(), [&](const FreeVector& x, const FreeVector& y) {
    ModTerm lx = lead_of(x), ly = lead_of(y);
    return cmp_modterm(lx.comp, lx.mono, ly.comp, ly.mono, w) > 0;
  });
  return out;
}

std::vector<ModTerm> leads_of(const std::vector<FreeVector>& basis) {
  std::vector<ModTerm> r;
  r.reserve(basis.size());
  for (const auto& v : basis) r.push_back(lead_of(v));
  return r;
}

}  // namespace

SubmoduleBasis::SubmoduleBasis(FreeModule ambient, std::vector<FreeVector> gens, GroebnerOptions opts)
    : ambient_(std::move(ambient)), opts_(opts) {
  for (auto& v : gens) {
    if (v.is_zero()) continue;
    if (!v.ambient().compatible(ambient_)) throw std::invalid_argument("generator from a different ambient module");
    if (!v.is_homogeneous()) throw std::invalid_argument("generator not homogeneous: " + v.to_string());
    gens_.push_back(std::move(v));
  }

  const Ring& ring = ambient_.ring;
  const int r = ambient_.rank();
  const int s = static_cast<int>(gens_.size());
  const auto& defining = ring.defining();
  const int q = static_cast<int>(defining.size());

  std::vector<int> ext_shifts = ambient_.shifts;
  for (const auto& gvec : gens_) ext_shifts.push_back(*gvec.homogeneous_degree());
  for (int j = 0; j < q; ++j) {
    int dq = *defining[j].homogeneous_degree();
    for (int t = 0; t < r; ++t) ext_shifts.push_back(dq + ambient_.shifts[t]);
  }
  ext_ambient_ = FreeModule{ring, std::move(ext_shifts)};

  std::vector<FreeVector> lifted;
  lifted.reserve(s + q * r);
  auto lift = [&](const FreeVector& f_part, int tag) {
    std::vector<Polynomial> comps(ext_ambient_.rank(), ring.zero());
    for (int t = 0; t < r; ++t) comps[t] = f_part.comp(t);
    comps[r + tag] = ring.one();
    return FreeVector(ext_ambient_, std::move(comps));
  };
  for (int i = 0; i < s; ++i) lifted.push_back(lift(gens_[i], i));
  for (int j = 0; j < q; ++j) {
    for (int t = 0; t < r; ++t) {
      std::vector<Polynomial> f_comps(r, ring.zero());
      f_comps[t] = defining[j];
      lifted.push_back(lift(FreeVector(ambient_, std::move(f_comps)), s + j * r + t));
    }
  }

  ext_gb_ = buchberger(ext_ambient_, lifted, opts_);
  ext_leads_ = leads_of(ext_gb_);

  for (const auto& v : ext_gb_) {
    ModTerm lt = lead_of(v);
    if (lt.comp < r) {
      std::vector<Polynomial> comps;
      comps.reserve(r);
      for (int t = 0; t < r; ++t) comps.push_back(v.comp(t));
      gb_.push_back(FreeVector(ambient_, std::move(comps)));
    } else {
      /* A tag-region lead forces a zero F-part under the elimination order. */
      std::vector<Polynomial> comps;
      comps.reserve(s);
      bool user_zero = true;
      for (int i = 0; i < s; ++i) {
        comps.push_back(v.comp(r + i));
        user_zero = user_zero && comps.back().is_zero();
      }
      if (!user_zero) syzygies_.push_back(FreeVector(syzygy_ambient(), std::move(comps)));
    }
  }
  leads_ = leads_of(gb_);
}

FreeModule SubmoduleBasis::syzygy_ambient() const {
  std::vector<int> shifts;
  shifts.reserve(gens_.size());
  for (const auto& gvec : gens_) shifts.push_back(*gvec.homogeneous_degree());
  return FreeModule{ambient_.ring, std::move(shifts)};
}

FreeVector SubmoduleBasis::normal_form(const FreeVector& v) const {
  if (!v.ambient().compatible(ambient_)) throw std::invalid_argument("vector from a different ambient module");
  return reduce_full(v, gb_, leads_);
}

MembershipResult SubmoduleBasis::membership(const FreeVector& v) const {
  if (!v.ambient().compatible(ambient_)) throw std::invalid_argument("vector from a different ambient module");
  const Ring& ring = ambient_.ring;
  const int r = ambient_.rank();
  const int s = static_cast<int>(gens_.size());
  const int q = static_cast<int>(ring.defining().size());

  std::vector<Polynomial> comps(ext_ambient_.rank(), ring.zero());
  for (int t = 0; t < r; ++t) comps[t] = v.comp(t);
  FreeVector reduced = reduce_full(FreeVector(ext_ambient_, std::move(comps)), ext_gb_, ext_leads_);

  MembershipResult res;
  std::vector<Polynomial> f_comps;
  f_comps.reserve(r);
  for (int t = 0; t < r; ++t) f_comps.push_back(reduced.comp(t));
  res.normal_form = FreeVector(ambient_, std::move(f_comps));
  res.member = res.normal_form.is_zero();
  res.gen_cofactors.reserve(s);
  for (int i = 0; i < s; ++i) res.gen_cofactors.push_back(-reduced.comp(r + i));
  res.defining_cofactors.reserve(q);
  for (int j = 0; j < q; ++j) {
    std::vector<Polynomial> w_comps;
    w_comps.reserve(r);
    for (int t = 0; t < r; ++t) w_comps.push_back(-reduced.comp(r + s + j * r + t));
    res.defining_cofactors.push_back(FreeVector(ambient_, std::move(w_comps)));
  }
  return res;
}

bool SubmoduleBasis::contains(const SubmoduleBasis& other) const {
  for (const auto& gvec : other.gens_)
    if (!normal_form(gvec).is_zero()) return false;
  return true;
}

bool SubmoduleBasis::equals(const SubmoduleBasis& other) const {
  return contains(other) && other.contains(*this);
}

SubmoduleBasis colon(const SubmoduleBasis& n, const Polynomial& f,
                     const std::vector<FreeVector>& relations, GroebnerOptions opts) {
  return colon_by_ideal(n, {f}, relations, opts);
}

SubmoduleBasis colon_by_ideal(const SubmoduleBasis& n, const std::vector<Polynomial>& a,
                              const std::vector<FreeVector>& relations, GroebnerOptions opts) {
  const FreeModule& f_mod = n.ambient();
  const Ring& ring = f_mod.ring;
  const int r = f_mod.rank();

  std::vector<Polynomial> az;
  for (const auto& p : a) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) throw std::invalid_argument("colon by inhomogeneous element: " + p.to_string());
    az.push_back(p);
  }
  if (az.empty()) {
    std::vector<FreeVector> full;
    for (int t = 0; t < r; ++t) full.push_back(f_mod.basis_vector(t));
    return SubmoduleBasis(f_mod, std::move(full), opts);
  }
  const int k = static_cast<int>(az.size());

  std::vector<int> shifts;
  shifts.reserve(k * r);
  for (int j = 0; j < k; ++j) {
    int dj = *az[j].homogeneous_degree();
    for (int t = 0; t < r; ++t) shifts.push_back(f_mod.shifts[t] - dj);
  }
  FreeModule big{ring, std::move(shifts)};

  std::vector<FreeVector> gens;
  for (int t = 0; t < r; ++t) {
    std::vector<Polynomial> comps(k * r, ring.zero());
    for (int j = 0; j < k; ++j) comps[j * r + t] = az[j];
    gens.push_back(FreeVector(big, std::move(comps)));
  }
  std::vector<FreeVector> l_gens = n.generators();
  for (const auto& rel : relations) l_gens.push_back(rel);
  for (const auto& u : l_gens) {
    if (u.is_zero()) continue;
    for (int j = 0; j < k; ++j) {
      std::vector<Polynomial> comps(k * r, ring.zero());
      for (int t = 0; t < r; ++t) comps[j * r + t] = u.comp(t);
      gens.push_back(FreeVector(big, std::move(comps)));
    }
  }

  SubmoduleBasis sys(big, std::move(gens), opts);
  std::vector<FreeVector> result;
  for (const auto& syz : sys.syzygy_generators()) {
    std::vector<Polynomial> comps;
    comps.reserve(r);
    for (int t = 0; t < r; ++t) comps.push_back(syz.comp(t));
    FreeVector u(f_mod, std::move(comps));
    if (!u.is_zero()) result.push_back(std::move(u));
  }
  return SubmoduleBasis(f_mod, std::move(result), opts);
}

SubmoduleBasis saturate(const SubmoduleBasis& n, const std::vector<Polynomial>& a,
                        const std::vector<FreeVector>& relations, int* exponent_out,
                        GroebnerOptions opts) {
  SubmoduleBasis cur = n;
  int exponent = 0;
  while (true) {
    SubmoduleBasis next = colon_by_ideal(cur, a, relations, opts);
    if (equal_submodules(next, cur, relations, opts)) {
      if (exponent_out) *exponent_out = exponent;
      return cur;
    }
    cur = std::move(next);
    ++exponent;
  }
}

bool equal_submodules(const SubmoduleBasis& a, const SubmoduleBasis& b,
                      const std::vector<FreeVector>& relations, GroebnerOptions opts) {
  auto with_rels = [&](const SubmoduleBasis& s) {
    std::vector<FreeVector> gens = s.generators();
    for (const auto& rel : relations) gens.push_back(rel);
    return SubmoduleBasis(s.ambient(), std::move(gens), opts);
  };
  SubmoduleBasis ar = with_rels(a);
  SubmoduleBasis br = with_rels(b);
  return ar.contains(br) && br.contains(ar);
}

std::vector<Polynomial> ideal_groebner(const Ring& ring, const std::vector<Polynomial>& gens,
                                       GroebnerOptions opts) {
  FreeModule f1{ring, {0}};
  std::vector<FreeVector> vecs;
  for (const auto& g : gens) vecs.push_back(FreeVector(f1, {g}));
  SubmoduleBasis sb(f1, std::move(vecs), opts);
  std::vector<Polynomial> out;
  for (const auto& v : sb.groebner_basis()) out.push_back(v.comp(0));
  return out;
}

}  // namespace gfcech
