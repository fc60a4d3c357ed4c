#include "gfcech/comparison.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <utility>

namespace gfcech {

namespace {

std::vector<Scalar> apply_mat(const Matrix& a, const std::vector<Scalar>& v) {
  if (static_cast<int>(v.size()) != a.cols()) throw std::logic_error("vector length mismatch");
  std::vector<Scalar> out(a.rows(), Scalar::zero(a.field()));
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out[r] = out[r] + a.at(r, c) * v[c];
  return out;
}

bool all_zero(const std::vector<Scalar>& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Matrix column_of(const Matrix& m, int c) {
  Matrix col(m.field(), m.rows(), 1);
  for (int r = 0; r < m.rows(); ++r) col.at(r, 0) = m.at(r, c);
  return col;
}

std::vector<Scalar> column_vec(const Matrix& m, int c) {
  std::vector<Scalar> v;
  v.reserve(m.rows());
  for (int r = 0; r < m.rows(); ++r) v.push_back(m.at(r, c));
  return v;
}

/* The same greedy choice colimit_homology uses for its representatives, but
   returning coordinate vectors at the stable level. */
std::vector<std::vector<Scalar>> stable_class_columns(const DegreewiseComplexModel& m, int spot,
                                                      int degree, const HomologyCell& cell) {
  std::vector<std::vector<Scalar>> out;
  if (!cell.stable || cell.dim == 0) return out;
  LevelHomology h = homology_at(m, spot, degree, cell.level);
  Matrix chosen(m.field(), h.kernel.rows(), 0);
  for (int c = 0; c < h.kernel.cols() && static_cast<int>(out.size()) < cell.dim; ++c) {
    Matrix trial = chosen.hcat(column_of(h.kernel, c));
    if (rank_modulo(trial, h.boundary) > rank_modulo(chosen, h.boundary)) {
      chosen = std::move(trial);
      out.push_back(column_vec(h.kernel, c));
    }
  }
  return out;
}

std::string numerator_str(const FreeVector& v) {
  if (v.rank() == 1) return v.comp(0).to_string();
  return v.to_string();
}

std::string power_str(const Polynomial& p, int e) {
  if (e == 0) return "1";
  bool atom = p.terms().size() == 1;
  std::string base = atom ? p.to_string() : "(" + p.to_string() + ")";
  return e == 1 ? base : base + "^" + std::to_string(e);
}

CellVerdict classify(const InducedCellResult& ind) {
  if (!ind.conclusive) return CellVerdict::inconclusive;
  return ind.iso ? CellVerdict::iso : CellVerdict::not_iso;
}

void check_same_shape(const CechComplex& cech, const GenfracComplex& gf) {
  if (cech.window != gf.window || cech.level_max != gf.level_max)
    throw std::invalid_argument("the two models were built on different windows or level bounds");
  if (cech.sequence.size() != gf.sequence.size())
    throw std::invalid_argument("the two models were built on different sequences");
  for (std::size_t i = 0; i < cech.sequence.size(); ++i)
    if (!(cech.sequence[i] == gf.sequence[i]))
      throw std::invalid_argument("the two models were built on different sequences");
}

}  // namespace

GeneralizedFraction theta(const GenfracContext& ctx, int k, const std::vector<int>& subset,
                          const FreeVector& numerator, int level) {
  if (k < 1 || k > ctx.n()) throw std::invalid_argument("spot must lie in 1..n");
  if (static_cast<int>(subset.size()) != k)
    throw std::invalid_argument("subset size must equal the spot");
  if (level < 1) throw std::invalid_argument("level must be positive");
  int prev = 0;
  for (int s : subset) {
    if (s <= prev || s > ctx.n())
      throw std::invalid_argument("subset entries must be increasing and lie in 1..n");
    prev = s;
  }
  TriangularDenominator den = validate_denominator(k, std::vector<int>(k, level));
  for (int t = 0; t < k; ++t)
    if (subset[t] != t + 1) return {ctx.module().ambient().zero(), den};
  return {numerator, den};
}

ModelMorphism build_theta(const CechComplex& cech, const GenfracComplex& gf) {
  check_same_shape(cech, gf);
  const int n = static_cast<int>(cech.sequence.size());
  const Field& field = cech.m.ring().field();
  const Scalar one = Scalar::one(field);
  ModelMorphism th;
  for (int d = cech.window.first; d <= cech.window.second; ++d) {
    for (int l = 1; l <= cech.level_max; ++l) {
      int d0 = cech.grid.dim(0, d, l);
      if (d0 > 0) th.set(0, d, l, Matrix::identity(field, d0));
      for (int k = 1; k <= n; ++k) {
        int rows = gf.grid.dim(k, d, l);
        int cols = cech.grid.dim(k, d, l);
        if (rows == 0 || cols == 0) continue;
        /* Only the leading prefix subset contributes; it is lexicographically
           first, so its block starts at column 0. */
        GradedPieceBasis sp = cech.summand_piece(k, 0, d, l);
        int off = cech.block_offset(k, 0, d, l);
        const GradedModule& q = gf.level_module(k, l);
        Matrix block =
            mult_matrix(cech.m, sp.degree, q, d + l * gf.spot_weight[k], cech.m.ring().one(), one);
        Matrix mat(field, rows, cols);
        for (int r = 0; r < block.rows(); ++r)
          for (int c = 0; c < block.cols(); ++c) mat.at(r, off + c) = block.at(r, c);
        th.set(k, d, l, std::move(mat));
      }
    }
  }
  th.verify(cech.grid, gf.grid);
  return th;
}

QuasiIsoReport verify_quasi_isomorphism(const std::vector<Polynomial>& x, const GradedModule& m,
                                        std::pair<int, int> window, int level_max, int margin,
                                        const std::vector<Polynomial>& a, GroebnerOptions opts) {
  const std::vector<Polynomial>& ideal = a.empty() ? x : a;
  GenfracContext ctx(m, x, opts);
  CechComplex cech = build_cech(x, m, window, level_max, opts);
  GenfracComplex gf = build_genfrac_complex(ctx, window, level_max);
  ModelMorphism th = build_theta(cech, gf);

  QuasiIsoReport rep;
  rep.identities_checked = th.verify(cech.grid, gf.grid);
  rep.hypothesis = is_filter_regular(x, m, ideal, opts);
  rep.hypothesis_met = rep.hypothesis.verdict;

  bool any_bad = false, any_open = false;
  const int n = static_cast<int>(x.size());
  for (int k = 0; k <= n; ++k) {
    for (int d = window.first; d <= window.second; ++d) {
      ComparisonCell cell;
      cell.spot = k;
      cell.degree = d;
      cell.induced = induced_on_colimit(cech.grid, gf.grid, th, k, d, margin);
      cell.verdict = classify(cell.induced);
      any_bad = any_bad || cell.verdict == CellVerdict::not_iso;
      any_open = any_open || cell.verdict == CellVerdict::inconclusive;
      rep.cells.push_back(std::move(cell));
    }
  }
  rep.global = any_bad ? CellVerdict::not_iso
                       : (any_open ? CellVerdict::inconclusive : CellVerdict::iso);
  return rep;
}

TopIsoReport top_homology_iso_check(const std::vector<Polynomial>& x, const GradedModule& m,
                                    std::pair<int, int> window, int level_max, int margin,
                                    GroebnerOptions opts) {
  GenfracContext ctx(m, x, opts);
  CechComplex cech = build_cech(x, m, window, level_max, opts);
  GenfracComplex gf = build_genfrac_complex(ctx, window, level_max);
  ModelMorphism th = build_theta(cech, gf);
  const int n = static_cast<int>(x.size());

  TopIsoReport rep;
  rep.conclusive = true;
  rep.all_iso = true;
  for (int d = window.first; d <= window.second; ++d) {
    TopIsoCell tc;
    tc.cell.spot = n;
    tc.cell.degree = d;
    tc.cell.induced = induced_on_colimit(cech.grid, gf.grid, th, n, d, margin);
    tc.cell.verdict = classify(tc.cell.induced);
    if (tc.cell.induced.conclusive) {
      int beta = std::max(tc.cell.induced.src.level, tc.cell.induced.tgt.level);
      int lambda = beta + margin;
      LevelHomology hs = homology_at(cech.grid, n, d, beta);
      LevelHomology ht = homology_at(gf.grid, n, d, lambda);
      Matrix carried = transition_composite(gf.grid, n, d, beta, lambda) *
                       th.at(cech.grid, gf.grid, n, d, beta) * hs.kernel;
      tc.surjective_checked =
          rank(carried.hcat(ht.boundary)) == rank(ht.kernel.hcat(ht.boundary));
    }
    rep.conclusive = rep.conclusive && tc.cell.induced.conclusive;
    rep.all_iso = rep.all_iso && tc.cell.verdict == CellVerdict::iso;
    rep.cells.push_back(std::move(tc));
  }
  return rep;
}

TwoElementReport two_element_case(const std::vector<Polynomial>& x, const GradedModule& m,
                                  std::pair<int, int> window, int level_max, int margin,
                                  const std::vector<Polynomial>& a, GroebnerOptions opts) {
  if (x.size() != 2) throw std::invalid_argument("the sequence must have exactly two entries");
  const std::vector<Polynomial>& ideal = a.empty() ? x : a;
  GenfracContext ctx(m, x, opts);
  CechComplex cech = build_cech(x, m, window, level_max, opts);
  GenfracComplex gf = build_genfrac_complex(ctx, window, level_max);
  ModelMorphism th = build_theta(cech, gf);
  const Field& field = m.ring().field();

  TwoElementReport rep;
  rep.hypothesis = is_filter_regular(x, m, ideal, opts);
  rep.hypothesis_met = rep.hypothesis.verdict;
  rep.conclusive = true;
  rep.all_iso = true;
  for (int k = 0; k <= 2; ++k) {
    for (int d = window.first; d <= window.second; ++d) {
      ComparisonCell cell;
      cell.spot = k;
      cell.degree = d;
      cell.induced = induced_on_colimit(cech.grid, gf.grid, th, k, d, margin);
      cell.verdict = classify(cell.induced);
      rep.conclusive = rep.conclusive && cell.induced.conclusive;
      rep.all_iso = rep.all_iso && cell.verdict == CellVerdict::iso;
      rep.cells.push_back(std::move(cell));
    }
  }

  for (const ComparisonCell& cell : rep.cells) {
    if (cell.spot != 1) continue;
    const int d = cell.degree;
    const InducedCellResult& ind = cell.induced;

    /* Preimage certificates: each stable target class a/(x1^l*) has a cycle
       partner Y = (a/x1^l*, b/x2^l'') once its level-raised image clears the
       denominator span; b is read off the membership cofactors. */
    if (ind.tgt.stable && ind.tgt.dim > 0) {
      int dstar = ind.tgt.level;
      const GradedModule& q1 = gf.level_module(1, dstar);
      GradedPieceBasis tp = q1.piece(d + dstar * gf.spot_weight[1]);
      for (const auto& z : stable_class_columns(gf.grid, 1, d, ind.tgt)) {
        SurjectivityCertificate sc;
        sc.degree = d;
        sc.level_star = dstar;
        FreeVector av = q1.from_coords(tp, z);
        sc.target_fraction =
            render_fraction(ctx, {av, validate_denominator(1, {dstar})});
        GfZeroResult zr =
            gf_is_zero(ctx, {av, validate_denominator(2, {dstar, 0})}, level_max);
        if (zr.status != GfZeroStatus::zero || !zr.certificate) {
          rep.surjectivity.push_back(std::move(sc));
          continue;
        }
        const GfZeroCertificate& cert = *zr.certificate;
        sc.level_clear = cert.level;
        FreeVector bv = m.ambient().zero();
        for (std::size_t t = 0; t < cert.power_generator_count; ++t)
          bv = bv + m.ambient().basis_vector(static_cast<int>(t)).mul(cert.witness.gen_cofactors[t]);
        sc.preimage = "(" + numerator_str(av) + " / " + power_str(ctx.entry(1), dstar) + ", " +
                      numerator_str(bv) + " / " + power_str(ctx.entry(2), cert.level) + ")";
        int lam = cert.level;
        if (lam <= level_max) {
          FreeVector u = av.mul(ctx.entry(1).pow(lam - dstar));
          GradedPieceBasis p0 = cech.summand_piece(1, 0, d, lam);
          GradedPieceBasis p1 = cech.summand_piece(1, 1, d, lam);
          std::vector<Scalar> y(cech.grid.dim(1, d, lam), Scalar::zero(field));
          std::vector<Scalar> cu = m.coords(p0, u);
          std::vector<Scalar> cb = m.coords(p1, bv);
          int off0 = cech.block_offset(1, 0, d, lam);
          int off1 = cech.block_offset(1, 1, d, lam);
          for (std::size_t i = 0; i < cu.size(); ++i) y[off0 + i] = cu[i];
          for (std::size_t i = 0; i < cb.size(); ++i) y[off1 + i] = cb[i];
          sc.cycle_verified = all_zero(apply_mat(cech.grid.diff(1, d, lam), y));
          std::vector<Scalar> lhs = apply_mat(th.at(cech.grid, gf.grid, 1, d, lam), y);
          std::vector<Scalar> rhs = apply_mat(transition_composite(gf.grid, 1, d, dstar, lam), z);
          sc.preimage_verified = lhs == rhs;
        }
        rep.surjectivity.push_back(std::move(sc));
      }
    }

    /* Killed-cycle certificates: combinations of source classes sent into the
       boundaries of the target, each with boundary data for its image. */
    if (ind.conclusive && !ind.injective) {
      int beta = std::max(ind.src.level, ind.tgt.level);
      int lam = beta + margin;
      LevelHomology hs = homology_at(cech.grid, 1, d, beta);
      LevelHomology ht = homology_at(gf.grid, 1, d, lam);
      Matrix phi_b = th.at(cech.grid, gf.grid, 1, d, beta);
      Matrix carried = transition_composite(gf.grid, 1, d, beta, lam) * phi_b * hs.kernel;
      Matrix nullsp = kernel_basis(carried.hcat(ht.boundary));
      Matrix chosen(field, hs.kernel.rows(), 0);
      GradedPieceBasis p0 = cech.summand_piece(1, 0, d, beta);
      GradedPieceBasis p1 = cech.summand_piece(1, 1, d, beta);
      int off0 = cech.block_offset(1, 0, d, beta);
      int off1 = cech.block_offset(1, 1, d, beta);
      for (int c = 0; c < nullsp.cols(); ++c) {
        Matrix coef(field, hs.kernel.cols(), 1);
        for (int r = 0; r < hs.kernel.cols(); ++r) coef.at(r, 0) = nullsp.at(r, c);
        Matrix cyc = hs.kernel * coef;
        if (cyc.is_zero()) continue;
        Matrix trial = chosen.hcat(cyc);
        if (rank_modulo(trial, hs.boundary) <= rank_modulo(chosen, hs.boundary)) continue;
        chosen = std::move(trial);

        InjectivityCertificate ic;
        ic.degree = d;
        std::vector<Scalar> c0(p0.dim(), Scalar::zero(field));
        std::vector<Scalar> c1(p1.dim(), Scalar::zero(field));
        for (int i = 0; i < p0.dim(); ++i) c0[i] = cyc.at(off0 + i, 0);
        for (int i = 0; i < p1.dim(); ++i) c1[i] = cyc.at(off1 + i, 0);
        FreeVector u = m.from_coords(p0, c0);
        FreeVector v = m.from_coords(p1, c1);
        ic.cycle = "(" + numerator_str(u) + " / " + power_str(ctx.entry(1), beta) + ", " +
                   numerator_str(v) + " / " + power_str(ctx.entry(2), beta) + ")";

        std::vector<Scalar> cyc_vec = column_vec(cyc, 0);
        for (int l2 = beta; l2 <= level_max && !ic.maps_to_zero; ++l2) {
          LevelHomology hg = homology_at(gf.grid, 1, d, l2);
          std::vector<Scalar> img =
              apply_mat(transition_composite(gf.grid, 1, d, beta, l2) * phi_b, cyc_vec);
          auto sol = solve_linear(hg.boundary, img);
          if (!sol) continue;
          ic.maps_to_zero = true;
          FreeVector bv = m.from_coords(m.piece(d), *sol);
          ic.boundary_preimage = numerator_str(bv);
          FreeVector cv = u.mul(ctx.entry(1).pow(l2 - beta)) - bv.mul(ctx.entry(1).pow(l2));
          for (int g = 0; g <= level_max; ++g) {
            if (m.is_zero_element(cv.mul(ctx.entry(1).pow(g)))) {
              ic.annihilator_power = g;
              break;
            }
          }
        }
        for (int l2 = beta; l2 <= level_max && !ic.is_boundary; ++l2) {
          LevelHomology hc = homology_at(cech.grid, 1, d, l2);
          std::vector<Scalar> img =
              apply_mat(transition_composite(cech.grid, 1, d, beta, l2), cyc_vec);
          if (solve_linear(hc.boundary, img)) ic.is_boundary = true;
        }
        rep.injectivity.push_back(std::move(ic));
      }
    }
  }
  return rep;
}

SesGfApplication apply_gf_to_ses(const GradedModule& a_mod, const GradedModule& b_mod,
                                 const GradedModule& c_mod, const std::vector<FreeVector>& inj,
                                 const std::vector<FreeVector>& sur, const std::vector<Polynomial>& x,
                                 std::pair<int, int> window, int level_max, int margin,
                                 GroebnerOptions opts) {
  if (x.empty()) throw std::invalid_argument("the sequence must be nonempty");
  if (!a_mod.ring().compatible(b_mod.ring()) || !b_mod.ring().compatible(c_mod.ring()))
    throw std::invalid_argument("the three modules live over incompatible rings");
  if (static_cast<int>(inj.size()) != a_mod.ambient().rank())
    throw std::invalid_argument("one image per ambient generator of the first module");
  if (static_cast<int>(sur.size()) != b_mod.ambient().rank())
    throw std::invalid_argument("one image per ambient generator of the middle module");

  SesGfApplication rep;
  rep.input_exact = true;
  for (int d = window.first; d <= window.second; ++d) {
    Matrix phi = map_matrix(a_mod, b_mod, inj, d);
    Matrix psi = map_matrix(b_mod, c_mod, sur, d);
    int da = a_mod.piece(d).dim();
    int db = b_mod.piece(d).dim();
    int dc = c_mod.piece(d).dim();
    int rp = rank(phi);
    int rs = rank(psi);
    auto fail = [&](const std::string& what) {
      rep.input_exact = false;
      rep.input_failures.push_back("degree " + std::to_string(d) + ": " + what);
    };
    if (!(psi * phi).is_zero()) fail("the composite map is nonzero");
    if (rp != da) fail("the first map is not injective");
    if (rs != dc) fail("the second map is not surjective");
    if (rp != db - rs) fail("image and kernel differ in the middle");
  }

  const int n = static_cast<int>(x.size());
  std::vector<Polynomial> head(x.begin(), x.end() - 1);
  rep.hypothesis = is_filter_regular(head, c_mod, x, opts);
  FreeModule f1{b_mod.ring(), {0}};
  std::vector<FreeVector> xgens;
  for (const auto& p : x) xgens.push_back(FreeVector(f1, {p}));
  SubmoduleBasis xideal(f1, std::move(xgens), opts);
  rep.last_entry_in_ideal = xideal.normal_form(FreeVector(f1, {x.back()})).is_zero();
  rep.hypothesis_met = rep.hypothesis.verdict && rep.last_entry_in_ideal;

  GenfracContext ctxa(a_mod, x, opts);
  GenfracContext ctxb(b_mod, x, opts);
  GenfracContext ctxc(c_mod, x, opts);
  GenfracComplex ga = build_genfrac_complex(ctxa, window, level_max);
  GenfracComplex gb = build_genfrac_complex(ctxb, window, level_max);
  GenfracComplex gc = build_genfrac_complex(ctxc, window, level_max);

  ModelMorphism ab, bc;
  for (int k = 0; k <= n; ++k) {
    for (int d = window.first; d <= window.second; ++d) {
      for (int l = 1; l <= level_max; ++l) {
        int deg = d + l * ga.spot_weight[k];
        if (ga.grid.dim(k, d, l) > 0)
          ab.set(k, d, l, map_matrix(ga.level_module(k, l), gb.level_module(k, l), inj, deg));
        if (gb.grid.dim(k, d, l) > 0)
          bc.set(k, d, l, map_matrix(gb.level_module(k, l), gc.level_module(k, l), sur, deg));
      }
    }
  }
  ab.verify(ga.grid, gb.grid);
  bc.verify(gb.grid, gc.grid);

  rep.colimit = ses_exactness_report(ga.grid, gb.grid, gc.grid, ab, bc, margin);
  rep.conclusive = rep.colimit.conclusive;
  bool top_conclusive = true;
  bool top_exact = true;
  for (const auto& v : rep.colimit.cells) {
    if (v.spot != n) continue;
    top_conclusive = top_conclusive && v.conclusive;
    top_exact = top_exact && v.exact;
  }
  rep.exact_at_top = top_conclusive && top_exact;
  return rep;
}

FreeResolution koszul_resolution(const Ring& ring, const std::vector<Polynomial>& f,
                                 GroebnerOptions opts) {
  std::vector<int> fdeg;
  for (const auto& p : f) {
    if (p.is_zero() || !p.is_homogeneous())
      throw std::invalid_argument("resolution entries must be nonzero homogeneous");
    fdeg.push_back(*p.homogeneous_degree());
  }
  const int c = static_cast<int>(f.size());
  const Field& field = ring.field();
  const Scalar one = Scalar::one(field);

  std::vector<std::vector<std::vector<int>>> subs(c + 1);
  std::function<void(int, int, std::vector<int>&)> rec = [&](int start, int left,
                                                             std::vector<int>& cur) {
    if (left == 0) {
      subs[cur.size()].push_back(cur);
      return;
    }
    for (int t = start; t <= c - left; ++t) {
      cur.push_back(t);
      rec(t + 1, left - 1, cur);
      cur.pop_back();
    }
  };
  for (int j = 0; j <= c; ++j) {
    std::vector<int> cur;
    rec(0, j, cur);
  }

  std::vector<FreeModule> modules;
  std::vector<std::map<std::vector<int>, int>> index(c + 1);
  for (int j = 0; j <= c; ++j) {
    std::vector<int> shifts;
    for (std::size_t si = 0; si < subs[j].size(); ++si) {
      int s = 0;
      for (int t : subs[j][si]) s += fdeg[t];
      shifts.push_back(s);
      index[j][subs[j][si]] = static_cast<int>(si);
    }
    modules.push_back(FreeModule{ring, std::move(shifts)});
  }

  std::vector<std::vector<FreeVector>> diffs(c + 1);
  for (int j = 1; j <= c; ++j) {
    for (const auto& s : subs[j]) {
      FreeVector img = modules[j - 1].zero();
      for (int p = 0; p < j; ++p) {
        std::vector<int> t = s;
        t.erase(t.begin() + p);
        Scalar sign = p % 2 == 0 ? one : -one;
        img = img + modules[j - 1].basis_vector(index[j - 1][t]).mul(f[s[p]]).scaled(sign);
      }
      diffs[j].push_back(std::move(img));
    }
  }
  for (int j = 2; j <= c; ++j) {
    for (const auto& img : diffs[j]) {
      FreeVector z = modules[j - 2].zero();
      for (int t = 0; t < img.rank(); ++t) z = z + diffs[j - 1][t].mul(img.comp(t));
      if (!z.is_zero()) throw std::logic_error("resolution differential does not square to zero");
    }
  }

  GradedModule target = GradedModule::cyclic(ring, f);
  if (c > 0) {
    SubmoduleBasis image(modules[0], diffs[1], opts);
    if (!equal_submodules(image, target.relations(), {}, opts))
      throw std::logic_error("resolution does not present its target");
  }
  return FreeResolution{std::move(modules), std::move(diffs), std::move(target)};
}

FreeResolution syzygy_resolution(const GradedModule& m, int max_length, GroebnerOptions opts) {
  if (max_length < 0) throw std::invalid_argument("length cap must be nonnegative");
  std::vector<FreeModule> modules{m.ambient()};
  std::vector<std::vector<FreeVector>> diffs{{}};
  std::vector<FreeVector> gens = m.relations().generators();
  while (!gens.empty()) {
    if (static_cast<int>(diffs.size()) > max_length)
      throw std::runtime_error("no finite free resolution within the length cap");
    SubmoduleBasis b(modules.back(), std::move(gens), opts);
    modules.push_back(b.syzygy_ambient());
    diffs.push_back(b.generators());
    gens = b.syzygy_generators();
  }
  return FreeResolution{std::move(modules), std::move(diffs), m};
}

TorReport tor_vanishing_check(const FreeResolution& res, const std::vector<Polynomial>& x,
                              int i_max, std::pair<int, int> window, int level_max, int margin,
                              GroebnerOptions opts) {
  if (x.empty()) throw std::invalid_argument("the sequence must be nonempty");
  if (i_max < 0) throw std::invalid_argument("i_max must be nonnegative");
  const Ring& ring = res.target.ring();
  GradedModule ring_mod = GradedModule::free_of(FreeModule{ring, {0}});
  if (!is_filter_regular(x, res.target, x, opts).verdict ||
      !is_filter_regular(x, ring_mod, x, opts).verdict)
    throw std::invalid_argument("the sequence must be filter-regular on the module and the ring");

  const int n = static_cast<int>(x.size());
  const int c = static_cast<int>(res.modules.size()) - 1;
  const Field& field = ring.field();
  const Scalar one = Scalar::one(field);
  int w = 0;
  for (const auto& p : x) w += *p.homogeneous_degree();
  Polynomial carrier = ring.one();
  for (const auto& p : x) carrier = carrier * p;
  auto head_powers = [&](int l) {
    std::vector<Polynomial> hp;
    for (int t = 0; t + 1 < n; ++t) hp.push_back(x[t].pow(l));
    return hp;
  };

  std::map<std::pair<int, int>, GradedModule> q;
  for (int j = 0; j <= c; ++j)
    for (int l = 1; l <= level_max; ++l)
      q.emplace(std::make_pair(j, l),
                GradedModule(res.modules[j],
                             ideal_multiples(res.modules[j], head_powers(l)), opts));

  DegreewiseComplexModel grid(field, c + 1, window, level_max);
  for (int s = 0; s <= c; ++s) {
    int j = c - s;
    for (int d = window.first; d <= window.second; ++d) {
      for (int l = 1; l <= level_max; ++l) {
        const GradedModule& qj = q.at({j, l});
        GradedPieceBasis p = qj.piece(d + l * w);
        std::vector<std::string> labels;
        for (const auto& [comp, mono] : p.monomials) labels.push_back(qj.label(comp, mono));
        grid.set_cell(s, d, l, std::move(labels));
      }
    }
  }
  for (int s = 0; s <= c; ++s) {
    int j = c - s;
    for (int d = window.first; d <= window.second; ++d) {
      for (int l = 1; l <= level_max; ++l) {
        const GradedModule& qj = q.at({j, l});
        if (j >= 1)
          grid.set_diff(s, d, l,
                        map_matrix(qj, q.at({j - 1, l}), res.diffs[j], d + l * w));
        if (l < level_max)
          grid.set_trans(s, d, l,
                         mult_matrix(qj, d + l * w, q.at({j, l + 1}), d + (l + 1) * w, carrier, one));
      }
    }
  }
  grid.verify_identities();
  HomologyTable table = homology_table(grid, margin);

  TorReport rep;
  rep.resolution_length = c;
  rep.i_max = i_max;
  for (int i = 0; i <= std::min(i_max, c); ++i) {
    for (int d = window.first; d <= window.second; ++d) {
      HomologyCell cell = table.at({c - i, d});
      cell.spot = i;
      rep.tor[{i, d}] = std::move(cell);
    }
  }

  DegreewiseComplexModel dgrid(field, 1, window, level_max);
  std::map<int, GradedModule> qm;
  for (int l = 1; l <= level_max; ++l)
    qm.emplace(l, res.target.quotient_by(
                      ideal_multiples(res.target.ambient(), head_powers(l))));
  for (int d = window.first; d <= window.second; ++d) {
    for (int l = 1; l <= level_max; ++l) {
      const GradedModule& ql = qm.at(l);
      GradedPieceBasis p = ql.piece(d + l * w);
      std::vector<std::string> labels;
      for (const auto& [comp, mono] : p.monomials) labels.push_back(ql.label(comp, mono));
      dgrid.set_cell(0, d, l, std::move(labels));
    }
    for (int l = 1; l + 1 <= level_max; ++l)
      dgrid.set_trans(0, d, l,
                      mult_matrix(qm.at(l), d + l * w, qm.at(l + 1), d + (l + 1) * w, carrier, one));
  }
  rep.direct_top = homology_table(dgrid, margin);

  rep.conclusive = true;
  bool matches = true;
  for (int d = window.first; d <= window.second; ++d) {
    const HomologyCell& t0 = rep.tor.at({0, d});
    const HomologyCell& dd = rep.direct_top.at({0, d});
    if (!t0.stable || !dd.stable)
      rep.conclusive = false;
    else
      matches = matches && t0.dim == dd.dim;
  }
  rep.tor0_matches = rep.conclusive && matches;

  /* Indices past the resolution length vanish with nothing to compute. */
  bool vanish = true;
  for (int i = 1; i <= std::min(i_max, c); ++i) {
    for (int d = window.first; d <= window.second; ++d) {
      const HomologyCell& cell = rep.tor.at({i, d});
      if (!cell.stable)
        rep.conclusive = false;
      else
        vanish = vanish && cell.dim == 0;
    }
  }
  rep.vanishing = rep.conclusive && vanish;
  return rep;
}

}  // namespace gfcech
