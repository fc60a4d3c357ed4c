#include "gfcech/genfrac.hpp"

#include <algorithm>
#include <stdexcept>

namespace gfcech {

namespace {

Polynomial full_power_multiplier(const GenfracContext& ctx, const GeneralizedFraction& f, int level) {
  Polynomial mult = ctx.module().ring().one();
  for (int t = 1; t <= f.den.arity; ++t) mult = mult * ctx.entry(t).pow(level - f.den.exponents[t - 1]);
  return mult;
}

std::vector<Polynomial> denominator_powers(const GenfracContext& ctx, int arity, int level) {
  std::vector<Polynomial> powers;
  for (int t = 1; t < arity; ++t) powers.push_back(ctx.entry(t).pow(level));
  return powers;
}

SubmoduleBasis power_span(const GenfracContext& ctx, const std::vector<Polynomial>& powers,
                          std::size_t* power_gen_count) {
  const FreeModule& f = ctx.module().ambient();
  std::vector<FreeVector> gens = ideal_multiples(f, powers);
  if (power_gen_count) *power_gen_count = gens.size();
  const auto& rels = ctx.module().relations().generators();
  gens.insert(gens.end(), rels.begin(), rels.end());
  return SubmoduleBasis(f, std::move(gens), ctx.options());
}

/* One-spot level system of the fraction's denominator shape: piece dimensions
   and transitions only, used by the stabilization side-check at the bound. */
DegreewiseComplexModel class_system(const GenfracContext& ctx, int arity, int degree, int level_max) {
  const Field& field = ctx.module().ring().field();
  DegreewiseComplexModel sys(field, 1, {degree, degree}, level_max);
  int w = 0;
  for (int t = 1; t <= arity; ++t) w += ctx.entry_degree(t);
  Polynomial carrier = ctx.module().ring().one();
  for (int t = 1; t <= arity; ++t) carrier = carrier * ctx.entry(t);
  std::vector<GradedModule> q;
  for (int l = 1; l <= level_max; ++l) {
    q.push_back(ctx.module().quotient_by(
        ideal_multiples(ctx.module().ambient(), denominator_powers(ctx, arity, l))));
    GradedPieceBasis p = q.back().piece(degree + l * w);
    std::vector<std::string> labels;
    for (const auto& [comp, mono] : p.monomials) labels.push_back(q.back().label(comp, mono));
    sys.set_cell(0, degree, l, std::move(labels));
  }
  for (int l = 1; l < level_max; ++l) {
    sys.set_trans(0, degree, l,
                  mult_matrix(q[l - 1], degree + l * w, q[l], degree + (l + 1) * w, carrier,
                              Scalar::one(field)));
  }
  return sys;
}

}  // namespace

TriangularDenominator validate_denominator(int arity, std::vector<int> exponents) {
  if (arity < 1) throw std::invalid_argument("denominator arity must be positive");
  if (static_cast<int>(exponents.size()) != arity)
    throw std::invalid_argument("denominator needs one exponent per position");
  bool tail = false;
  for (int e : exponents) {
    if (e < 0) throw std::invalid_argument("denominator exponents must be nonnegative");
    if (e == 0)
      tail = true;
    else if (tail)
      throw std::invalid_argument("denominator exponents must be a positive prefix followed by zeros");
  }
  return TriangularDenominator{arity, std::move(exponents)};
}

GenfracContext::GenfracContext(GradedModule m, std::vector<Polynomial> x, GroebnerOptions opts)
    : m_(std::move(m)), x_(std::move(x)), opts_(opts) {
  if (x_.empty()) throw std::invalid_argument("empty sequence");
  for (const auto& p : x_) {
    if (p.is_zero()) throw std::invalid_argument("sequence entries must be nonzero");
    if (!p.is_homogeneous())
      throw std::invalid_argument("sequence entry not homogeneous: " + p.to_string());
    if (!p.ring().compatible(m_.ring()))
      throw std::invalid_argument("sequence entry from a different ring");
  }
}

const Polynomial& GenfracContext::entry(int r) const {
  if (r < 1) throw std::out_of_range("sequence position is 1-based");
  return x_[std::min(r, n()) - 1];
}

int GenfracContext::entry_degree(int r) const { return *entry(r).homogeneous_degree(); }

std::optional<int> fraction_degree(const GenfracContext& ctx, const GeneralizedFraction& f) {
  if (f.numerator.is_zero()) return std::nullopt;
  int d = *f.numerator.homogeneous_degree();
  for (int t = 1; t <= f.den.arity; ++t) d -= f.den.exponents[t - 1] * ctx.entry_degree(t);
  return d;
}

GeneralizedFraction to_full_power(const GenfracContext& ctx, const GeneralizedFraction& f, int level) {
  for (int e : f.den.exponents)
    if (level < e) throw std::invalid_argument("target level below a denominator exponent");
  if (level < 1) throw std::invalid_argument("target level must be positive");
  GeneralizedFraction out;
  out.numerator = f.numerator.mul(full_power_multiplier(ctx, f, level));
  out.den = TriangularDenominator{f.den.arity, std::vector<int>(f.den.arity, level)};
  return out;
}

std::string render_fraction(const GenfracContext& ctx, const GeneralizedFraction& f) {
  std::string s = f.numerator.to_string() + " / (";
  for (int t = 1; t <= f.den.arity; ++t) {
    if (t > 1) s += ", ";
    int e = f.den.exponents[t - 1];
    if (e == 0) {
      s += "1";
      continue;
    }
    bool atom = ctx.entry(t).terms().size() == 1;
    std::string base = atom ? ctx.entry(t).to_string() : "(" + ctx.entry(t).to_string() + ")";
    s += e == 1 ? base : base + "^" + std::to_string(e);
  }
  return s + ")";
}

GfZeroResult gf_is_zero(const GenfracContext& ctx, const GeneralizedFraction& f, int level_max) {
  GfZeroResult res;
  int start = 1;
  for (int e : f.den.exponents) start = std::max(start, e);
  for (int level = start; level <= level_max; ++level) {
    ++res.levels_checked;
    std::vector<Polynomial> powers = denominator_powers(ctx, f.den.arity, level);
    std::size_t power_gen_count = 0;
    SubmoduleBasis span = power_span(ctx, powers, &power_gen_count);
    FreeVector lhs = f.numerator.mul(full_power_multiplier(ctx, f, level));
    MembershipResult mem = span.membership(lhs);
    if (mem.member) {
      res.status = GfZeroStatus::zero;
      res.certificate = GfZeroCertificate{level, std::move(lhs), std::move(powers),
                                          power_gen_count, std::move(mem)};
      return res;
    }
  }
  auto fdeg = fraction_degree(ctx, f);
  if (!fdeg) {
    /* Zero numerator always clears at the first level. */
    res.status = GfZeroStatus::zero;
    return res;
  }
  DegreewiseComplexModel sys = class_system(ctx, f.den.arity, *fdeg, level_max);
  HomologyCell cell = colimit_homology(sys, 0, *fdeg, 1);
  res.status = cell.stable ? GfZeroStatus::nonzero_at_bound : GfZeroStatus::undecided;
  return res;
}

bool replay_certificate(const GenfracContext& ctx, const GeneralizedFraction& f,
                        const GfZeroCertificate& cert) {
  int level = cert.level + 1;
  SubmoduleBasis span = power_span(ctx, denominator_powers(ctx, f.den.arity, level), nullptr);
  FreeVector lhs = f.numerator.mul(full_power_multiplier(ctx, f, level));
  return span.membership(lhs).member;
}

GfEqualResult gf_equal(const GenfracContext& ctx, const GeneralizedFraction& f1,
                       const GeneralizedFraction& f2, int level_max) {
  if (f1.den.arity != f2.den.arity)
    throw std::invalid_argument("fractions of different arity are not comparable");
  GfEqualResult res;
  auto d1 = fraction_degree(ctx, f1);
  auto d2 = fraction_degree(ctx, f2);
  if (d1 && d2 && *d1 != *d2) {
    /* Different internal degrees: equal only if both vanish. */
    GfZeroResult z1 = gf_is_zero(ctx, f1, level_max);
    GfZeroResult z2 = gf_is_zero(ctx, f2, level_max);
    res.decided = z1.status != GfZeroStatus::undecided && z2.status != GfZeroStatus::undecided;
    res.equal = z1.status == GfZeroStatus::zero && z2.status == GfZeroStatus::zero;
    res.difference = std::move(z1);
    return res;
  }
  int level = 1;
  for (int e : f1.den.exponents) level = std::max(level, e);
  for (int e : f2.den.exponents) level = std::max(level, e);
  GeneralizedFraction a = to_full_power(ctx, f1, level);
  GeneralizedFraction b = to_full_power(ctx, f2, level);
  GeneralizedFraction diff{a.numerator - b.numerator, a.den};
  res.difference = gf_is_zero(ctx, diff, level_max);
  res.decided = res.difference.status != GfZeroStatus::undecided;
  res.equal = res.difference.status == GfZeroStatus::zero;
  return res;
}

const GradedModule& GenfracComplex::level_module(int spot, int level) const {
  auto it = level_modules.find({spot, level});
  if (it == level_modules.end()) throw std::out_of_range("no level module at that spot");
  return it->second;
}

GenfracComplex build_genfrac_complex(const GenfracContext& ctx, std::pair<int, int> window,
                                     int level_max) {
  if (window.first > window.second) throw std::invalid_argument("empty degree window");
  if (level_max < 1) throw std::invalid_argument("level bound must be positive");
  const int n = ctx.n();
  const Field& field = ctx.module().ring().field();

  GenfracComplex gc{ctx.module(), ctx.sequence(), window, level_max, {}, {}, {}};
  gc.spot_weight.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i) gc.spot_weight[i] = gc.spot_weight[i - 1] + ctx.entry_degree(i);

  for (int l = 1; l <= level_max; ++l) {
    gc.level_modules.emplace(std::make_pair(0, l), ctx.module());
    for (int i = 1; i <= n; ++i) {
      gc.level_modules.emplace(
          std::make_pair(i, l),
          ctx.module().quotient_by(
              ideal_multiples(ctx.module().ambient(), denominator_powers(ctx, i, l))));
    }
  }

  gc.grid = DegreewiseComplexModel(field, n + 1, window, level_max);
  Scalar one = Scalar::one(field);

  for (int d = window.first; d <= window.second; ++d) {
    for (int l = 1; l <= level_max; ++l) {
      for (int i = 0; i <= n; ++i) {
        const GradedModule& q = gc.level_module(i, l);
        GradedPieceBasis p = q.piece(d + l * gc.spot_weight[i]);
        std::vector<std::string> labels;
        std::string den;
        if (i > 0) {
          den = " / (";
          for (int t = 1; t <= i; ++t) {
            if (t > 1) den += ", ";
            bool atom = ctx.entry(t).terms().size() == 1;
            std::string base = atom ? ctx.entry(t).to_string() : "(" + ctx.entry(t).to_string() + ")";
            den += l == 1 ? base : base + "^" + std::to_string(l);
          }
          den += ")";
        }
        for (const auto& [comp, mono] : p.monomials) labels.push_back(q.label(comp, mono) + den);
        gc.grid.set_cell(i, d, l, std::move(labels));
      }
    }
  }

  for (int d = window.first; d <= window.second; ++d) {
    for (int l = 1; l <= level_max; ++l) {
      for (int i = 0; i <= n; ++i) {
        const GradedModule& q = gc.level_module(i, l);
        int dq = d + l * gc.spot_weight[i];
        if (i < n) {
          const GradedModule& q2 = gc.level_module(i + 1, l);
          Scalar sign = i % 2 == 0 ? one : -one;
          gc.grid.set_diff(i, d, l,
                           mult_matrix(q, dq, q2, d + l * gc.spot_weight[i + 1],
                                       ctx.entry(i + 1).pow(l), sign));
        }
        if (l < level_max) {
          const GradedModule& qn = gc.level_module(i, l + 1);
          Polynomial carrier = ctx.module().ring().one();
          for (int t = 1; t <= i; ++t) carrier = carrier * ctx.entry(t);
          gc.grid.set_trans(i, d, l,
                            mult_matrix(q, dq, qn, d + (l + 1) * gc.spot_weight[i], carrier, one));
        }
      }
    }
  }

  gc.grid.verify_identities();
  return gc;
}

HomologyTable genfrac_homology(const std::vector<Polynomial>& x, const GradedModule& m,
                               std::pair<int, int> window, int level_max, int margin,
                               GroebnerOptions opts) {
  GenfracContext ctx(m, x, opts);
  GenfracComplex gc = build_genfrac_complex(ctx, window, level_max);
  return homology_table(gc.grid, margin);
}

std::vector<Scalar> fraction_class(const GenfracComplex& gc, const GenfracContext& ctx,
                                   const GeneralizedFraction& f, int level) {
  if (f.den.arity > ctx.n()) throw std::invalid_argument("fraction arity exceeds the sequence length");
  auto fdeg = fraction_degree(ctx, f);
  GeneralizedFraction full = to_full_power(ctx, f, level);
  const GradedModule& q = gc.level_module(f.den.arity, level);
  int degree = (fdeg ? *fdeg : gc.window.first) + level * gc.spot_weight[f.den.arity];
  if (!fdeg) return std::vector<Scalar>(q.piece(degree).dim(), Scalar::zero(q.ring().field()));
  return q.coords(q.piece(degree), full.numerator);
}

}  // namespace gfcech
