#include <doctest.h>

#include "gfcech/genfrac.hpp"
#include "gfcech/cech.hpp"
#include "gfcech/session.hpp"
#include "oracles.hpp"

#include <stdexcept>

using namespace gfcech;

namespace {

Ring qxy() { return Ring::polynomial(Field::rationals(), {"x", "y"}, {1, 1}); }

Ring crossing() {
  Ring r = qxy();
  return r.quotient({parse_polynomial(r, "x*y")});
}

Polynomial p(const Ring& r, const std::string& s) { return parse_polynomial(r, s); }

std::vector<Polynomial> seq(const Ring& r, const std::vector<std::string>& ss) {
  std::vector<Polynomial> out;
  for (const auto& s : ss) out.push_back(p(r, s));
  return out;
}

GeneralizedFraction frac(const GradedModule& m, const std::string& num, std::vector<int> exps) {
  FreeVector v(m.ambient(), {p(m.ring(), num)});
  int arity = static_cast<int>(exps.size());
  return {v, validate_denominator(arity, std::move(exps))};
}

std::vector<Scalar> apply_vec(const Matrix& m, const std::vector<Scalar>& v) {
  std::vector<Scalar> out(m.rows(), Scalar::zero(m.field()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[r] = out[r] + m.at(r, c) * v[c];
  return out;
}

int table_dim(const HomologyTable& t, int spot, int degree) {
  auto it = t.find({spot, degree});
  return it == t.end() ? 0 : it->second.dim;
}

}  // namespace

TEST_CASE("denominators must be a positive prefix followed by zeros") {
  TriangularDenominator full = validate_denominator(2, {2, 3});
  CHECK(full.arity == 2);
  CHECK(full.exponents == std::vector<int>{2, 3});
  TriangularDenominator trail = validate_denominator(2, {1, 0});
  CHECK(trail.exponents == std::vector<int>{1, 0});
  CHECK_THROWS_AS(validate_denominator(2, {0, 2}), std::invalid_argument);
  CHECK_THROWS_AS(validate_denominator(2, {1, -1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_denominator(2, {1}), std::invalid_argument);
  CHECK_THROWS_AS(validate_denominator(0, {}), std::invalid_argument);
}

TEST_CASE("fraction degrees subtract the denominator weights") {
  Ring r = qxy();
  GradedModule m = GradedModule::free_of({r, {0}});
  GenfracContext ctx(m, seq(r, {"x", "y"}));
  CHECK(*fraction_degree(ctx, frac(m, "x", {2, 3})) == -4);
  CHECK(*fraction_degree(ctx, frac(m, "x^2 + y^2", {1, 1})) == 0);
  CHECK(!fraction_degree(ctx, frac(m, "0", {1, 1})).has_value());
  CHECK(render_fraction(ctx, frac(m, "x", {2, 3})) == "x / (x^2, y^3)");
}

TEST_CASE("full-power conversion multiplies along the diagonal") {
  Ring r = qxy();
  GradedModule m = GradedModule::free_of({r, {0}});
  GenfracContext ctx(m, seq(r, {"x", "y"}));

  GeneralizedFraction f = frac(m, "x", {1, 0});
  GeneralizedFraction g = to_full_power(ctx, f, 2);
  CHECK(g.den.exponents == std::vector<int>{2, 2});
  CHECK(g.numerator == FreeVector(m.ambient(), {p(r, "x^2*y^2")}));
  CHECK(*fraction_degree(ctx, f) == *fraction_degree(ctx, g));

  GeneralizedFraction already = frac(m, "y", {2, 2});
  GeneralizedFraction same = to_full_power(ctx, already, 2);
  CHECK(same.numerator == already.numerator);

  GeneralizedFraction zero = frac(m, "0", {1, 1});
  CHECK(to_full_power(ctx, zero, 3).numerator.is_zero());

  CHECK_THROWS_AS(to_full_power(ctx, frac(m, "x", {2, 3}), 2), std::invalid_argument);
}

TEST_CASE("vanishing of fractions over the plane") {
  Ring r = qxy();
  GradedModule m = GradedModule::free_of({r, {0}});
  GenfracContext ctx(m, seq(r, {"x", "y"}));

  /* Over the plane the ambient piece keeps growing with the level, so the
     side-check can never promote a survivor to nonzero-at-bound. */
  GfZeroResult nz = gf_is_zero(ctx, frac(m, "1", {1, 0}), 6);
  CHECK(nz.status == GfZeroStatus::undecided);
  CHECK(nz.levels_checked == 6);
  CHECK(!nz.certificate.has_value());

  GfZeroResult z = gf_is_zero(ctx, frac(m, "x", {1, 0}), 6);
  REQUIRE(z.status == GfZeroStatus::zero);
  REQUIRE(z.certificate.has_value());
  CHECK(z.certificate->level == 1);
  CHECK(replay_certificate(ctx, frac(m, "x", {1, 0}), *z.certificate));

  GfZeroResult z0 = gf_is_zero(ctx, frac(m, "0", {2, 3}), 6);
  REQUIRE(z0.status == GfZeroStatus::zero);
  REQUIRE(z0.certificate.has_value());
  CHECK(z0.certificate->level == 3);
  CHECK(replay_certificate(ctx, frac(m, "0", {2, 3}), *z0.certificate));
}

TEST_CASE("vanishing sees the quotient relations") {
  GradedModule m = GradedModule::cyclic(crossing(), {});
  const Ring& a = m.ring();
  GenfracContext ctx(m, seq(a, {"x", "y"}));

  GfZeroResult z = gf_is_zero(ctx, frac(m, "y", {1}), 6);
  REQUIRE(z.status == GfZeroStatus::zero);
  CHECK(z.certificate->level == 2);
  CHECK(replay_certificate(ctx, frac(m, "y", {1}), *z.certificate));

  /* x survives every level, but the pieces keep dimension 2 while the
     forward images have rank 1, so no stabilization certificate appears. */
  GfZeroResult nz = gf_is_zero(ctx, frac(m, "x", {1}), 6);
  CHECK(nz.status == GfZeroStatus::undecided);
  CHECK(!nz.certificate.has_value());

  GfZeroResult top = gf_is_zero(ctx, frac(m, "x + y", {1, 1}), 6);
  CHECK(top.status == GfZeroStatus::zero);
}

TEST_CASE("survivors are certified once the levels stabilize") {
  Ring r = qxy();
  GradedModule line = GradedModule::cyclic(r, {p(r, "y")});
  GenfracContext ctx(line, seq(r, {"x"}));

  GfZeroResult nz = gf_is_zero(ctx, frac(line, "1", {1}), 6);
  CHECK(nz.status == GfZeroStatus::nonzero_at_bound);
  CHECK(nz.levels_checked == 6);
  CHECK(!nz.certificate.has_value());

  GfZeroResult z = gf_is_zero(ctx, frac(line, "y", {1}), 6);
  REQUIRE(z.status == GfZeroStatus::zero);
  CHECK(z.certificate->level == 1);
  CHECK(replay_certificate(ctx, frac(line, "y", {1}), *z.certificate));
}

TEST_CASE("equality of fractions up to the representation") {
  Ring r = qxy();
  GradedModule m = GradedModule::free_of({r, {0}});
  GenfracContext ctx(m, seq(r, {"x", "y"}));

  GeneralizedFraction f = frac(m, "x^2 - y^2", {2, 2});
  GfEqualResult same = gf_equal(ctx, f, f, 6);
  CHECK(same.decided);
  CHECK(same.equal);

  GfEqualResult trans = gf_equal(ctx, frac(m, "x + y", {2, 2}), frac(m, "x^2*y + x*y^2", {3, 3}), 6);
  CHECK(trans.decided);
  CHECK(trans.equal);

  GfEqualResult full = gf_equal(ctx, f, to_full_power(ctx, f, 5), 7);
  CHECK(full.decided);
  CHECK(full.equal);

  GfEqualResult diff = gf_equal(ctx, frac(m, "1", {1, 1}), frac(m, "0", {1, 1}), 6);
  CHECK(diff.decided == (diff.difference.status != GfZeroStatus::undecided));
  CHECK(!diff.equal);

  CHECK_THROWS_AS(gf_equal(ctx, f, frac(m, "x", {1, 0, 0}), 6), std::invalid_argument);
}

TEST_CASE("the boundary maps multiply by powers with alternating signs") {
  Ring r = qxy();
  GradedModule m = GradedModule::free_of({r, {0}});
  GenfracContext ctx(m, seq(r, {"x", "y"}));
  GenfracComplex gf = build_genfrac_complex(ctx, {-2, 1}, 4);

  Field q = r.field();
  for (int d = -2; d <= 1; ++d)
    for (int l = 1; l <= 4; ++l) {
      CHECK(gf.grid.diff(0, d, l) ==
            mult_matrix(m, d, gf.level_module(1, l), d + l, p(r, "x").pow(l), Scalar::one(q)));
      CHECK(gf.grid.diff(1, d, l) ==
            mult_matrix(gf.level_module(1, l), d + l, gf.level_module(2, l), d + 2 * l,
                        p(r, "y").pow(l), Scalar::of(q, -1)));
    }
  CHECK(gf.spot_weight == std::vector<int>{0, 1, 2});
}

TEST_CASE("boundary identities hold on a three-element random instance") {
  Ring r3 = Ring::polynomial(Field::rationals(), {"x", "y", "z"}, {1, 1, 1});
  GradedModule m = GradedModule::cyclic(r3, {p(r3, "x*y - z^2")});
  GenfracContext ctx(m, seq(r3, {"x", "y", "z"}));
  GenfracComplex gf = build_genfrac_complex(ctx, {-2, 1}, 3);
  CHECK(gf.grid.spots() == 4);
  CHECK(gf.grid.verify_identities() > 0);
}

TEST_CASE("generalized-fraction homology matches the localization model") {
  Ring r = qxy();
  GradedModule free = GradedModule::free_of({r, {0}});
  HomologyTable gf_t = genfrac_homology(seq(r, {"x", "y"}), free, {-4, 1}, 6, 2);
  HomologyTable cech_t = local_cohomology(seq(r, {"x", "y"}), free, {-4, 1}, 6, 2);
  for (int k = 0; k <= 2; ++k)
    for (int d = -4; d <= 1; ++d) CHECK(table_dim(gf_t, k, d) == table_dim(cech_t, k, d));

  GradedModule m = GradedModule::cyclic(crossing(), {});
  const Ring& a = m.ring();
  HomologyTable gf_a =
      genfrac_homology(seq(a, {"x + y", "x - y"}), m, {-4, 1}, 8, 2);
  HomologyTable cech_a =
      local_cohomology(seq(a, {"x + y", "x - y"}), m, {-4, 1}, 8, 2);
  for (int k = 0; k <= 2; ++k)
    for (int d = -4; d <= 1; ++d) CHECK(table_dim(gf_a, k, d) == table_dim(cech_a, k, d));
  CHECK(table_dim(gf_a, 1, -1) == 2);
  CHECK(table_dim(gf_a, 1, 0) == 1);

  GradedModule zero = GradedModule::cyclic(r, {r.one()});
  HomologyTable zt = genfrac_homology(seq(r, {"x", "y"}), zero, {-2, 1}, 4, 2);
  for (const auto& [key, cell] : zt) CHECK(cell.dim == 0);
}

TEST_CASE("fraction classes land in the model and follow transitions") {
  Ring r = qxy();
  GradedModule m = GradedModule::free_of({r, {0}});
  GenfracContext ctx(m, seq(r, {"x", "y"}));
  GenfracComplex gf = build_genfrac_complex(ctx, {-3, 1}, 5);

  GeneralizedFraction one_over = frac(m, "1", {1, 1});
  int deg = *fraction_degree(ctx, one_over);
  REQUIRE(deg == -2);
  for (int l = 1; l <= 4; ++l) {
    std::vector<Scalar> cl = fraction_class(gf, ctx, one_over, l);
    bool nonzero = false;
    for (const auto& s : cl) nonzero = nonzero || !s.is_zero();
    CHECK(nonzero);
    std::vector<Scalar> next = fraction_class(gf, ctx, one_over, l + 1);
    CHECK(apply_vec(gf.grid.trans(2, deg, l), cl) == next);
  }

  GeneralizedFraction killed = frac(m, "x", {1, 0});
  for (int l = 1; l <= 3; ++l) {
    std::vector<Scalar> cl = fraction_class(gf, ctx, killed, l);
    for (const auto& s : cl) CHECK(s.is_zero());
  }
}
