#include <doctest.h>

#include "gfcech/comparison.hpp"
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

}  // namespace

TEST_CASE("the comparison keeps the leading prefix and kills the rest") {
  Ring r = qxy();
  GradedModule m = GradedModule::free_of({r, {0}});
  GenfracContext ctx(m, seq(r, {"x", "y"}));
  FreeVector num(m.ambient(), {p(r, "x^2")});

  GeneralizedFraction lead = theta(ctx, 2, {1, 2}, num, 3);
  CHECK(lead.numerator == num);
  CHECK(lead.den.exponents == std::vector<int>{3, 3});

  GeneralizedFraction off = theta(ctx, 1, {2}, num, 3);
  CHECK(off.numerator.is_zero());
  CHECK(off.den.exponents == std::vector<int>{3});

  GeneralizedFraction keep = theta(ctx, 1, {1}, num, 2);
  CHECK(keep.numerator == num);

  CHECK_THROWS_AS(theta(ctx, 0, {}, num, 3), std::invalid_argument);
  CHECK_THROWS_AS(theta(ctx, 2, {1}, num, 3), std::invalid_argument);
  CHECK_THROWS_AS(theta(ctx, 2, {2, 1}, num, 3), std::invalid_argument);
}

TEST_CASE("the comparison morphism commutes with both structures") {
  Ring r1 = Ring::polynomial(Field::rationals(), {"x"}, {1});
  GradedModule m1 = GradedModule::free_of({r1, {0}});
  GenfracContext ctx1(m1, {r1.var(0)});
  CechComplex c1 = build_cech({r1.var(0)}, m1, {-3, 1}, 5);
  GenfracComplex g1 = build_genfrac_complex(ctx1, {-3, 1}, 5);
  ModelMorphism th1 = build_theta(c1, g1);
  CHECK(th1.verify(c1.grid, g1.grid) > 0);
  for (int d = -3; d <= 1; ++d)
    for (int l = 1; l <= 5; ++l) {
      int n0 = c1.grid.dim(0, d, l);
      if (n0 > 0) CHECK(th1.at(c1.grid, g1.grid, 0, d, l) == Matrix::identity(r1.field(), n0));
      int n1 = c1.grid.dim(1, d, l);
      if (n1 > 0) CHECK(th1.at(c1.grid, g1.grid, 1, d, l) == Matrix::identity(r1.field(), n1));
    }

  Ring r = qxy();
  GradedModule m = GradedModule::free_of({r, {0}});
  GenfracContext ctx(m, seq(r, {"x", "y"}));
  CechComplex c2 = build_cech(seq(r, {"x", "y"}), m, {-3, 1}, 5);
  GenfracComplex g2 = build_genfrac_complex(ctx, {-3, 1}, 5);
  CHECK(build_theta(c2, g2).verify(c2.grid, g2.grid) > 0);

  GradedModule zero = GradedModule::cyclic(r, {r.one()});
  GenfracContext zctx(zero, seq(r, {"x", "y"}));
  CechComplex cz = build_cech(seq(r, {"x", "y"}), zero, {-2, 1}, 3);
  GenfracComplex gz = build_genfrac_complex(zctx, {-2, 1}, 3);
  build_theta(cz, gz).verify(cz.grid, gz.grid);

  GenfracComplex g_off = build_genfrac_complex(ctx, {-2, 1}, 5);
  CHECK_THROWS_AS(build_theta(c2, g_off), std::invalid_argument);
}

TEST_CASE("the comparison is a quasi-isomorphism on the bundled instances") {
  Ring r1 = Ring::polynomial(Field::rationals(), {"x"}, {1});
  GradedModule m1 = GradedModule::free_of({r1, {0}});
  QuasiIsoReport q1 = verify_quasi_isomorphism({r1.var(0)}, m1, {-4, 2}, 8, 2);
  CHECK(q1.hypothesis_met);
  CHECK(q1.global == CellVerdict::iso);
  CHECK(q1.identities_checked > 0);

  Ring r = qxy();
  GradedModule m2 = GradedModule::free_of({r, {0}});
  QuasiIsoReport q2 = verify_quasi_isomorphism(seq(r, {"x", "y"}), m2, {-4, 2}, 8, 2);
  CHECK(q2.hypothesis_met);
  CHECK(q2.global == CellVerdict::iso);
  for (const auto& cell : q2.cells) {
    CHECK(cell.verdict == CellVerdict::iso);
    if (cell.spot == 2) CHECK(cell.induced.tgt.dim == oracles::inverse_monomial_top_dim(cell.degree));
  }

  GradedModule m3 = GradedModule::cyclic(crossing(), {});
  const Ring& a = m3.ring();
  QuasiIsoReport q3 = verify_quasi_isomorphism(seq(a, {"x + y", "x - y"}), m3, {-4, 2}, 8, 2,
                                               seq(a, {"x", "y"}));
  CHECK(q3.hypothesis_met);
  CHECK(q3.global == CellVerdict::iso);
  for (const auto& cell : q3.cells) {
    if (cell.spot == 1)
      CHECK(cell.induced.src.dim == oracles::crossing_plane_h1_dim(cell.degree));
  }
}

TEST_CASE("a failed hypothesis labels the report without stopping it") {
  GradedModule m = GradedModule::cyclic(crossing(), {});
  const Ring& a = m.ring();
  QuasiIsoReport q = verify_quasi_isomorphism(seq(a, {"x", "y"}), m, {-3, 1}, 8, 2);
  CHECK(!q.hypothesis_met);
  CHECK(!q.cells.empty());
  CHECK(q.global == CellVerdict::not_iso);
  bool middle_breaks = false;
  for (const auto& cell : q.cells)
    if (cell.spot == 1 && cell.verdict == CellVerdict::not_iso) middle_breaks = true;
  CHECK(middle_breaks);
}

TEST_CASE("the top spot is an isomorphism even without the hypothesis") {
  GradedModule m = GradedModule::cyclic(crossing(), {});
  const Ring& a = m.ring();
  CHECK(!is_filter_regular(seq(a, {"x", "y"}), m, seq(a, {"x", "y"})).verdict);
  TopIsoReport rep = top_homology_iso_check(seq(a, {"x", "y"}), m, {-4, 2}, 8, 2);
  CHECK(rep.conclusive);
  CHECK(rep.all_iso);
  for (const auto& c : rep.cells) {
    CHECK(c.surjective_checked);
    CHECK(c.cell.induced.src.dim == 0);
    CHECK(c.cell.induced.tgt.dim == 0);
  }

  Ring r = qxy();
  GradedModule free = GradedModule::free_of({r, {0}});
  TopIsoReport pos = top_homology_iso_check(seq(r, {"x", "y"}), free, {-4, 1}, 8, 2);
  CHECK(pos.conclusive);
  CHECK(pos.all_iso);
  bool some_nonzero = false;
  for (const auto& c : pos.cells) {
    CHECK(c.surjective_checked);
    some_nonzero = some_nonzero || c.cell.induced.tgt.dim > 0;
  }
  CHECK(some_nonzero);

  GradedModule zero = GradedModule::cyclic(r, {r.one()});
  TopIsoReport triv = top_homology_iso_check(seq(r, {"x", "y"}), zero, {-2, 1}, 4, 2);
  CHECK(triv.conclusive);
  CHECK(triv.all_iso);
}

TEST_CASE("the two-element report carries checkable certificates") {
  Ring r = qxy();
  GradedModule free = GradedModule::free_of({r, {0}});
  TwoElementReport plain = two_element_case(seq(r, {"x", "y"}), free, {-3, 1}, 8, 2);
  CHECK(plain.hypothesis_met);
  CHECK(plain.conclusive);
  CHECK(plain.all_iso);
  CHECK(plain.surjectivity.empty());
  CHECK(plain.injectivity.empty());

  GradedModule m = GradedModule::cyclic(crossing(), {});
  const Ring& a = m.ring();
  TwoElementReport rot = two_element_case(seq(a, {"x + y", "x - y"}), m, {-3, 1}, 8, 2,
                                          seq(a, {"x", "y"}));
  CHECK(rot.hypothesis_met);
  CHECK(rot.conclusive);
  CHECK(rot.all_iso);
  CHECK(!rot.surjectivity.empty());
  for (const auto& sc : rot.surjectivity) {
    CHECK(sc.cycle_verified);
    CHECK(sc.preimage_verified);
    CHECK(sc.level_clear >= sc.level_star);
    CHECK(!sc.target_fraction.empty());
    CHECK(!sc.preimage.empty());
  }
  CHECK(rot.injectivity.empty());

  TwoElementReport bad = two_element_case(seq(a, {"x", "y"}), m, {-3, 1}, 8, 2);
  CHECK(!bad.hypothesis_met);
  CHECK(!bad.cells.empty());
  CHECK(!bad.all_iso);
  CHECK(!bad.injectivity.empty());
  for (const auto& ic : bad.injectivity) {
    CHECK(ic.maps_to_zero);
    CHECK(!ic.is_boundary);
    CHECK(!ic.cycle.empty());
  }

  CHECK_THROWS_AS(two_element_case(seq(r, {"x"}), free, {-2, 1}, 4, 2), std::invalid_argument);
}

TEST_CASE("short exact sequences stay exact at the top spot") {
  Ring r = qxy();
  GradedModule amod = GradedModule::free_of({r, {1}});
  GradedModule bmod = GradedModule::free_of({r, {0}});
  GradedModule cmod = GradedModule::cyclic(r, {p(r, "x + y")});
  std::vector<FreeVector> inj = {FreeVector(bmod.ambient(), {p(r, "x + y")})};
  std::vector<FreeVector> sur = {FreeVector(cmod.ambient(), {r.one()})};
  SesGfApplication rep =
      apply_gf_to_ses(amod, bmod, cmod, inj, sur, seq(r, {"x", "y"}), {-4, 2}, 8, 2);
  CHECK(rep.input_exact);
  CHECK(rep.input_failures.empty());
  CHECK(rep.hypothesis_met);
  CHECK(rep.last_entry_in_ideal);
  CHECK(rep.conclusive);
  CHECK(rep.exact_at_top);
  CHECK(rep.colimit.all_exact);
}

TEST_CASE("hypothesis failures are distinguished from exactness failures") {
  Ring r = qxy();
  GradedModule amod = GradedModule::free_of({r, {2}});
  GradedModule bmod = GradedModule::free_of({r, {0}});
  GradedModule cmod = GradedModule::cyclic(r, {p(r, "x*y")});
  std::vector<FreeVector> inj = {FreeVector(bmod.ambient(), {p(r, "x*y")})};
  std::vector<FreeVector> sur = {FreeVector(cmod.ambient(), {r.one()})};
  SesGfApplication rep =
      apply_gf_to_ses(amod, bmod, cmod, inj, sur, seq(r, {"x", "y"}), {-3, 1}, 6, 2);
  CHECK(rep.input_exact);
  CHECK(!rep.hypothesis_met);
  REQUIRE(!rep.hypothesis.steps.empty());
  CHECK(!rep.hypothesis.steps[0].contained);
  CHECK(rep.hypothesis.steps[0].witness.has_value());
}

TEST_CASE("degenerate and split sequences pass trivially") {
  Ring r = qxy();
  GradedModule zero = GradedModule::cyclic(r, {r.one()});
  GradedModule bmod = GradedModule::free_of({r, {0}});
  std::vector<FreeVector> inj = {bmod.ambient().zero()};
  std::vector<FreeVector> sur = {FreeVector(bmod.ambient(), {r.one()})};
  SesGfApplication left_zero =
      apply_gf_to_ses(zero, bmod, bmod, inj, sur, seq(r, {"x", "y"}), {-3, 1}, 6, 2);
  CHECK(left_zero.input_exact);
  CHECK(left_zero.hypothesis_met);
  CHECK(left_zero.conclusive);
  CHECK(left_zero.exact_at_top);

  GradedModule two = GradedModule::free_of({r, {0, 0}});
  GradedModule one = GradedModule::free_of({r, {0}});
  std::vector<FreeVector> split_inj = {FreeVector(two.ambient(), {r.one(), r.zero()})};
  std::vector<FreeVector> split_sur = {one.ambient().zero(),
                                       FreeVector(one.ambient(), {r.one()})};
  SesGfApplication split =
      apply_gf_to_ses(one, two, one, split_inj, split_sur, seq(r, {"x", "y"}), {-3, 1}, 6, 2);
  CHECK(split.input_exact);
  CHECK(split.hypothesis_met);
  CHECK(split.conclusive);
  CHECK(split.exact_at_top);
  CHECK(split.colimit.all_exact);
}

TEST_CASE("Koszul resolutions present their cyclic quotients") {
  Ring r = qxy();
  FreeResolution res = koszul_resolution(r, seq(r, {"x", "y"}));
  REQUIRE(res.modules.size() == 3);
  CHECK(res.modules[0].shifts == std::vector<int>{0});
  CHECK(res.modules[1].shifts == std::vector<int>{1, 1});
  CHECK(res.modules[2].shifts == std::vector<int>{2});
  REQUIRE(res.diffs.size() == 3);

  FreeVector top = res.diffs[2][0];
  FreeVector composed = res.diffs[1][0].mul(top.comp(0)) + res.diffs[1][1].mul(top.comp(1));
  CHECK(composed.is_zero());

  FreeModule f1{r, {0}};
  SubmoduleBasis ideal_xy(f1, {FreeVector(f1, {p(r, "x")}), FreeVector(f1, {p(r, "y")})});
  CHECK(res.target.relations().equals(ideal_xy));

  FreeResolution line = koszul_resolution(r, seq(r, {"x + y"}));
  REQUIRE(line.modules.size() == 2);
  CHECK(line.modules[1].shifts == std::vector<int>{1});

  CHECK_THROWS_AS(koszul_resolution(r, {r.zero()}), std::invalid_argument);
}

TEST_CASE("syzygy resolutions terminate over the polynomial ring and respect the cap") {
  Ring r = qxy();
  GradedModule points = GradedModule::cyclic(r, seq(r, {"x", "y"}));
  FreeResolution res = syzygy_resolution(points, 6);
  REQUIRE(res.modules.size() == 3);
  CHECK(res.modules[0].rank() == 1);
  CHECK(res.modules[1].rank() == 2);
  CHECK(res.modules[2].rank() == 1);

  GradedModule line = GradedModule::cyclic(r, {p(r, "x + y")});
  FreeResolution lres = syzygy_resolution(line, 6);
  CHECK(lres.modules.size() == 2);

  GradedModule axis = GradedModule::cyclic(crossing(), {p(crossing(), "x")});
  CHECK_THROWS_AS(syzygy_resolution(axis, 3), std::runtime_error);
}

TEST_CASE("Tor of the top fraction module vanishes in positive indices") {
  Ring r = qxy();
  std::vector<Polynomial> x = seq(r, {"x", "y"});

  FreeResolution kres = koszul_resolution(r, {p(r, "x + y")});
  TorReport kt = tor_vanishing_check(kres, x, 1, {-3, 1}, 6, 2);
  CHECK(kt.conclusive);
  CHECK(kt.vanishing);
  CHECK(kt.tor0_matches);
  CHECK(kt.resolution_length == 1);
  for (const auto& [key, cell] : kt.tor)
    if (key.first >= 1) CHECK(cell.dim == 0);

  FreeResolution sres = syzygy_resolution(GradedModule::cyclic(r, {p(r, "x + y")}), 6);
  TorReport st = tor_vanishing_check(sres, x, 1, {-3, 1}, 6, 2);
  CHECK(st.conclusive);
  CHECK(st.vanishing);
  CHECK(st.tor0_matches);

  /* The free module keeps dim-growing top quotients, so the level ladder
     never plateaus and the report stays honestly inconclusive. */
  FreeResolution fres = syzygy_resolution(GradedModule::free_of({r, {0}}), 6);
  TorReport ft = tor_vanishing_check(fres, x, 1, {-3, 1}, 6, 2);
  CHECK(ft.resolution_length == 0);
  CHECK(!ft.conclusive);
  CHECK(!ft.vanishing);
  CHECK(!ft.tor0_matches);

  TorReport vac = tor_vanishing_check(kres, x, 0, {-3, 1}, 6, 2);
  CHECK(vac.vanishing);
  CHECK(vac.tor0_matches);
  CHECK(vac.i_max == 0);
}

TEST_CASE("Tor checks require the filter-regular hypothesis") {
  Ring a = crossing();
  GradedModule m = GradedModule::cyclic(a, {});
  FreeResolution res{{m.ambient()}, {std::vector<FreeVector>{}}, m};
  CHECK_THROWS_WITH_AS(tor_vanishing_check(res, seq(a, {"x", "y"}), 1, {-2, 1}, 4, 2),
                       doctest::Contains("filter-regular"), std::invalid_argument);
}
