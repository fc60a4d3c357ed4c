#include <doctest.h>

#include "gfcech/filter_regular.hpp"
#include "gfcech/session.hpp"

#include <random>
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

TEST_CASE("a regular sequence is filter-regular") {
  Ring r = qxy();
  GradedModule m = GradedModule::free_of({r, {0}});
  FilterRegularReport rep = is_filter_regular(seq(r, {"x", "y"}), m, seq(r, {"x", "y"}));
  CHECK(rep.verdict);
  REQUIRE(rep.steps.size() == 2);
  for (const auto& step : rep.steps) {
    CHECK(step.contained);
    CHECK(!step.witness.has_value());
  }
}

TEST_CASE("the coordinate sequence fails on the crossing plane with a witness") {
  Ring a = crossing();
  GradedModule m = GradedModule::cyclic(a, {});
  FilterRegularReport rep = is_filter_regular(seq(a, {"x", "y"}), m, seq(a, {"x", "y"}));
  CHECK(!rep.verdict);
  REQUIRE(!rep.steps.empty());
  const FilterRegularStep& bad = rep.steps[0];
  CHECK(!bad.contained);
  REQUIRE(bad.witness.has_value());
  const FreeVector& w = *bad.witness;
  CHECK(!m.nf(w).is_zero());
  CHECK(m.nf(w.mul(p(a, "x"))).is_zero());
}

TEST_CASE("the rotated sequence passes on the crossing plane") {
  Ring a = crossing();
  GradedModule m = GradedModule::cyclic(a, {});
  FilterRegularReport rep =
      is_filter_regular(seq(a, {"x + y", "x - y"}), m, seq(a, {"x", "y"}));
  CHECK(rep.verdict);
}

TEST_CASE("entries outside the ideal are a distinct precondition failure") {
  Ring r = qxy();
  GradedModule m = GradedModule::free_of({r, {0}});
  CHECK_THROWS_WITH_AS(is_filter_regular(seq(r, {"x"}), m, seq(r, {"y"})),
                       doctest::Contains("does not lie in the ideal"), std::invalid_argument);
}

TEST_CASE("verdicts are invariant under unit rescaling of the entries") {
  Ring a = crossing();
  GradedModule m = GradedModule::cyclic(a, {});
  std::vector<Polynomial> ideal = seq(a, {"x", "y"});
  auto scaled = [&](const std::vector<std::string>& ss, long c1, long c2) {
    std::vector<Polynomial> v = seq(a, ss);
    v[0] = v[0].scaled(Scalar::of(a.field(), c1));
    v[1] = v[1].scaled(Scalar::of(a.field(), c2));
    return v;
  };
  CHECK(is_filter_regular(scaled({"x", "y"}, 3, -2), m, ideal).verdict ==
        is_filter_regular(seq(a, {"x", "y"}), m, ideal).verdict);
  CHECK(is_filter_regular(scaled({"x + y", "x - y"}, -5, 7), m, ideal).verdict ==
        is_filter_regular(seq(a, {"x + y", "x - y"}), m, ideal).verdict);
}

TEST_CASE("order dependence is detected and reported") {
  Ring a = crossing();
  GradedModule m = GradedModule::cyclic(a, {});
  std::vector<Polynomial> ideal = seq(a, {"x", "y"});

  OrderCheckReport bad = is_unconditioned(seq(a, {"x + y", "x"}), m, ideal);
  CHECK(!bad.verdict);
  REQUIRE(bad.failing_order.size() == 2);
  std::vector<Polynomial> failing = {p(a, bad.failing_order[0] == 0 ? "x + y" : "x"),
                                     p(a, bad.failing_order[1] == 0 ? "x + y" : "x")};
  CHECK(failing[0] == p(a, "x"));
  CHECK(!is_filter_regular(failing, m, ideal).verdict);
  CHECK(!bad.failing_report.verdict);

  OrderCheckReport good = is_unconditioned(seq(a, {"x + y", "x - y"}), m, ideal);
  CHECK(good.verdict);
  CHECK(good.orders_checked == 2);
}

TEST_CASE("everything is filter-regular on the zero module") {
  Ring a = crossing();
  GradedModule zero = GradedModule::cyclic(a, {a.one()});
  OrderCheckReport rep = is_unconditioned(seq(a, {"x", "y"}), zero, seq(a, {"x", "y"}));
  CHECK(rep.verdict);
  CHECK(rep.orders_checked == 2);
}

TEST_CASE("the permutation guard refuses long sequences") {
  Ring r = qxy();
  GradedModule m = GradedModule::free_of({r, {0}});
  std::vector<Polynomial> long_seq(7, p(r, "x"));
  CHECK_THROWS_AS(is_unconditioned(long_seq, m, seq(r, {"x", "y"})), std::invalid_argument);
}

TEST_CASE("powering the entries preserves the verdict") {
  Ring r = qxy();
  GradedModule free = GradedModule::free_of({r, {0}});
  PowerStabilityReport ps = check_power_stability(seq(r, {"x", "y"}), {2, 3}, free,
                                                  seq(r, {"x", "y"}));
  CHECK(ps.agree);
  CHECK(ps.base.verdict);
  CHECK(ps.powered.verdict);

  Ring a = crossing();
  GradedModule m = GradedModule::cyclic(a, {});
  PowerStabilityReport neg = check_power_stability(seq(a, {"x", "y"}), {2, 2}, m,
                                                   seq(a, {"x", "y"}));
  CHECK(neg.agree);
  CHECK(!neg.base.verdict);
  CHECK(!neg.powered.verdict);

  PowerStabilityReport triv = check_power_stability(seq(a, {"x + y", "x - y"}), {1, 1}, m,
                                                    seq(a, {"x", "y"}));
  CHECK(triv.agree);
  CHECK(triv.base.verdict == triv.powered.verdict);

  CHECK_THROWS_AS(check_power_stability(seq(r, {"x", "y"}), {0, 1}, free, seq(r, {"x", "y"})),
                  std::invalid_argument);
  CHECK_THROWS_AS(check_power_stability(seq(r, {"x", "y"}), {2}, free, seq(r, {"x", "y"})),
                  std::invalid_argument);
}

TEST_CASE("synthesis repairs the coordinate sequence on the crossing plane") {
  Ring a = crossing();
  GradedModule m = GradedModule::cyclic(a, {});
  SynthesisResult res = synthesize_generators(seq(a, {"x", "y"}), m, 20, 0);
  REQUIRE(res.success);
  CHECK(res.ideal_matches);
  CHECK(res.verification.verdict);
  CHECK(res.seed == 0);
  CHECK(res.trials <= 20);

  OrderCheckReport recheck = is_unconditioned(res.sequence, m, seq(a, {"x", "y"}));
  CHECK(recheck.verdict);

  SynthesisResult res2 = synthesize_generators(seq(a, {"x", "y"}), m, 20, 0);
  REQUIRE(res2.success);
  REQUIRE(res2.sequence.size() == res.sequence.size());
  for (std::size_t i = 0; i < res.sequence.size(); ++i)
    CHECK(res.sequence[i] == res2.sequence[i]);
  CHECK(res.trials == res2.trials);
}

TEST_CASE("already unconditioned input is returned unchanged") {
  Ring r = qxy();
  GradedModule free = GradedModule::free_of({r, {0}});
  SynthesisResult res = synthesize_generators(seq(r, {"x", "y"}), free, 20, 5);
  REQUIRE(res.success);
  CHECK(res.trials == 2);
  REQUIRE(res.sequence.size() == 2);
  CHECK(res.sequence[0] == p(r, "x"));
  CHECK(res.sequence[1] == p(r, "y"));

  Ring a = crossing();
  GradedModule m = GradedModule::cyclic(a, {});
  SynthesisResult rot = synthesize_generators(seq(a, {"x + y", "x - y"}), m, 20, 9);
  REQUIRE(rot.success);
  CHECK(rot.trials == 2);
  CHECK(rot.sequence[0] == p(a, "x + y"));
  CHECK(rot.sequence[1] == p(a, "x - y"));
}
