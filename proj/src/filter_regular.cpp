#include "gfcech/filter_regular.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace gfcech {

namespace {

void require_entries_in_ideal(const std::vector<Polynomial>& x, const Ring& ring,
                              const std::vector<Polynomial>& a, GroebnerOptions opts) {
  FreeModule f1{ring, {0}};
  std::vector<FreeVector> gens;
  for (const auto& p : a) gens.push_back(FreeVector(f1, {p}));
  SubmoduleBasis ideal(f1, std::move(gens), opts);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_homogeneous())
      throw std::invalid_argument("sequence entry " + std::to_string(i + 1) +
                                  " is not homogeneous: " + x[i].to_string());
    if (!ideal.normal_form(FreeVector(f1, {x[i]})).is_zero())
      throw std::invalid_argument("sequence entry " + std::to_string(i + 1) +
                                  " does not lie in the ideal: " + x[i].to_string());
  }
}

}  // namespace

FilterRegularReport is_filter_regular(const std::vector<Polynomial>& x, const GradedModule& m,
                                      const std::vector<Polynomial>& a, GroebnerOptions opts) {
  require_entries_in_ideal(x, m.ring(), a, opts);
  const FreeModule& f = m.ambient();
  const std::vector<FreeVector>& rels = m.relations().generators();

  FilterRegularReport rep;
  rep.verdict = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    std::vector<Polynomial> previous(x.begin(), x.begin() + i);
    SubmoduleBasis n(f, ideal_multiples(f, previous), opts);
    FilterRegularStep step;
    step.index = static_cast<int>(i);
    SubmoduleBasis col = colon(n, x[i], rels, opts);
    SubmoduleBasis sat = saturate(n, a, rels, &step.saturation_exponent, opts);
    step.colon_generators = col.generators();
    step.saturation_generators = sat.generators();

    std::vector<FreeVector> sat_rels = sat.generators();
    sat_rels.insert(sat_rels.end(), rels.begin(), rels.end());
    SubmoduleBasis sat_in_m(f, std::move(sat_rels), opts);
    step.contained = true;
    for (const auto& gvec : step.colon_generators) {
      if (!sat_in_m.normal_form(gvec).is_zero()) {
        step.contained = false;
        step.witness = gvec;
        break;
      }
    }
    rep.verdict = rep.verdict && step.contained;
    rep.steps.push_back(std::move(step));
  }
  return rep;
}

OrderCheckReport is_unconditioned(const std::vector<Polynomial>& x, const GradedModule& m,
                                  const std::vector<Polynomial>& a, GroebnerOptions opts) {
  if (x.size() > 6) throw std::invalid_argument("unconditioned check limited to sequences of length 6");
  std::vector<int> order(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) order[i] = static_cast<int>(i);

  OrderCheckReport rep;
  rep.verdict = true;
  do {
    std::vector<Polynomial> permuted;
    permuted.reserve(x.size());
    for (int i : order) permuted.push_back(x[i]);
    FilterRegularReport r = is_filter_regular(permuted, m, a, opts);
    ++rep.orders_checked;
    if (!r.verdict) {
      rep.verdict = false;
      rep.failing_order = order;
      rep.failing_report = std::move(r);
      return rep;
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return rep;
}

PowerStabilityReport check_power_stability(const std::vector<Polynomial>& x,
                                           const std::vector<int>& exponents, const GradedModule& m,
                                           const std::vector<Polynomial>& a, GroebnerOptions opts) {
  if (exponents.size() != x.size()) throw std::invalid_argument("one exponent per sequence entry");
  for (int e : exponents)
    if (e < 1) throw std::invalid_argument("exponents must be positive");
  PowerStabilityReport rep;
  rep.exponents = exponents;
  rep.base = is_filter_regular(x, m, a, opts);
  std::vector<Polynomial> powered;
  powered.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) powered.push_back(x[i].pow(exponents[i]));
  rep.powered = is_filter_regular(powered, m, a, opts);
  rep.agree = rep.base.verdict == rep.powered.verdict;
  return rep;
}

SynthesisResult synthesize_generators(const std::vector<Polynomial>& a, const GradedModule& m,
                                      int max_trials, std::uint64_t seed, GroebnerOptions opts) {
  const Ring& ring = m.ring();
  for (const auto& g : a)
    if (!g.is_homogeneous() || g.is_zero())
      throw std::invalid_argument("ideal generators must be nonzero homogeneous");

  SynthesisResult res;
  res.seed = seed;
  std::mt19937_64 rng(seed);
  auto draw_coeff = [&]() {
    if (ring.field().is_rationals()) {
      std::uniform_int_distribution<int> dist(-3, 3);
      return Scalar::of(ring.field(), dist(rng));
    }
    std::uniform_int_distribution<std::uint64_t> dist(0, ring.field().characteristic() - 1);
    return Scalar::of(ring.field(), static_cast<long long>(dist(rng)));
  };

  const int n = static_cast<int>(a.size());
  FreeModule f1{ring, {0}};
  auto ideal_of = [&](const std::vector<Polynomial>& gens) {
    std::vector<FreeVector> vecs;
    for (const auto& g : gens) vecs.push_back(FreeVector(f1, {g}));
    return SubmoduleBasis(f1, std::move(vecs), opts);
  };
  SubmoduleBasis target = ideal_of(a);

  auto perturbed = [&](int i) {
    Polynomial candidate = a[i];
    int da = *a[i].homogeneous_degree();
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      int dj = *a[j].homogeneous_degree();
      auto monos = monomials_of_degree(ring.weights(), da - dj);
      if (monos.empty()) continue;
      std::uniform_int_distribution<std::size_t> pick(0, monos.size() - 1);
      Expo mono = monos[pick(rng)];
      candidate = candidate + a[j].mul_term(mono, draw_coeff());
    }
    return candidate;
  };

  while (res.trials < max_trials) {
    std::vector<Polynomial> chosen;
    bool attempt_ok = true;
    for (int i = 0; i < n && attempt_ok; ++i) {
      bool accepted = false;
      bool first = true;
      while (res.trials < max_trials && !accepted) {
        Polynomial candidate = first ? a[i] : perturbed(i);
        first = false;
        ++res.trials;
        if (candidate.is_zero()) continue;
        std::vector<Polynomial> extended = chosen;
        extended.push_back(candidate);
        if (is_unconditioned(extended, m, a, opts).verdict) {
          chosen = std::move(extended);
          accepted = true;
        }
      }
      attempt_ok = accepted;
    }
    if (!attempt_ok) break;

    res.verification = is_unconditioned(chosen, m, a, opts);
    res.ideal_matches = target.equals(ideal_of(chosen));
    if (res.verification.verdict && res.ideal_matches) {
      res.success = true;
      res.sequence = std::move(chosen);
      return res;
    }
  }
  res.success = false;
  return res;
}

}  // namespace gfcech
