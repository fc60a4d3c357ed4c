#include "gfcech/ring.hpp"

#include "gfcech/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gfcech {

int weighted_degree(const Expo& e, const std::vector<int>& weights) {
  int d = 0;
  for (std::size_t i = 0; i < e.size(); ++i) d += e[i] * weights[i];
  return d;
}

bool mono_divides(const Expo& a, const Expo& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Expo mono_mul(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Expo mono_div(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i] = a[i] - b[i];
    if (r[i] < 0) throw std::invalid_argument("monomial division with remainder");
  }
  return r;
}

Expo mono_lcm(const Expo& a, const Expo& b) {
  Expo r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

int cmp_grevlex(const Expo& a, const Expo& b, const std::vector<int>& weights) {
  int da = weighted_degree(a, weights);
  int db = weighted_degree(b, weights);
  if (da != db) return da > db ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    int diff = a[i] - b[i];
    if (diff != 0) return diff < 0 ? 1 : -1;
  }
  return 0;
}

Ring Ring::polynomial(Field field, std::vector<std::string> vars, std::vector<int> weights) {
  if (vars.empty()) throw std::invalid_argument("ring needs at least one variable");
  if (vars.size() != weights.size()) throw std::invalid_argument("variable/weight count mismatch");
  for (int w : weights)
    if (w <= 0) throw std::invalid_argument("variable weights must be strictly positive");
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.empty()) throw std::invalid_argument("empty variable name");
    if (!seen.insert(v).second) throw std::invalid_argument("duplicate variable name: " + v);
  }
  auto d = std::make_shared<RingData>();
  d->field = field;
  d->vars = std::move(vars);
  d->weights = std::move(weights);
  return Ring(std::move(d));
}

Ring Ring::quotient(std::vector<Polynomial> defining) const {
  std::vector<Polynomial> gens = this->defining();
  for (auto& f : defining) {
    if (f.is_zero()) continue;
    if (!f.ring().compatible(*this)) throw std::invalid_argument("defining generator from a different ring");
    if (!f.is_homogeneous()) throw std::invalid_argument("defining generator not homogeneous: " + f.to_string());
    gens.push_back(std::move(f));
  }
  Ring base = Ring::polynomial(field(), vars(), weights());
  FreeModule f1{base, {0}};
  std::vector<FreeVector> vecs;
  vecs.reserve(gens.size());
  for (const auto& g : gens) vecs.push_back(FreeVector(f1, {g}));
  SubmoduleBasis ideal(f1, std::move(vecs));
  std::vector<Polynomial> gb;
  for (const auto& v : ideal.groebner_basis()) gb.push_back(v.comp(0));

  auto d = std::make_shared<RingData>();
  d->field = field();
  d->vars = vars();
  d->weights = weights();
  d->defining = std::move(gens);
  d->defining_gb = std::move(gb);
  return Ring(std::move(d));
}

int Ring::nvars() const { return static_cast<int>(d_->vars.size()); }
const std::vector<std::string>& Ring::vars() const { return d_->vars; }
const std::vector<int>& Ring::weights() const { return d_->weights; }
const Field& Ring::field() const { return d_->field; }
const std::vector<Polynomial>& Ring::defining() const { return d_->defining; }
const std::vector<Polynomial>& Ring::defining_gb() const { return d_->defining_gb; }
bool Ring::is_quotient() const { return !d_->defining.empty(); }

bool Ring::compatible(const Ring& o) const {
  if (d_ == o.d_) return true;
  if (!d_ || !o.d_) return false;
  return d_->field == o.d_->field && d_->vars == o.d_->vars && d_->weights == o.d_->weights;
}

bool Ring::same_presentation(const Ring& o) const {
  if (d_ == o.d_) return true;
  if (!compatible(o)) return false;
  if (d_->defining.size() != o.d_->defining.size()) return false;
  for (std::size_t i = 0; i < d_->defining.size(); ++i)
    if (d_->defining[i] != o.d_->defining[i]) return false;
  return true;
}

Polynomial Ring::zero() const { return Polynomial(*this, {}); }

Polynomial Ring::one() const { return constant(1); }

Polynomial Ring::var(int i) const {
  if (i < 0 || i >= nvars()) throw std::out_of_range("variable index");
  Expo e(nvars(), 0);
  e[i] = 1;
  return monomial(std::move(e), Scalar::one(field()));
}

Polynomial Ring::monomial(Expo e, Scalar c) const {
  if (static_cast<int>(e.size()) != nvars()) throw std::invalid_argument("exponent vector length");
  for (int k : e)
    if (k < 0) throw std::invalid_argument("negative exponent");
  if (c.is_zero()) return zero();
  return Polynomial(*this, {{std::move(e), std::move(c)}}, true);
}

Polynomial Ring::constant(const Scalar& c) const {
  if (c.is_zero()) return zero();
  return Polynomial(*this, {{Expo(nvars(), 0), c}}, true);
}

Polynomial Ring::constant(long long n) const { return constant(Scalar::of(field(), n)); }

std::string Ring::describe() const {
  std::string s = field().describe() + "[";
  for (int i = 0; i < nvars(); ++i) {
    if (i) s += ",";
    s += vars()[i];
  }
  s += "]";
  if (is_quotient()) {
    s += "/(";
    for (std::size_t i = 0; i < defining().size(); ++i) {
      if (i) s += ", ";
      s += defining()[i].to_string();
    }
    s += ")";
  }
  return s;
}

std::string monomial_to_string(const Expo& e, const std::vector<std::string>& vars) {
  std::string s;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += "*";
    s += vars[i];
    if (e[i] > 1) s += "^" + std::to_string(e[i]);
  }
  return s.empty() ? "1" : s;
}

}  // namespace gfcech
