#include "gfcech/ring.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gfcech {

namespace {

struct ExpoCmpDesc {
  const std::vector<int>* weights;
  bool operator()(const Expo& a, const Expo& b) const { return cmp_grevlex(a, b, *weights) > 0; }
};

}  // namespace

Polynomial::Polynomial(Ring ring, std::vector<PolyTerm> terms, bool presorted)
    : ring_(std::move(ring)) {
  if (!ring_.valid()) {
    if (!terms.empty()) throw std::invalid_argument("terms without a ring");
    return;
  }
  if (presorted) {
    terms_ = std::move(terms);
    return;
  }
  std::map<Expo, Scalar, ExpoCmpDesc> acc{ExpoCmpDesc{&ring_.weights()}};
  for (auto& t : terms) {
    if (static_cast<int>(t.mono.size()) != ring_.nvars()) throw std::invalid_argument("exponent vector length");
    auto it = acc.find(t.mono);
    if (it == acc.end())
      acc.emplace(std::move(t.mono), std::move(t.coeff));
    else
      it->second = it->second + t.coeff;
  }
  for (auto& [m, c] : acc)
    if (!c.is_zero()) terms_.push_back({m, c});
}

const PolyTerm& Polynomial::leading_term() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero polynomial");
  return terms_.front();
}

void Polynomial::require_compatible(const Polynomial& o) const {
  if (!ring_.compatible(o.ring_)) throw std::invalid_argument("polynomials from incompatible rings");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  require_compatible(o);
  std::vector<PolyTerm> out;
  out.reserve(terms_.size() + o.terms_.size());
  const auto& w = ring_.weights();
  std::size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = cmp_grevlex(terms_[i].mono, o.terms_[j].mono, w);
    if (c > 0) {
      out.push_back(terms_[i++]);
    } else if (c < 0) {
      out.push_back(o.terms_[j++]);
    } else {
      Scalar s = terms_[i].coeff + o.terms_[j].coeff;
      if (!s.is_zero()) out.push_back({terms_[i].mono, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < terms_.size(); ++i) out.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) out.push_back(o.terms_[j]);
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::operator-() const {
  std::vector<PolyTerm> out = terms_;
  for (auto& t : out) t.coeff = -t.coeff;
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_compatible(o);
  if (is_zero()) return *this;
  if (o.is_zero()) return o;
  std::map<Expo, Scalar, ExpoCmpDesc> acc{ExpoCmpDesc{&ring_.weights()}};
  for (const auto& a : terms_) {
    for (const auto& b : o.terms_) {
      Expo m = mono_mul(a.mono, b.mono);
      Scalar c = a.coeff * b.coeff;
      auto it = acc.find(m);
      if (it == acc.end())
        acc.emplace(std::move(m), std::move(c));
      else
        it->second = it->second + c;
    }
  }
  std::vector<PolyTerm> out;
  for (auto& [m, c] : acc)
    if (!c.is_zero()) out.push_back({m, c});
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  if (c.is_zero()) return ring_.valid() ? ring_.zero() : Polynomial();
  std::vector<PolyTerm> out = terms_;
  for (auto& t : out) t.coeff = t.coeff * c;
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::mul_term(const Expo& m, const Scalar& c) const {
  if (c.is_zero()) return ring_.valid() ? ring_.zero() : Polynomial();
  std::vector<PolyTerm> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back({mono_mul(t.mono, m), t.coeff * c});
  return Polynomial(ring_, std::move(out), true);
}

Polynomial Polynomial::pow(int k) const {
  if (k < 0) throw std::invalid_argument("negative power");
  Polynomial r = ring_.one();
  for (int i = 0; i < k; ++i) r = r * *this;
  return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto& w = ring_.weights();
  int d = weighted_degree(terms_[0].mono, w);
  for (const auto& t : terms_)
    if (weighted_degree(t.mono, w) != d) return false;
  return true;
}

std::optional<int> Polynomial::homogeneous_degree() const {
  if (terms_.empty()) return std::nullopt;
  if (!is_homogeneous()) throw std::logic_error("polynomial is not homogeneous: " + to_string());
  return weighted_degree(terms_[0].mono, ring_.weights());
}

std::optional<int> Polynomial::top_degree() const {
  if (terms_.empty()) return std::nullopt;
  int d = weighted_degree(terms_[0].mono, ring_.weights());
  for (const auto& t : terms_) d = std::max(d, weighted_degree(t.mono, ring_.weights()));
  return d;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string s;
  const auto& vars = ring_.vars();
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    const auto& t = terms_[i];
    std::string c = t.coeff.to_string();
    bool neg = !c.empty() && c[0] == '-';
    if (i == 0) {
      if (neg) s += "-";
    } else {
      s += neg ? " - " : " + ";
    }
    if (neg) c = c.substr(1);
    std::string m = monomial_to_string(t.mono, vars);
    if (m == "1") {
      s += c;
    } else if (c == "1") {
      s += m;
    } else {
      s += c + "*" + m;
    }
  }
  return s;
}

}  // namespace gfcech
