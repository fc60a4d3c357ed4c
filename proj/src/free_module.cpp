#include "gfcech/free_module.hpp"

#include <stdexcept>

namespace gfcech {

FreeVector FreeModule::zero() const {
  std::vector<Polynomial> comps(rank(), ring.zero());
  return FreeVector(*this, std::move(comps));
}

FreeVector FreeModule::basis_vector(int t) const {
  if (t < 0 || t >= rank()) throw std::out_of_range("basis vector index");
  std::vector<Polynomial> comps(rank(), ring.zero());
  comps[t] = ring.one();
  return FreeVector(*this, std::move(comps));
}

int cmp_modterm(int comp_a, const Expo& a, int comp_b, const Expo& b, const std::vector<int>& weights) {
  if (comp_a != comp_b) return comp_a < comp_b ? 1 : -1;
  return cmp_grevlex(a, b, weights);
}

FreeVector::FreeVector(FreeModule mod, std::vector<Polynomial> comps) : mod_(std::move(mod)) {
  if (static_cast<int>(comps.size()) != mod_.rank()) throw std::invalid_argument("component count mismatch");
  for (auto& c : comps) {
    if (c.is_zero() && !c.ring().valid()) c = mod_.ring.zero();
    if (!c.ring().compatible(mod_.ring)) throw std::invalid_argument("component from incompatible ring");
  }
  comps_ = std::move(comps);
}

bool FreeVector::is_zero() const {
  for (const auto& c : comps_)
    if (!c.is_zero()) return false;
  return true;
}

std::optional<ModTerm> FreeVector::leading_term() const {
  std::optional<ModTerm> best;
  for (int t = 0; t < rank(); ++t) {
    if (comps_[t].is_zero()) continue;
    const auto& lt = comps_[t].leading_term();
    if (!best) {
      best = ModTerm{t, lt.mono, lt.coeff};
    } else if (cmp_modterm(t, lt.mono, best->comp, best->mono, mod_.ring.weights()) > 0) {
      best = ModTerm{t, lt.mono, lt.coeff};
    }
  }
  return best;
}

FreeVector FreeVector::operator+(const FreeVector& o) const {
  if (!mod_.compatible(o.mod_)) throw std::invalid_argument("free vectors from incompatible modules");
  std::vector<Polynomial> comps;
  comps.reserve(comps_.size());
  for (int t = 0; t < rank(); ++t) comps.push_back(comps_[t] + o.comps_[t]);
  return FreeVector(mod_, std::move(comps));
}

FreeVector FreeVector::operator-(const FreeVector& o) const { return *this + (-o); }

FreeVector FreeVector::operator-() const {
  std::vector<Polynomial> comps;
  comps.reserve(comps_.size());
  for (const auto& c : comps_) comps.push_back(-c);
  return FreeVector(mod_, std::move(comps));
}

FreeVector FreeVector::scaled(const Scalar& c) const {
  std::vector<Polynomial> comps;
  comps.reserve(comps_.size());
  for (const auto& p : comps_) comps.push_back(p.scaled(c));
  return FreeVector(mod_, std::move(comps));
}

FreeVector FreeVector::mul(const Polynomial& f) const {
  std::vector<Polynomial> comps;
  comps.reserve(comps_.size());
  for (const auto& p : comps_) comps.push_back(p * f);
  return FreeVector(mod_, std::move(comps));
}

FreeVector FreeVector::mul_term(const Expo& m, const Scalar& c) const {
  std::vector<Polynomial> comps;
  comps.reserve(comps_.size());
  for (const auto& p : comps_) comps.push_back(p.mul_term(m, c));
  return FreeVector(mod_, std::move(comps));
}

bool FreeVector::operator==(const FreeVector& o) const {
  if (rank() != o.rank()) return false;
  for (int t = 0; t < rank(); ++t)
    if (comps_[t] != o.comps_[t]) return false;
  return true;
}

bool FreeVector::is_homogeneous() const {
  std::optional<int> d;
  for (int t = 0; t < rank(); ++t) {
    if (comps_[t].is_zero()) continue;
    if (!comps_[t].is_homogeneous()) return false;
    int dt = *comps_[t].homogeneous_degree() + mod_.shifts[t];
    if (d && *d != dt) return false;
    d = dt;
  }
  return true;
}

std::optional<int> FreeVector::homogeneous_degree() const {
  if (!is_homogeneous()) throw std::logic_error("vector is not homogeneous: " + to_string());
  for (int t = 0; t < rank(); ++t)
    if (!comps_[t].is_zero()) return *comps_[t].homogeneous_degree() + mod_.shifts[t];
  return std::nullopt;
}

std::string FreeVector::to_string() const {
  if (rank() == 1) return comps_[0].to_string();
  std::string s = "(";
  for (int t = 0; t < rank(); ++t) {
    if (t) s += ", ";
    s += comps_[t].to_string();
  }
  return s + ")";
}

}  // namespace gfcech
