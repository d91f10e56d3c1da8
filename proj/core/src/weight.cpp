#include "klcalc/weight.hpp"

#include <stdexcept>

namespace klcalc {

namespace {
void require_same_dim(const Weight& a, const Weight& b) {
  if (a.dim() != b.dim()) {
    throw std::invalid_argument("weight dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                                std::to_string(b.dim()));
  }
}
}  // namespace

Weight Weight::unit(std::size_t dim, std::size_t i) {
  Weight w(dim);
  w[i] = 1;
  return w;
}

bool Weight::is_zero() const {
  for (const auto& c : coords_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Rational Weight::dot(const Weight& o) const {
  require_same_dim(*this, o);
  Rational s;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (!coords_[i].is_zero() && !o.coords_[i].is_zero()) s += coords_[i] * o.coords_[i];
  }
  return s;
}

Weight& Weight::operator+=(const Weight& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += o.coords_[i];
  return *this;
}

Weight& Weight::operator-=(const Weight& o) {
  require_same_dim(*this, o);
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= o.coords_[i];
  return *this;
}

Weight& Weight::operator*=(const Rational& s) {
  for (auto& c : coords_) c *= s;
  return *this;
}

Weight Weight::operator-() const {
  Weight w(*this);
  for (auto& c : w.coords_) c = -c;
  return w;
}

std::string Weight::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ',';
    s += coords_[i].str();
  }
  return s + "]";
}

std::size_t Weight::hash() const {
  std::size_t h = coords_.size();
  for (const auto& c : coords_) h = h * 31 + c.hash();
  return h;
}

std::ostream& operator<<(std::ostream& os, const Weight& w) { return os << w.str(); }

}  // namespace klcalc
