#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "klcalc/rational.hpp"

namespace klcalc {

/// A vector in the ambient epsilon basis. Arithmetic is componentwise.
class Weight {
 public:
  Weight() = default;
  explicit Weight(std::size_t dim) : coords_(dim) {}
  explicit Weight(std::vector<Rational> coords) : coords_(std::move(coords)) {}
  Weight(std::initializer_list<Rational> coords) : coords_(coords) {}

  static Weight unit(std::size_t dim, std::size_t i);

  std::size_t dim() const { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  Rational& operator[](std::size_t i) { return coords_[i]; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  /// Euclidean dot product; the normalized form lives in RootSystem.
  Rational dot(const Weight& o) const;

  Weight& operator+=(const Weight& o);
  Weight& operator-=(const Weight& o);
  Weight& operator*=(const Rational& s);
  friend Weight operator+(Weight a, const Weight& b) { return a += b; }
  friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
  friend Weight operator*(const Rational& s, Weight a) { return a *= s; }
  Weight operator-() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight& a, const Weight& b) { return a.coords_ <=> b.coords_; }

  /// "[1,1/2,0]" style label.
  std::string str() const;
  std::size_t hash() const;

 private:
  std::vector<Rational> coords_;
};

std::ostream& operator<<(std::ostream& os, const Weight& w);

struct WeightHash {
  std::size_t operator()(const Weight& w) const noexcept { return w.hash(); }
};

}  // namespace klcalc
