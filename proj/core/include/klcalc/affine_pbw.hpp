#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "klcalc/lie_realization.hpp"

namespace klcalc {

/// x(n) = x (x) t^n for a basis element x of g.
struct LoopGenerator {
  std::uint32_t base = 0;
  std::int32_t mode = 0;

  /// PBW order: mode ascending, then basis index.
  friend auto operator<=>(const LoopGenerator& a, const LoopGenerator& b) {
    if (auto c = a.mode <=> b.mode; c != 0) return c;
    return a.base <=> b.base;
  }
  friend bool operator==(const LoopGenerator&, const LoopGenerator&) = default;
};

/// Normal-ordered product of negative-mode generators applied to the vacuum.
using Monomial = std::vector<LoopGenerator>;

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

Weight monomial_weight(const LieRealization& L, const Monomial& m);
long monomial_degree(const Monomial& m);

/// Finite combination of PBW monomials at a fixed level, weight and conformal degree.
class StateVector {
 public:
  using Terms = std::map<Monomial, Rational>;

  StateVector(Rational level, Weight weight, Rational degree)
      : level_(std::move(level)), weight_(std::move(weight)), degree_(std::move(degree)) {}
  static StateVector vacuum(const LieRealization& L, Rational level);

  const Rational& level() const { return level_; }
  const Weight& weight() const { return weight_; }
  const Rational& degree() const { return degree_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  /// Unchecked; the monomial must be normal ordered with negative modes.
  void add(const Monomial& m, const Rational& c);
  StateVector& operator+=(const StateVector& o);
  StateVector& operator-=(const StateVector& o);
  StateVector scaled(const Rational& s) const;
  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  Rational level_;
  Weight weight_;
  Rational degree_;
  Terms terms_;
};

/// Every monomial normal ordered with negative modes and of the declared weight and degree.
bool is_homogeneous(const LieRealization& L, const StateVector& v);

/// c with a == c * b, if any.
std::optional<Rational> proportionality(const StateVector& a, const StateVector& b);

/// Raised when a graded component exceeds the configured size bound.
class CapExceeded : public std::runtime_error {
 public:
  CapExceeded(std::size_t cap, const std::string& what)
      : std::runtime_error(what), cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

inline constexpr std::size_t kDefaultCap = 200000;

/// Loop-algebra action on V^k(g) with memoized normal ordering.
///
/// The memo table is owned by the object; use one instance per thread.
class AffineAction {
 public:
  AffineAction(const LieRealization& L, Rational level) : L_(L), level_(std::move(level)) {}

  const LieRealization& realization() const { return L_; }
  const Rational& level() const { return level_; }

  /// g . m|0>, expanded in normal-ordered monomials.
  const StateVector::Terms& act(const LoopGenerator& g, const Monomial& m);
  StateVector apply(const LoopGenerator& g, const StateVector& v);
  StateVector apply(const LieElement& x, int mode, const StateVector& v);
  std::size_t cache_size() const { return cache_.size(); }

 private:
  struct Key {
    LoopGenerator g;
    Monomial m;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept;
  };

  void accumulate(StateVector::Terms& out, const LoopGenerator& g, const Monomial& m, const Rational& c);

  const LieRealization& L_;
  Rational level_;
  std::unordered_map<Key, StateVector::Terms, KeyHash> cache_;
};

/// Single-shot convenience; the level is v.level().
StateVector apply(const LieRealization& L, const LoopGenerator& g, const StateVector& v);

/// Product x_1(n_1) ... x_r(n_r)|0>, applied right to left.
StateVector create(const LieRealization& L, const Rational& level, const std::vector<LoopGenerator>& gens);

/// All normal-ordered monomials of the given weight and conformal degree.
/// Throws CapExceeded when more than `cap` monomials exist.
std::vector<Monomial> graded_basis(const LieRealization& L, const Weight& weight, int degree,
                                   std::size_t cap = kDefaultCap);

/// The operators e_{alpha_i}(0) for simple alpha_i, then e_{-theta}(1).
std::vector<LoopGenerator> raising_operators(const LieRealization& L);

struct SingularityCheck {
  bool singular = false;
  std::optional<LoopGenerator> failing;
  std::optional<StateVector> witness;  // nonzero image under `failing`
};

SingularityCheck is_singular(const LieRealization& L, const StateVector& v);

/// Basis of the common kernel of raising_operators on the graded component.
std::vector<StateVector> singular_kernel(const LieRealization& L, const Rational& level, const Weight& weight,
                                         int degree, std::size_t cap = kDefaultCap);

std::string generator_label(const LieRealization& L, const LoopGenerator& g);

}  // namespace klcalc
